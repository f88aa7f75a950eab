"""
Loading a corpus from the four raw files
========================================

A corpus snapshot is built from papers (JSONL), citation links (CSV),
a venue table (JSON), and scholar profiles (JSONL). Loading is strict
about paper ids and forgiving about everything else: malformed rows are
dropped and counted, never silently repaired.
"""

from pathlib import Path

from scholarslice import load_corpus

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"

corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)

# The load report says what was kept and what was dropped, by rule.
print("load report:")
for key, value in sorted(corpus.report.as_dict().items()):
    print(f"  {key:28s} {value}")

print()
print(f"papers:   {len(corpus.papers)}")
print(f"links:    {len(corpus.links)}")
print(f"scholars: {len(corpus.scholars)}")

# Records come back as frozen dataclasses; missing year or venue is the
# UNKNOWN sentinel, which stringifies as "Unknown".
paper = corpus.paper("p0001")
print()
print(f"p0001: {paper.title!r}, year {paper.year}, venue {paper.venue}")
print(f"  cited by {len(corpus.citing_papers(paper.id))} papers")

scholar = corpus.scholar("s01")
print(f"{scholar.id}: {scholar.name}, {len(scholar.paper_ids)} papers on file")
