"""Citation metrics: h-index, per-paper h-index, and set summaries."""

from pathlib import Path

from scholarslice import (
    CombinationSpec,
    combine,
    h_index,
    load_corpus,
    paper_h_index,
    set_metrics,
)

# The h-index of a plain list of citation counts. Five papers with
# [10, 8, 5, 4, 3] citations give h = 4: four papers have >= 4 each.
print("h_index([10, 8, 5, 4, 3]) =", h_index([10, 8, 5, 4, 3]))
print("h_index([]) =", h_index([]))

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"
corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)

# A paper's own h-index scores the papers citing it: how substantial are
# the citers themselves?
print()
print("per-paper h-index of p0001:", paper_h_index(corpus, "p0001"))

# SetMetrics bundles the three headline numbers for any combined set.
# Total citations count incoming links per member paper, so a link whose
# citing and cited papers are both members is counted once per member.
for labels in ({"s01": "and"}, {"s01": "and", "s02": "and"}, {"s02": "or", "s05": "or"}):
    ps = combine(corpus, CombinationSpec.from_strings(labels))
    m = set_metrics(corpus, ps)
    print(f"{ps.label:35s} papers={m.paper_count:<4d} citations={m.total_citations:<5d} h={m.h_index}")
