#!/usr/bin/env python3
"""Generate the large test fixture corpus (fixtures/corpus/).

Seeded and deterministic. Produces ~1000 papers, ~5000 citation links, 12
scholars with overlapping paper sets, a venues file (copy of the packaged
catalogue), and ten stored combination expressions used by the golden-metrics
tests. All rows are valid; the small handwritten fixture under
fixtures/small/ is the one that exercises malformed-row handling.

Run from the repository root:  python tools/make_fixture_corpus.py
"""

from __future__ import annotations

import json
import random
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures" / "corpus"
SEED = 20250817

N_PAPERS = 1000
N_LINKS = 5000

SCHOLARS = [
    ("s01", "Ada Meridian"),
    ("s02", "Bruno Castell"),
    ("s03", "Chen Ruolan"),
    ("s04", "Devika Narang"),
    ("s05", "Emil Forsberg"),
    ("s06", "Farida Aziz"),
    ("s07", "Goro Takeda"),
    ("s08", "Hana Malik"),
    ("s09", "Ines Duarte"),
    ("s10", "Jakob Lindqvist"),
    ("s11", "Katya Morozova"),
    ("s12", "Luis Obando"),
]

TITLE_HEADS = [
    "On the Structure of", "Revisiting", "A Study of", "Scalable Methods for",
    "Notes on", "Measuring", "Learning to Rank", "Beyond", "Decomposing",
    "An Empirical View of", "Bounds for", "Adaptive", "Interactive",
]
TITLE_TAILS = [
    "Citation Networks", "Sparse Retrieval", "Venue Drift", "Temporal Corpora",
    "Collaboration Graphs", "Index Maintenance", "Scholarly Impact",
    "Peer Review Queues", "Topic Cascades", "Archive Deduplication",
    "Metric Stability", "Query Workloads", "Annotation Budgets",
]

EXPRESSIONS = [
    {"name": "single-and", "labels": {"s01": "and"}},
    {"name": "pair-and", "labels": {"s01": "and", "s02": "and"}},
    {"name": "pair-or", "labels": {"s02": "or", "s05": "or"}},
    {"name": "and-minus-not", "labels": {"s01": "and", "s04": "not"}},
    {"name": "or-triple", "labels": {"s06": "or", "s07": "or", "s08": "or"}},
    {"name": "and-with-orgroup", "labels": {"s06": "and", "s08": "or", "s09": "or"}},
    {"name": "ignore-is-noop", "labels": {"s02": "and", "s05": "ignore", "s03": "and"}},
    {"name": "everything-widens", "labels": {"s10": "or", "s11": "or", "s12": "or", "s01": "or"}},
    {"name": "narrow-triple-and", "labels": {"s02": "and", "s03": "and", "s04": "and"}},
    {"name": "mixed-all-ops", "labels": {"s05": "and", "s07": "or", "s09": "or", "s11": "not", "s12": "ignore"}},
]


def pick_venue_pool(venues: list[dict], rng: random.Random) -> list[tuple[str, list[str]]]:
    """~40 venues whose spellings papers will carry, weighted toward anchors."""
    anchors = [v for v in venues if len(v["id"]) <= 6][:25]
    synth = [v for v in venues if len(v["id"]) > 6]
    pool = anchors + rng.sample(synth, 18)
    return [(v["id"], [v["canonical"]] + v["aliases"]) for v in pool]


def main() -> None:
    rng = random.Random(SEED)
    OUT.mkdir(parents=True, exist_ok=True)

    packaged = ROOT / "src" / "scholarslice" / "data" / "ccf_venues.json"
    shutil.copyfile(packaged, OUT / "venues.json")
    venues = json.loads(packaged.read_text("utf-8"))
    venue_pool = pick_venue_pool(venues, rng)

    scholar_names = [name for _, name in SCHOLARS]
    paper_ids = [f"p{i:04d}" for i in range(1, N_PAPERS + 1)]

    papers = []
    for pid in paper_ids:
        title = f"{rng.choice(TITLE_HEADS)} {rng.choice(TITLE_TAILS)}"
        year = rng.randint(1995, 2024) if rng.random() > 0.04 else None
        roll = rng.random()
        if roll < 0.72:
            _, spellings = rng.choice(venue_pool)
            venue = rng.choice(spellings)
        elif roll < 0.82:
            venue = f"Proceedings of the {rng.randint(1, 40)}th Gathering on Unlisted Matters"
        else:
            venue = None
        authors = rng.sample(scholar_names, rng.randint(0, 3))
        papers.append({"id": pid, "title": title, "year": year, "venue": venue, "authors": authors})

    # Ownership: each scholar draws a contiguous-ish block plus scattered picks,
    # giving real overlap between neighbours for coauthor stats.
    profiles = []
    for idx, (sid, name) in enumerate(SCHOLARS):
        block_start = (idx * N_PAPERS) // 14
        block = paper_ids[block_start : block_start + rng.randint(55, 95)]
        scattered = rng.sample(paper_ids, rng.randint(15, 45))
        owned = sorted(set(block) | set(scattered))
        profiles.append({"scholar_id": sid, "name": name, "paper_ids": owned})

    # Citations with a skewed in-degree so h-indexes are interesting.
    weights = [1.0 / (i + 1) ** 0.6 for i in range(N_PAPERS)]
    links: set[tuple[str, str]] = set()
    while len(links) < N_LINKS:
        cited = rng.choices(paper_ids, weights=weights, k=1)[0]
        citing = rng.choice(paper_ids)
        if citing != cited:
            links.add((citing, cited))
    ordered_links = sorted(links)
    rng.shuffle(ordered_links)

    with open(OUT / "papers.jsonl", "w", encoding="utf-8") as fh:
        for row in papers:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    with open(OUT / "citations.csv", "w", encoding="utf-8") as fh:
        fh.write("citing,cited\n")
        for citing, cited in ordered_links:
            fh.write(f"{citing},{cited}\n")
    with open(OUT / "profiles.jsonl", "w", encoding="utf-8") as fh:
        for row in profiles:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    with open(ROOT / "fixtures" / "expressions.json", "w", encoding="utf-8") as fh:
        json.dump(EXPRESSIONS, fh, indent=1)
        fh.write("\n")

    print(f"wrote {len(papers)} papers, {len(ordered_links)} links, {len(profiles)} profiles -> {OUT}")


if __name__ == "__main__":
    main()
