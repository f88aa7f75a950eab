"""Seeded random-instance generators shared by the property tests."""

from __future__ import annotations

import random

from scholarslice import Corpus, VenueTable, build_corpus
from scholarslice.venues import CcfRank, VenueRecord

GEN_VENUES = VenueTable(
    [
        VenueRecord("g-alpha", "Annals of Alpha Structures", ("AAS",), "theoretical computer science", CcfRank.A),
        VenueRecord("g-beta", "Beta Systems Letters", ("BSL",), "computer architecture and systems", CcfRank.B),
        VenueRecord("g-gamma", "Gamma Graphics Quarterly", ("GGQ",), "computer graphics and multimedia", CcfRank.C),
        VenueRecord("g-delta", "Delta Learning Archive", ("DLA",), "artificial intelligence", CcfRank.A),
        VenueRecord("g-omega", "Omega Interdisciplinary Notes", (), None, CcfRank.UNRANKED),
    ]
)
_VENUE_SPELLINGS = [rec.canonical for rec in GEN_VENUES.records]


def random_corpus(
    rng: random.Random,
    max_papers: int = 200,
    max_scholars: int = 8,
    link_factor: float = 2.0,
    none_year_p: float = 0.12,
    none_venue_p: float = 0.2,
) -> tuple[Corpus, dict[str, set[str]]]:
    """A small random corpus plus the raw ownership sets for oracles."""
    n = rng.randint(1, max_papers)
    papers = []
    for i in range(n):
        papers.append(
            {
                "id": f"r{i:04d}",
                "title": f"Random Paper {i}",
                "year": None if rng.random() < none_year_p else rng.randint(2000, 2020),
                "venue": None if rng.random() < none_venue_p else rng.choice(_VENUE_SPELLINGS),
                "authors": [],
            }
        )
    ids = [p["id"] for p in papers]

    links: set[tuple[str, str]] = set()
    if n > 1:
        target = int(n * link_factor)
        for _ in range(target * 2):
            if len(links) >= target:
                break
            a, b = rng.choice(ids), rng.choice(ids)
            if a != b:
                links.add((a, b))

    k = rng.randint(1, max_scholars)
    owner_sets: dict[str, set[str]] = {}
    profiles = []
    for s in range(k):
        sid = f"s{s:02d}"
        owned = {pid for pid in ids if rng.random() < rng.uniform(0.05, 0.6)}
        owner_sets[sid] = owned
        profiles.append({"scholar_id": sid, "name": f"Scholar {s:02d}", "paper_ids": sorted(owned)})

    corpus = build_corpus(papers, sorted(links), GEN_VENUES, profiles)
    return corpus, owner_sets


def random_labels(rng: random.Random, scholar_ids: list[str]) -> dict[str, str]:
    """Random operator labels with at least one positive selector."""
    ops = ["and", "or", "not", "ignore"]
    labels: dict[str, str] = {}
    for sid in scholar_ids:
        if rng.random() < 0.7:
            labels[sid] = rng.choice(ops)
    positives = [s for s, op in labels.items() if op in ("and", "or")]
    if not positives:
        sid = rng.choice(scholar_ids)
        labels[sid] = rng.choice(["and", "or"])
    return labels
