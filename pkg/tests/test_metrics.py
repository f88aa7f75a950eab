"""h-index, citation counts, and set-level metrics against the goldens."""

from __future__ import annotations

import json
import random

import pytest

from scholarslice import (
    CombinationSpec,
    SetMetrics,
    citation_count,
    combine,
    h_index,
    paper_h_index,
    set_metrics,
)

from conftest import FIXTURES, make_corpus, paper_row
from oracles import h_scan


class TestHIndex:
    @pytest.mark.parametrize(
        "counts,h",
        [
            ([], 0),
            ([0], 0),
            ([1], 1),
            ([5], 1),
            ([1, 1, 1], 1),
            ([2, 2], 2),
            ([3, 0, 6, 1, 5], 3),
            ([10, 8, 5, 4, 3], 4),
            ([25, 8, 5, 3, 3, 3], 3),
            ([4, 4, 4, 4], 4),
            ([4, 4, 4, 4, 4], 4),
        ],
    )
    def test_known_values(self, counts, h):
        assert h_index(counts) == h

    def test_order_invariant(self):
        counts = [3, 0, 6, 1, 5]
        rng = random.Random(1)
        for _ in range(10):
            rng.shuffle(counts)
            assert h_index(counts) == 3

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            h_index([3, -1, 2])

    def test_against_definitional_scan(self):
        rng = random.Random(707)
        for _ in range(500):
            n = rng.randint(0, 80)
            counts = [rng.randint(0, 40) for _ in range(n)]
            assert h_index(counts) == h_scan(counts)

    def test_bounds(self):
        rng = random.Random(708)
        for _ in range(200):
            counts = [rng.randint(0, 30) for _ in range(rng.randint(0, 50))]
            h = h_index(counts)
            assert 0 <= h <= len(counts)
            if counts:
                assert h <= max(counts)

    def test_monotone_in_additions(self):
        rng = random.Random(709)
        for _ in range(200):
            counts = [rng.randint(0, 30) for _ in range(rng.randint(0, 40))]
            h = h_index(counts)
            assert h_index(counts + [rng.randint(0, 30)]) >= h
            bumped = list(counts)
            if bumped:
                i = rng.randrange(len(bumped))
                bumped[i] += rng.randint(1, 5)
                assert h_index(bumped) >= h


def chain_corpus():
    """p1 <- p2,p3,p4 ; p2 <- p3 ; citers of citers give p1 a per-paper h of 1."""
    rows = [paper_row(p) for p in ("p1", "p2", "p3", "p4")]
    links = [("p2", "p1"), ("p3", "p1"), ("p4", "p1"), ("p3", "p2")]
    return make_corpus(rows, links, [])


class TestPaperMetrics:
    def test_citation_count(self):
        c = chain_corpus()
        assert citation_count(c, "p1") == 3
        assert citation_count(c, "p2") == 1
        assert citation_count(c, "p4") == 0

    def test_paper_h_index(self):
        c = chain_corpus()
        # citers of p1 are p2 (1 citation), p3 (0), p4 (0) -> h = 1
        assert paper_h_index(c, "p1") == 1
        assert paper_h_index(c, "p4") == 0

    def test_paper_h_index_two(self):
        rows = [paper_row(p) for p in ("a", "b", "c", "x", "y", "z", "w")]
        links = [("b", "a"), ("c", "a"), ("x", "b"), ("y", "b"), ("x", "c"), ("z", "c")]
        c = make_corpus(rows, links, [])
        # citers of a: b (2 citations) and c (2 citations) -> h = 2
        assert paper_h_index(c, "a") == 2


class TestSetMetrics:
    def test_empty_set(self):
        c = make_corpus([paper_row("p1")], [], [
            {"scholar_id": "s1", "name": "A", "paper_ids": []},
        ])
        ps = combine(c, CombinationSpec.from_strings({"s1": "and"}))
        assert set_metrics(c, ps) == SetMetrics(0, 0, 0)

    def test_double_counts_internal_citations(self):
        # total_citations sums per-paper citation counts, so a link inside
        # the set still contributes to its cited paper
        rows = [paper_row(p) for p in ("p1", "p2")]
        c = make_corpus(rows, [("p2", "p1")], [
            {"scholar_id": "s1", "name": "A", "paper_ids": ["p1", "p2"]},
        ])
        ps = combine(c, CombinationSpec.from_strings({"s1": "and"}))
        m = set_metrics(c, ps)
        assert m == SetMetrics(paper_count=2, total_citations=1, h_index=1)

    def test_golden_expressions(self, big_corpus):
        goldens = json.loads((FIXTURES / "golden_set_metrics.json").read_text())
        assert len(goldens) == 10
        for case in goldens:
            spec = CombinationSpec.from_strings(case["labels"])
            ps = combine(big_corpus, spec)
            m = set_metrics(big_corpus, ps)
            expected = case["expected"]
            assert ps.label == expected["label"], case["name"]
            assert m.paper_count == expected["paper_count"], case["name"]
            assert m.total_citations == expected["total_citations"], case["name"]
            assert m.h_index == expected["h_index"], case["name"]
