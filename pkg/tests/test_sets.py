"""Set combination, labels, co-author stats, timelines, and year filtering."""

from __future__ import annotations

import random

import pytest

from scholarslice import (
    UNKNOWN,
    CombinationSpec,
    OperatorLabel,
    coauthor_stats,
    combine,
    filter_years,
    format_label,
    papers_of,
    timeline,
)
from scholarslice.errors import InvalidRange, NoPositiveSelector, UnknownScholarId

from conftest import make_corpus, paper_row
from genutil import random_corpus, random_labels
from oracles import brute_combine


def build(profile_sets: dict[str, list[str]], names: dict[str, str] | None = None, n_papers: int = 10):
    """Corpus with papers q00..q09 and the given scholar -> paper ids map."""
    rows = [paper_row(f"q{i:02d}", year=2000 + i) for i in range(n_papers)]
    profiles = [
        {"scholar_id": sid, "name": (names or {}).get(sid, sid.upper()), "paper_ids": pids}
        for sid, pids in profile_sets.items()
    ]
    return make_corpus(rows, [], profiles)


class TestCombine:
    def test_single_and(self):
        c = build({"s1": ["q00", "q01"], "s2": ["q01", "q02"]})
        spec = CombinationSpec.from_strings({"s1": "and"})
        assert combine(c, spec).ids == {"q00", "q01"}

    def test_and_intersects(self):
        c = build({"s1": ["q00", "q01", "q02"], "s2": ["q01", "q02", "q03"]})
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "and"})
        assert combine(c, spec).ids == {"q01", "q02"}

    def test_or_unions(self):
        c = build({"s1": ["q00"], "s2": ["q03"]})
        spec = CombinationSpec.from_strings({"s1": "or", "s2": "or"})
        assert combine(c, spec).ids == {"q00", "q03"}

    def test_or_group_intersected_with_ands(self):
        c = build({"s1": ["q00", "q01", "q02"], "s2": ["q01"], "s3": ["q02", "q05"]})
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "or", "s3": "or"})
        assert combine(c, spec).ids == {"q01", "q02"}

    def test_not_subtracts(self):
        c = build({"s1": ["q00", "q01", "q02"], "s2": ["q01"]})
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "not"})
        assert combine(c, spec).ids == {"q00", "q02"}

    def test_not_wins_over_and_and_or(self):
        c = build({"s1": ["q00", "q01"], "s2": ["q00", "q01"], "s3": ["q01"]})
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "or", "s3": "not"})
        assert combine(c, spec).ids == {"q00"}

    def test_ignore_is_a_no_op(self):
        c = build({"s1": ["q00", "q01"], "s2": ["q05", "q06"]})
        with_ignore = CombinationSpec.from_strings({"s1": "and", "s2": "ignore"})
        without = CombinationSpec.from_strings({"s1": "and"})
        assert combine(c, with_ignore).ids == combine(c, without).ids

    def test_no_positive_selector(self):
        c = build({"s1": ["q00"]})
        for labels in ({"s1": "not"}, {"s1": "ignore"}, {}):
            with pytest.raises(NoPositiveSelector):
                combine(c, CombinationSpec.from_strings(labels))

    def test_unknown_scholar(self):
        c = build({"s1": ["q00"]})
        with pytest.raises(UnknownScholarId):
            combine(c, CombinationSpec.from_strings({"s9": "and"}))

    def test_unknown_scholar_checked_before_positivity(self):
        c = build({"s1": ["q00"]})
        with pytest.raises(UnknownScholarId):
            combine(c, CombinationSpec.from_strings({"s9": "not"}))

    def test_empty_result_is_fine(self):
        c = build({"s1": ["q00"], "s2": ["q01"]})
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "and"})
        ps = combine(c, spec)
        assert ps.ids == frozenset()
        assert len(ps) == 0

    def test_matches_brute_force_on_random_corpora(self):
        rng = random.Random(505)
        for _ in range(50):
            corpus, owner_sets = random_corpus(rng, max_papers=60, max_scholars=6)
            labels = random_labels(rng, list(owner_sets))
            got = combine(corpus, CombinationSpec.from_strings(labels))
            want = brute_combine(set(corpus.papers), owner_sets, labels)
            assert got.ids == want


class TestLabels:
    NAMES = {"s1": "Bengio", "s2": "Goodfellow", "s3": "Courville"}

    def corpus(self):
        return build({"s1": ["q00"], "s2": ["q01"], "s3": ["q02"]}, names=self.NAMES)

    def label(self, labels: dict[str, str]) -> str:
        c = self.corpus()
        return combine(c, CombinationSpec.from_strings(labels)).label

    def test_two_ands(self):
        assert self.label({"s1": "and", "s3": "and"}) == "Bengio + Courville"

    def test_two_ors(self):
        assert self.label({"s2": "or", "s3": "or"}) == "Goodfellow | Courville"

    def test_and_with_two_nots(self):
        got = self.label({"s1": "and", "s2": "not", "s3": "not"})
        assert got == "Bengio - Goodfellow - Courville"

    def test_and_with_parenthesized_or_group(self):
        c = build(
            {"a": ["q00"], "b": ["q01"], "c": ["q02"]},
            names={"a": "S6", "b": "S8", "c": "S9"},
        )
        spec = CombinationSpec.from_strings({"a": "and", "b": "or", "c": "or"})
        assert combine(c, spec).label == "S6 + (S8 | S9)"

    def test_registration_order_not_selection_order(self):
        # s3 registered after s1; label follows registration order regardless
        got = self.label({"s3": "and", "s1": "and"})
        assert got == "Bengio + Courville"

    def test_single_or_has_no_parens(self):
        assert self.label({"s2": "or"}) == "Goodfellow"

    def test_ignore_absent_from_label(self):
        assert self.label({"s1": "and", "s2": "ignore"}) == "Bengio"

    def test_format_label_standalone(self):
        c = self.corpus()
        spec = CombinationSpec.from_strings({"s1": "and", "s2": "or", "s3": "not"})
        assert format_label(c, spec) == combine(c, spec).label


class TestPapersOf:
    def test_returns_profile_sets(self):
        c = build({"s1": ["q00", "q03"]})
        ps = papers_of(c, "s1")
        assert ps.ids == frozenset({"q00", "q03"})
        assert ps.label == "S1"

    def test_unknown(self):
        c = build({"s1": []})
        with pytest.raises(UnknownScholarId):
            papers_of(c, "missing")


class TestCoauthorStats:
    def test_counts_and_order(self):
        c = build(
            {
                "s1": ["q00", "q01", "q02"],
                "s2": ["q00", "q01"],  # 2 shared
                "s3": ["q02", "q03"],  # 1 shared
                "s4": ["q05"],  # none shared
            },
            names={"s1": "Root", "s2": "Close", "s3": "Far", "s4": "Stranger"},
        )
        stats = coauthor_stats(c, "s1")
        assert [(s.coauthor, s.co_papers, s.total_papers) for s in stats] == [
            ("s2", 2, 2),
            ("s3", 1, 2),
        ]
        assert stats[0].name == "Close"

    def test_ties_break_by_name_then_id(self):
        c = build(
            {
                "s1": ["q00", "q01"],
                "sb": ["q00"],
                "sa": ["q01"],
            },
            names={"s1": "Root", "sb": "Alike", "sa": "Alike"},
        )
        stats = coauthor_stats(c, "s1")
        assert [s.coauthor for s in stats] == ["sa", "sb"]

    def test_self_excluded(self):
        c = build({"s1": ["q00"]})
        assert coauthor_stats(c, "s1") == ()


class TestTimeline:
    def test_year_counts(self):
        rows = [
            paper_row("a", year=2001),
            paper_row("b", year=2001),
            paper_row("c", year=2003),
            paper_row("d", year=None),
        ]
        c = make_corpus(rows, [], [{"scholar_id": "s1", "name": "N", "paper_ids": ["a", "b", "c", "d"]}])
        ps = combine(c, CombinationSpec.from_strings({"s1": "and"}))
        tl = timeline(c, ps)
        assert list(tl.items()) == [(2001, 2), (2003, 1), (UNKNOWN, 1)]

    def test_conserves_paper_count(self, big_corpus):
        ps = combine(big_corpus, CombinationSpec.from_strings({"s03": "and"}))
        tl = timeline(big_corpus, ps)
        assert sum(tl.values()) == len(ps)


class TestFilterYears:
    def corpus_and_set(self):
        rows = [paper_row(f"y{i}", year=2000 + i) for i in range(6)] + [paper_row("yx", year=None)]
        c = make_corpus(rows, [], [{"scholar_id": "s1", "name": "Ada", "paper_ids": [r["id"] for r in rows]}])
        return c, combine(c, CombinationSpec.from_strings({"s1": "and"}))

    def test_inclusive_range(self):
        c, ps = self.corpus_and_set()
        kept = filter_years(c, ps, 2001, 2003)
        assert kept.ids == {"y1", "y2", "y3"}

    def test_unknown_year_excluded(self):
        c, ps = self.corpus_and_set()
        kept = filter_years(c, ps, 1900, 2100)
        assert "yx" not in kept.ids
        assert len(kept) == 6

    def test_label_records_the_window(self):
        c, ps = self.corpus_and_set()
        kept = filter_years(c, ps, 2001, 2003)
        assert kept.label == "Ada [2001–2003]"

    def test_degenerate_single_year(self):
        c, ps = self.corpus_and_set()
        assert filter_years(c, ps, 2002, 2002).ids == {"y2"}

    def test_reversed_range_rejected(self):
        c, ps = self.corpus_and_set()
        with pytest.raises(InvalidRange):
            filter_years(c, ps, 2003, 2001)

    def test_filters_compose(self):
        c, ps = self.corpus_and_set()
        once = filter_years(c, ps, 2001, 2004)
        twice = filter_years(c, once, 2002, 2003)
        assert twice.ids == {"y2", "y3"}
        assert twice.label == "Ada [2001–2003] [2002–2003]".replace("2001–2003", "2001–2004")


class TestOperatorLabel:
    def test_wire_spellings(self):
        assert [op.value for op in OperatorLabel] == ["not", "ignore", "and", "or"]

    def test_from_strings_rejects_unknown(self):
        with pytest.raises(ValueError):
            CombinationSpec.from_strings({"s1": "xor"})
