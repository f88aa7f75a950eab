"""Corpus ingestion: row validation, link rules, profiles, and the load report."""

from __future__ import annotations

import json

import pytest

from scholarslice import UNKNOWN, load_corpus
from scholarslice.errors import (
    DuplicatePaperId,
    FileNotReadable,
    SchemaViolation,
    UnknownPaperId,
    UnknownScholarId,
)

from conftest import FIXTURES, make_corpus, paper_row


def test_empty_inputs():
    c = make_corpus([], [], [])
    assert c.report.as_dict() == {
        "papers_accepted": 0,
        "papers_dropped": 0,
        "links_accepted": 0,
        "links_dropped_malformed": 0,
        "links_dropped_self": 0,
        "links_dropped_dangling": 0,
        "links_dropped_duplicate": 0,
        "scholars_accepted": 0,
        "scholars_dropped": 0,
        "profile_papers_unresolved": 0,
        "venues_unresolved": 0,
    }
    assert not c.papers and not c.links and not c.scholars


class TestPaperRows:
    def test_accepts_minimal(self):
        c = make_corpus([paper_row("p1")], [], [])
        assert c.report.papers_accepted == 1
        rec = c.paper("p1")
        assert rec.year == 2000 and rec.venue is UNKNOWN

    @pytest.mark.parametrize(
        "mutation",
        [
            {"id": ""},
            {"id": 7},
            {"title": None},
            {"year": "2000"},
            {"year": 1899},
            {"year": 2101},
            {"year": True},
            {"venue": 3},
            {"authors": "alice"},
            {"authors": ["alice", 2]},
        ],
    )
    def test_drops_bad_rows(self, mutation):
        row = paper_row("p1")
        row.update(mutation)
        c = make_corpus([row], [], [])
        assert c.report.papers_accepted == 0
        assert c.report.papers_dropped == 1

    def test_drops_rows_missing_required_keys(self):
        for key in ("id", "title", "authors"):
            row = paper_row("p1")
            del row[key]
            c = make_corpus([row], [], [])
            assert c.report.papers_dropped == 1, key

    def test_missing_nullable_keys_read_as_null(self):
        row = paper_row("p1")
        del row["year"]
        del row["venue"]
        c = make_corpus([row], [], [])
        rec = c.paper("p1")
        assert rec.year is UNKNOWN and rec.venue is UNKNOWN

    def test_boundary_years_accepted(self):
        c = make_corpus([paper_row("a", year=1900), paper_row("b", year=2100), paper_row("c", year=None)], [], [])
        assert c.report.papers_accepted == 3
        assert c.paper("c").year is UNKNOWN

    def test_duplicate_paper_id_is_fatal(self):
        with pytest.raises(DuplicatePaperId) as exc:
            make_corpus([paper_row("p1"), paper_row("p1")], [], [])
        assert exc.value.paper_id == "p1"

    def test_authors_deduped_in_order(self):
        c = make_corpus([paper_row("p1", authors=["b", "a", "b", "c", "a"])], [], [])
        assert c.paper("p1").authors == ("b", "a", "c")


class TestVenueResolution:
    def test_resolved_alias(self, mini_venues):
        c = make_corpus([paper_row("p1", venue="The  GAT!")], [], [], venues=mini_venues)
        assert c.paper("p1").venue == "v-grand"
        assert c.report.venues_unresolved == 0

    def test_blank_venue_is_unknown_not_unresolved(self, mini_venues):
        c = make_corpus([paper_row("p1", venue=""), paper_row("p2", venue="   "), paper_row("p3", venue=None)], [], [], venues=mini_venues)
        assert all(c.paper(p).venue is UNKNOWN for p in ("p1", "p2", "p3"))
        assert c.report.venues_unresolved == 0

    def test_unresolved_venue_counted(self, mini_venues):
        c = make_corpus([paper_row("p1", venue="Totally Absent Quarterly")], [], [], venues=mini_venues)
        assert c.paper("p1").venue is UNKNOWN
        assert c.report.venues_unresolved == 1


class TestLinkRules:
    def papers(self):
        return [paper_row(p) for p in ("p1", "p2", "p3")]

    def test_accepts_valid(self):
        c = make_corpus(self.papers(), [("p2", "p1"), ("p3", "p1")], [])
        assert c.links == (("p2", "p1"), ("p3", "p1"))
        assert c.report.links_accepted == 2

    def test_drops_in_rule_order(self):
        links = [
            None,  # malformed row
            ("p1", "p1"),  # self
            ("p1", "p9"),  # dangling cited
            ("p9", "p1"),  # dangling citing
            ("p2", "p1"),
            ("p2", "p1"),  # duplicate
        ]
        c = make_corpus(self.papers(), links, [])
        r = c.report
        assert r.links_accepted == 1
        assert r.links_dropped_malformed == 1
        assert r.links_dropped_self == 1
        assert r.links_dropped_dangling == 2
        assert r.links_dropped_duplicate == 1

    def test_self_link_beats_dangling(self):
        # p9 exists nowhere, but the self rule fires first
        c = make_corpus(self.papers(), [("p9", "p9")], [])
        assert c.report.links_dropped_self == 1
        assert c.report.links_dropped_dangling == 0

    def test_citation_indexes(self):
        c = make_corpus(self.papers(), [("p3", "p1"), ("p2", "p1"), ("p3", "p2")], [])
        assert c.citing_papers("p1") == ("p2", "p3")
        assert c.cited_papers("p3") == ("p1", "p2")
        assert c.citing_papers("p3") == ()

    def test_index_consistency(self, big_corpus):
        forward = sum(len(big_corpus.cited_papers(pid)) for pid in big_corpus.papers)
        backward = sum(len(big_corpus.citing_papers(pid)) for pid in big_corpus.papers)
        assert forward == backward == len(big_corpus.links)


class TestProfiles:
    def test_profiles_are_authoritative(self):
        rows = [paper_row("p1", authors=["Alice"]), paper_row("p2", authors=["Alice"])]
        c = make_corpus(rows, [], [{"scholar_id": "s1", "name": "Alice", "paper_ids": ["p1"]}])
        s = c.scholar("s1")
        assert s.paper_ids == frozenset({"p1"})

    def test_unresolved_profile_papers_counted(self):
        c = make_corpus(
            [paper_row("p1")],
            [],
            [{"scholar_id": "s1", "name": "Alice", "paper_ids": ["p1", "p9", "p8"]}],
        )
        assert c.scholar("s1").paper_ids == frozenset({"p1"})
        assert c.report.profile_papers_unresolved == 2

    def test_duplicate_scholar_first_wins(self):
        c = make_corpus(
            [paper_row("p1"), paper_row("p2")],
            [],
            [
                {"scholar_id": "s1", "name": "First", "paper_ids": ["p1"]},
                {"scholar_id": "s1", "name": "Second", "paper_ids": ["p2"]},
            ],
        )
        assert c.scholar("s1").name == "First"
        assert c.scholar("s1").paper_ids == frozenset({"p1"})
        assert c.report.scholars_dropped == 1

    @pytest.mark.parametrize(
        "row",
        [
            {"scholar_id": "", "name": "A", "paper_ids": []},
            {"scholar_id": "s1", "name": "", "paper_ids": []},
            {"scholar_id": "s1", "paper_ids": []},
            {"scholar_id": "s1", "name": "A", "paper_ids": "p1"},
            {"scholar_id": "s1", "name": "A", "paper_ids": [1]},
            None,
        ],
    )
    def test_bad_profile_rows_dropped(self, row):
        c = make_corpus([], [], [row])
        assert c.report.scholars_accepted == 0
        assert c.report.scholars_dropped == 1

    def test_registration_order_kept(self):
        rows = [{"scholar_id": f"s{i}", "name": f"N{i}", "paper_ids": []} for i in (3, 1, 2)]
        c = make_corpus([paper_row("p1")], [], rows)
        assert list(c.scholar_ids) == ["s3", "s1", "s2"]


class TestLookupErrors:
    def test_unknown_paper(self, small_corpus):
        with pytest.raises(UnknownPaperId):
            small_corpus.paper("p99")

    def test_unknown_scholar(self, small_corpus):
        with pytest.raises(UnknownScholarId):
            small_corpus.scholar("s99")


class TestFileLoading:
    def test_small_fixture_matches_golden_report(self, small_corpus, small_paths):
        golden = json.loads((FIXTURES / "small" / "golden_report.json").read_text())
        assert small_corpus.report.as_dict() == golden

    def test_small_fixture_resolution_spots(self, small_corpus):
        assert small_corpus.paper("p01").venue == "aaj"
        assert small_corpus.paper("p02").venue == "aaj"  # alias
        assert small_corpus.paper("p05").venue == "bbw"  # case-folded alias
        assert small_corpus.paper("p10").venue == "bbw"  # punctuation stripped
        assert small_corpus.paper("p12").venue == "aaj"  # one edit off
        assert small_corpus.paper("p04").venue is UNKNOWN  # unresolvable
        assert small_corpus.paper("p03").venue is UNKNOWN  # null venue
        assert small_corpus.paper("p08").year is UNKNOWN

    def test_missing_file(self, small_paths, tmp_path):
        with pytest.raises(FileNotReadable):
            load_corpus(
                str(tmp_path / "nope.jsonl"),
                str(small_paths["citations"]),
                str(small_paths["venues"]),
                str(small_paths["profiles"]),
            )

    def test_bad_csv_header(self, small_paths, tmp_path):
        bad = tmp_path / "links.csv"
        bad.write_text("cited,citing\np2,p1\n")
        with pytest.raises(SchemaViolation) as exc:
            load_corpus(
                str(small_paths["papers"]),
                str(bad),
                str(small_paths["venues"]),
                str(small_paths["profiles"]),
            )
        assert exc.value.line == 1

    def test_header_tolerates_bom_and_space(self, small_paths, tmp_path):
        ok = tmp_path / "links.csv"
        ok.write_bytes("﻿citing, cited\np02,p01\n".encode("utf-8"))
        c = load_corpus(
            str(small_paths["papers"]),
            str(ok),
            str(small_paths["venues"]),
            str(small_paths["profiles"]),
        )
        assert c.links == (("p02", "p01"),)


class TestImmutability:
    def test_records_frozen(self, small_corpus):
        with pytest.raises(AttributeError):
            small_corpus.paper("p01").year = 1999  # type: ignore[misc]
        with pytest.raises(AttributeError):
            small_corpus.papers = ()  # type: ignore[misc]

    def test_unknown_is_singleton(self):
        assert UNKNOWN is type(UNKNOWN)()
        assert str(UNKNOWN) == "Unknown"
