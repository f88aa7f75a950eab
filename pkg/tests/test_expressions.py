"""Parsing combination labels back into operator assignments."""

from __future__ import annotations

import pytest

from scholarslice import (
    CombinationSpec,
    OperatorLabel,
    combine,
    format_label,
    parse_expression,
    spec_from_expression,
)
from scholarslice.errors import ParseError, UnknownScholarId

from conftest import make_corpus, paper_row

A, O, N = OperatorLabel.AND, OperatorLabel.OR, OperatorLabel.NOT


class TestParse:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("Bengio", [("Bengio", A)]),
            ("Bengio + Courville", [("Bengio", A), ("Courville", A)]),
            ("Goodfellow | Courville", [("Goodfellow", O), ("Courville", O)]),
            ("(Goodfellow | Courville)", [("Goodfellow", O), ("Courville", O)]),
            (
                "Bengio - Goodfellow - Courville",
                [("Bengio", A), ("Goodfellow", N), ("Courville", N)],
            ),
            ("S6 + (S8 | S9)", [("S6", A), ("S8", O), ("S9", O)]),
            (
                "S1 + S2 + (S3 | S4 | S5) - S6",
                [("S1", A), ("S2", A), ("S3", O), ("S4", O), ("S5", O), ("S6", N)],
            ),
            ("A | B - C", [("A", O), ("B", O), ("C", N)]),
        ],
    )
    def test_goldens(self, text, expected):
        assert parse_expression(text) == expected

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "   ",
            "- Cleo Fairbank",
            "-",
            "Bengio + ",
            "+ Bengio",
            "Bengio | ",
            "(S8 | S9) + (S6 | S7)",
            "S6 + (S8)",
            "S6 + (S8 | S9) + S7",
            "Bengio + Bengio",
            "Bengio - Bengio",
            "A (B)",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_expression(text)

    def test_or_group_must_trail(self):
        with pytest.raises(ParseError):
            parse_expression("(S8 | S9) + S6")


class TestSpecFromExpression:
    def corpus(self):
        rows = [paper_row(f"p{i}") for i in range(4)]
        profiles = [
            {"scholar_id": "s1", "name": "Bengio", "paper_ids": ["p0", "p1"]},
            {"scholar_id": "s2", "name": "Goodfellow", "paper_ids": ["p1", "p2"]},
            {"scholar_id": "s3", "name": "Courville", "paper_ids": ["p2", "p3"]},
        ]
        return make_corpus(rows, [], profiles)

    def test_by_display_name(self):
        c = self.corpus()
        spec = spec_from_expression(c, "Bengio + Courville")
        assert spec.labels == {"s1": A, "s3": A}

    def test_by_scholar_id(self):
        c = self.corpus()
        spec = spec_from_expression(c, "s1 - s2")
        assert spec.labels == {"s1": A, "s2": N}

    def test_unknown_name(self):
        with pytest.raises(UnknownScholarId):
            spec_from_expression(self.corpus(), "Nobody Here")

    def test_ambiguous_name(self):
        rows = [paper_row("p0")]
        profiles = [
            {"scholar_id": "s1", "name": "Twin", "paper_ids": ["p0"]},
            {"scholar_id": "s2", "name": "Twin", "paper_ids": ["p0"]},
        ]
        c = make_corpus(rows, [], profiles)
        with pytest.raises(ParseError):
            spec_from_expression(c, "Twin")

    def test_same_scholar_via_name_and_id(self):
        c = self.corpus()
        with pytest.raises(ParseError):
            spec_from_expression(c, "Bengio + s1")

    def test_round_trip_from_label(self):
        c = self.corpus()
        for labels in (
            {"s1": "and", "s3": "and"},
            {"s2": "or", "s3": "or"},
            {"s1": "and", "s2": "not", "s3": "not"},
            {"s1": "and", "s2": "or", "s3": "or"},
        ):
            spec = CombinationSpec.from_strings(labels)
            label = format_label(c, spec)
            back = spec_from_expression(c, label)
            assert combine(c, back).ids == combine(c, spec).ids
            assert format_label(c, back) == label
