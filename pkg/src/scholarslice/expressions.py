"""Parsing combination expressions.

The textual form is exactly what :func:`scholarslice.sets.format_label`
prints, so labels round-trip:

* ``A + B``              both required (And, And)
* ``A | B``              either one (Or, Or)
* ``A + (B | C)``        A required, plus at least one of B, C
* ``A + B - C``          trailing ``- name`` terms are Not scholars
* ``A``                  a single name is an And selector

Delimiters are the spaced tokens `` + ``, `` | ``, and `` - ``; scholar
names therefore must not contain those exact character triples.
"""

from __future__ import annotations

from .corpus import Corpus
from .errors import ParseError, UnknownScholarId
from .sets import CombinationSpec, OperatorLabel

__all__ = ["parse_expression", "spec_from_expression"]


def _clean_name(raw: str, context: str) -> str:
    name = raw.strip()
    if not name:
        raise ParseError(f"empty name in {context}")
    if "(" in name or ")" in name:
        raise ParseError(f"unexpected parenthesis in name {name!r}")
    if " | " in name or " + " in name:
        raise ParseError(f"unexpected operator inside name {name!r}")
    if any(tok in ("+", "|", "-") for tok in name.split()):
        raise ParseError(f"dangling operator in {name!r}")
    return name


def _parse_or_list(text: str) -> list[str]:
    names = [_clean_name(part, "or-group") for part in text.split(" | ")]
    if len(names) < 2:
        raise ParseError("an or-group needs at least two names")
    return names


def parse_expression(text: str) -> list[tuple[str, OperatorLabel]]:
    """Parse an expression into (name, operator) pairs in appearance order."""
    expr = text.strip()
    if not expr:
        raise ParseError("empty expression")
    pieces = expr.split(" - ")
    head = pieces[0].strip()
    not_names = [_clean_name(p, "not-term") for p in pieces[1:]]
    if not head or head.startswith("- ") or head == "-":
        raise ParseError("expression has no And or Or name")

    and_names: list[str] = []
    or_names: list[str] = []
    if " + " in head:
        parts = head.split(" + ")
        for i, part in enumerate(parts):
            part = part.strip()
            if part.startswith("(") and part.endswith(")"):
                if or_names:
                    raise ParseError("more than one or-group")
                if i != len(parts) - 1:
                    raise ParseError("the or-group must come last")
                or_names = _parse_or_list(part[1:-1])
            else:
                and_names.append(_clean_name(part, "and-term"))
    elif " | " in head:
        inner = head[1:-1] if head.startswith("(") and head.endswith(")") else head
        or_names = _parse_or_list(inner)
    else:
        and_names.append(_clean_name(head, "expression"))

    pairs = (
        [(n, OperatorLabel.AND) for n in and_names]
        + [(n, OperatorLabel.OR) for n in or_names]
        + [(n, OperatorLabel.NOT) for n in not_names]
    )
    seen: set[str] = set()
    for name, _ in pairs:
        if name in seen:
            raise ParseError(f"name {name!r} appears twice")
        seen.add(name)
    return pairs


def spec_from_expression(corpus: Corpus, text: str) -> CombinationSpec:
    """Resolve expression names against registered scholars.

    Names match scholar display names first, then scholar ids. An ambiguous
    display name is a ParseError; an unmatched name is UnknownScholarId.
    """
    by_name: dict[str, list[str]] = {}
    for sid in corpus.scholar_ids:
        by_name.setdefault(corpus.scholars[sid].name, []).append(sid)
    labels: dict[str, OperatorLabel] = {}
    for name, op in parse_expression(text):
        candidates = by_name.get(name)
        if candidates is not None:
            if len(candidates) > 1:
                raise ParseError(f"name {name!r} matches several scholars: {candidates}")
            sid = candidates[0]
        elif name in corpus.scholars:
            sid = name
        else:
            raise UnknownScholarId(name)
        if sid in labels:
            raise ParseError(f"scholar {sid!r} is referenced twice")
        labels[sid] = op
    return CombinationSpec(labels=labels)
