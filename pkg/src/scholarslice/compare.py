"""Aligning two hierarchies for upper/lower comparison.

Two hierarchies built over the same attribute chain are merged level by
level into slots. A slot holds the upper bar, the lower bar, or both; a
missing side is a placeholder with zero measure, so both histograms expose
the same bar sequence and can be drawn against a shared axis. Matching
recurses through every level.

When the top-level attribute is a year attribute, an integer offset can
shift the lower side: lower year v matches upper year v + offset. Offsets on
any other top-level attribute are rejected. Unknown years match Unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .corpus import UnknownValue
from .errors import ChainMismatch, OffsetOnUnorderedAttribute
from .histogram import (
    EN_DASH,
    AttributeKey,
    Hierarchy,
    HistNode,
    _BUCKET_ORDER,
    _RANK_ORDER,
    _element_id,
)

__all__ = [
    "AlignedSlot",
    "AlignedComparison",
    "align",
    "ComparisonDescription",
    "describe_comparison",
    "comparison_to_dict",
]


@dataclass(frozen=True)
class AlignedSlot:
    """One merged bar position; a None side is a placeholder."""

    attribute: AttributeKey
    key_label: str
    width: int
    upper: Optional[HistNode]
    lower: Optional[HistNode]
    children: tuple["AlignedSlot", ...]


@dataclass(frozen=True)
class AlignedComparison:
    chain: tuple[AttributeKey, ...]
    offset: int
    upper_label: str
    lower_label: str
    slots: tuple[AlignedSlot, ...]


def _match_key(node: HistNode, shift: int) -> tuple:
    """Identity of a bar for cross-side matching; lower-side years get +shift."""
    if node.is_group:
        if node.attribute.is_year:
            return ("yg", frozenset(v + shift for v in node.group_values))
        return ("g", node.label)
    v = node.value
    if node.attribute.is_year:
        if isinstance(v, UnknownValue):
            return ("y?",)
        return ("y", v + shift)
    if isinstance(v, UnknownValue):
        return ("u?",)
    if isinstance(v, Enum):
        return ("e", v.value)
    return ("v", v)


def _slot_sort_key(facet: str, key: tuple, upper: Optional[HistNode], lower: Optional[HistNode], label: str) -> tuple:
    if facet == "year":
        if key[0] == "y?":
            return (0, 1, 0)
        if key[0] == "yg":
            return (0, 0, min(key[1]))
        return (0, 0, key[1])
    if facet in ("rank", "bucket"):
        order = _RANK_ORDER if facet == "rank" else _BUCKET_ORDER
        side = upper if upper is not None else lower
        vals = side.group_values if side.group_values is not None else {side.value}
        return (0, min(order[v] for v in vals))
    combined = (upper.measure if upper is not None else 0) + (lower.measure if lower is not None else 0)
    return (-combined, label, str(key))


def _shifted_year_label(node: HistNode, shift: int) -> str:
    if node.is_group:
        shifted = sorted(v + shift for v in node.group_values)
        if len(shifted) == 1:
            return str(shifted[0])
        return f"{shifted[0]}{EN_DASH}{shifted[-1]}"
    if isinstance(node.value, UnknownValue):
        return "Unknown"
    return str(node.value + shift)


def _mirror(children: tuple[HistNode, ...], side: str) -> tuple[AlignedSlot, ...]:
    """Slots for a subtree that exists on one side only."""
    slots = []
    for node in children:
        sub = _mirror(node.children, side)
        width = sum(s.width for s in sub) if sub else 1
        slots.append(
            AlignedSlot(
                attribute=node.attribute,
                key_label=node.label,
                width=width,
                upper=node if side == "upper" else None,
                lower=node if side == "lower" else None,
                children=sub,
            )
        )
    return tuple(slots)


def _merge(
    upper_children: tuple[HistNode, ...],
    lower_children: tuple[HistNode, ...],
    chain: tuple[AttributeKey, ...],
    level: int,
    offset: int,
) -> tuple[AlignedSlot, ...]:
    if not upper_children and not lower_children:
        return ()
    key_attr = chain[level]
    shift = offset if level == 0 and key_attr.is_year else 0
    upper_map = {_match_key(n, 0): n for n in upper_children}
    lower_map = {_match_key(n, shift): n for n in lower_children}

    entries = []
    for key in upper_map.keys() | lower_map.keys():
        u = upper_map.get(key)
        low = lower_map.get(key)
        if u is not None:
            label = u.label
        elif shift:
            label = _shifted_year_label(low, shift)
        else:
            label = low.label
        entries.append((key, u, low, label))
    facet = key_attr.facet
    entries.sort(key=lambda e: _slot_sort_key(facet, e[0], e[1], e[2], e[3]))

    slots = []
    for key, u, low, label in entries:
        if u is not None and low is not None:
            children = _merge(u.children, low.children, chain, level + 1, offset)
        elif u is not None:
            children = _mirror(u.children, "upper")
        else:
            children = _mirror(low.children, "lower")
        width = sum(s.width for s in children) if children else 1
        slots.append(
            AlignedSlot(
                attribute=key_attr,
                key_label=label,
                width=width,
                upper=u,
                lower=low,
                children=children,
            )
        )
    return tuple(slots)


def align(upper: Hierarchy, lower: Hierarchy, offset: int = 0) -> AlignedComparison:
    """Merge two hierarchies over the same chain into aligned slots."""
    if upper.chain != lower.chain:
        raise ChainMismatch(
            tuple(k.value for k in upper.chain), tuple(k.value for k in lower.chain)
        )
    if offset != 0 and not upper.chain[0].is_year:
        raise OffsetOnUnorderedAttribute(upper.chain[0].value)
    slots = _merge(upper.root.children, lower.root.children, upper.chain, 0, offset)
    return AlignedComparison(
        chain=upper.chain,
        offset=offset,
        upper_label=upper.set_label,
        lower_label=lower.set_label,
        slots=slots,
    )


@dataclass(frozen=True)
class ComparisonDescription:
    """Display text for a two-set comparison.

    Aligned views read as one phrase, ``upper VS lower``; side-by-side views
    keep two separate captions. ``parts`` carries the pieces with their roles
    so a client can color them independently.
    """

    aligned: bool
    upper: str
    lower: str
    combined: Optional[str]
    parts: tuple[tuple[str, str], ...]


def describe_comparison(upper_label: str, lower_label: str, aligned: bool) -> ComparisonDescription:
    if aligned:
        return ComparisonDescription(
            aligned=True,
            upper=upper_label,
            lower=lower_label,
            combined=f"{upper_label} VS {lower_label}",
            parts=((upper_label, "upper"), ("VS", "separator"), (lower_label, "lower")),
        )
    return ComparisonDescription(
        aligned=False,
        upper=upper_label,
        lower=lower_label,
        combined=None,
        parts=((upper_label, "upper"), (lower_label, "lower")),
    )


def _json_value(value: object) -> object:
    if value is None:
        return None
    if isinstance(value, UnknownValue):
        return "Unknown"
    if isinstance(value, Enum):
        return value.value
    return value


def _side_dict(node: Optional[HistNode], slot: AlignedSlot, leaf_slot: bool, element_cap: int) -> dict:
    if node is None:
        d: dict = {
            "empty": True,
            "label": slot.key_label,
            "value": None,
            "group": False,
            "width": slot.width,
            "measure": 0,
        }
        if leaf_slot:
            d["height_linear"] = 0.0
            d["height_sqrt"] = 0.0
            d["height_log"] = 0.0
            d["element_count"] = 0
            d["element_ids"] = []
        return d
    d = {
        "empty": False,
        "label": node.label,
        "value": _json_value(node.value),
        "group": node.is_group,
        "width": node.width,
        "measure": node.measure,
    }
    if leaf_slot:
        m = float(node.measure)
        d["height_linear"] = m
        d["height_sqrt"] = math.sqrt(m)
        d["height_log"] = math.log10(1.0 + m)
        d["element_count"] = len(node.elements)
        d["element_ids"] = [_element_id(e) for e in node.elements[:element_cap]]
    return d


def _slot_dict(slot: AlignedSlot, element_cap: int) -> dict:
    leaf_slot = not slot.children
    return {
        "attr": slot.attribute.value,
        "key": slot.key_label,
        "width": slot.width,
        "upper": _side_dict(slot.upper, slot, leaf_slot, element_cap),
        "lower": _side_dict(slot.lower, slot, leaf_slot, element_cap),
        "children": [_slot_dict(c, element_cap) for c in slot.children],
    }


def comparison_to_dict(comparison: AlignedComparison, element_cap: int = 200) -> dict:
    description = describe_comparison(comparison.upper_label, comparison.lower_label, aligned=True)
    return {
        "chain": [k.value for k in comparison.chain],
        "offset": comparison.offset,
        "upper_label": comparison.upper_label,
        "lower_label": comparison.lower_label,
        "description": {
            "aligned": True,
            "upper": description.upper,
            "lower": description.lower,
            "combined": description.combined,
            "parts": [list(p) for p in description.parts],
        },
        "slots": [_slot_dict(s, element_cap) for s in comparison.slots],
    }
