"""Hierarchical histograms over paper sets.

A hierarchy partitions the elements of a paper set along a chain of one to
four attributes. In Papers mode the elements are the member papers
themselves; in Citations mode each citation link pointing at a member is an
element, so attributes of both the cited side (``P.*``) and the citing side
(``C.*``) are available. ``C.*`` attributes are invalid in Papers mode.

Each level splits its elements by attribute value, one bar per occurring
value. A :class:`GroupSpec` can merge values into labeled group bars and
discard groups (``ignored`` labels, or a group labeled the literal string
``"ignore"``); discarded members disappear from every deeper level. Leaf
bars carry a measure (paper count, total citations, or h-index); internal
bars span their leaf descendants, so a bar's width is its leaf count.

Sibling order is canonical and deterministic: years ascending with Unknown
last, ranks A to Unranked, buckets High to Low, venues and single papers by
measure descending then label. Groups sort by their best member value.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .corpus import UNKNOWN, Corpus, PaperRecord, UnknownValue
from .errors import (
    ChainTooLong,
    InvalidAttributeForMode,
    InvalidGroupSpec,
    InvalidThresholds,
    NegativeValue,
    RepeatedAttribute,
)
from .metrics import h_index
from .sets import PaperSet
from .venues import CcfRank

__all__ = [
    "Mode",
    "AttributeKey",
    "Measure",
    "CitationBucket",
    "BucketThresholds",
    "DEFAULT_THRESHOLDS",
    "MAX_CHAIN",
    "bucket_citations",
    "LinkElement",
    "Element",
    "elements_of",
    "attribute_value",
    "value_label",
    "Group",
    "GroupSpec",
    "year_group",
    "HistNode",
    "Hierarchy",
    "build_hierarchy",
    "reorder_chain",
    "ScaleKind",
    "scale_heights",
    "hierarchy_to_dict",
]

MAX_CHAIN = 4

EN_DASH = "–"


class Mode(str, Enum):
    PAPERS = "papers"
    CITATIONS = "citations"


class Measure(str, Enum):
    PAPER_COUNT = "papers"
    TOTAL_CITATIONS = "citations"
    H_INDEX = "hindex"


class AttributeKey(str, Enum):
    """Partition attributes. ``P.*`` reads the (cited) paper, ``C.*`` the citer."""

    P_YEAR = "P.Year"
    P_VENUE = "P.Venue"
    P_CCF_RANK = "P.CcfRank"
    P_CITATION_BUCKET = "P.CitationBucket"
    P_INDIVIDUAL_PAPER = "P.IndividualPaper"
    C_YEAR = "C.Year"
    C_VENUE = "C.Venue"
    C_CCF_RANK = "C.CcfRank"
    C_CITATION_BUCKET = "C.CitationBucket"
    C_INDIVIDUAL_PAPER = "C.IndividualPaper"

    @property
    def is_citing(self) -> bool:
        return self.value.startswith("C.")

    @property
    def facet(self) -> str:
        """One of 'year', 'venue', 'rank', 'bucket', 'paper'."""
        return _FACETS[self.value.split(".", 1)[1]]

    @property
    def is_year(self) -> bool:
        return self.facet == "year"


_FACETS = {
    "Year": "year",
    "Venue": "venue",
    "CcfRank": "rank",
    "CitationBucket": "bucket",
    "IndividualPaper": "paper",
}


class CitationBucket(str, Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"


_RANK_ORDER = {CcfRank.A: 0, CcfRank.B: 1, CcfRank.C: 2, CcfRank.UNRANKED: 3}
_BUCKET_ORDER = {CitationBucket.HIGH: 0, CitationBucket.MEDIUM: 1, CitationBucket.LOW: 2}


@dataclass(frozen=True)
class BucketThresholds:
    """Citation bucket boundaries: Low < low_below <= Medium < high_at_least <= High."""

    low_below: int = 10
    high_at_least: int = 50

    def __post_init__(self) -> None:
        if self.low_below < 0 or self.low_below > self.high_at_least:
            raise InvalidThresholds(
                f"need 0 <= low_below <= high_at_least, got {self.low_below}, {self.high_at_least}"
            )


DEFAULT_THRESHOLDS = BucketThresholds()


def bucket_citations(count: int, thresholds: BucketThresholds = DEFAULT_THRESHOLDS) -> CitationBucket:
    """Bucket a citation count. The boundary count lands in the upper bucket."""
    if count >= thresholds.high_at_least:
        return CitationBucket.HIGH
    if count < thresholds.low_below:
        return CitationBucket.LOW
    return CitationBucket.MEDIUM


@dataclass(frozen=True)
class LinkElement:
    """One citation link: ``citing`` cites ``cited`` (a set member)."""

    citing: PaperRecord
    cited: PaperRecord


Element = Union[PaperRecord, LinkElement]


def elements_of(corpus: Corpus, paper_set: PaperSet, mode: Mode) -> list[Element]:
    """The elements a hierarchy partitions, in deterministic order."""
    member_ids = sorted(paper_set.ids)
    if mode is Mode.PAPERS:
        return [corpus.paper(pid) for pid in member_ids]
    elements: list[Element] = []
    for cited_id in member_ids:
        cited = corpus.paper(cited_id)
        for citing_id in corpus.citing_papers(cited_id):
            elements.append(LinkElement(citing=corpus.paper(citing_id), cited=cited))
    return elements


def attribute_value(
    corpus: Corpus,
    element: Element,
    key: AttributeKey,
    thresholds: BucketThresholds = DEFAULT_THRESHOLDS,
) -> object:
    """The partition value of one element under one attribute.

    Citation buckets use the paper's corpus-wide citation count, so the
    bucket of a paper does not depend on which set it is viewed through.
    """
    if key.is_citing:
        if isinstance(element, PaperRecord):
            raise InvalidAttributeForMode(key.value, Mode.PAPERS.value)
        paper = element.citing
    else:
        paper = element.cited if isinstance(element, LinkElement) else element
    facet = key.facet
    if facet == "year":
        return paper.year
    if facet == "venue":
        return paper.venue
    if facet == "rank":
        if isinstance(paper.venue, UnknownValue):
            return CcfRank.UNRANKED
        return corpus.venues.classify(paper.venue)[1]
    if facet == "bucket":
        return bucket_citations(len(corpus.citing_index.get(paper.id, ())), thresholds)
    return paper.id


def value_label(corpus: Corpus, key: AttributeKey, value: object) -> str:
    """Human-readable label for an attribute value."""
    if isinstance(value, UnknownValue):
        return "Unknown"
    facet = key.facet
    if facet == "venue":
        return corpus.venues.display_name(value)
    if facet == "paper":
        return corpus.paper(value).title or value
    if isinstance(value, Enum):
        return value.value
    return str(value)


@dataclass(frozen=True)
class Group:
    """A labeled merge of attribute values into one bar."""

    label: str
    values: frozenset

    def __init__(self, label: str, values: Iterable) -> None:
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "values", frozenset(values))


def year_group(from_year: int, to_year: int, label: str | None = None) -> Group:
    """Convenience: a contiguous year-range group with a default label."""
    if label is None:
        label = f"{from_year}{EN_DASH}{to_year}" if from_year != to_year else str(from_year)
    return Group(label, range(from_year, to_year + 1))


@dataclass(frozen=True)
class GroupSpec:
    """Bar grouping for one chain attribute.

    Group value sets must be disjoint and labels unique. Groups whose label
    is listed in ``ignored`` (or is the literal string ``"ignore"``) are
    removed together with their elements. Year groups must cover contiguous
    ranges. Values not covered by any group stay as singleton bars.
    """

    attribute: AttributeKey
    groups: tuple[Group, ...]
    ignored: frozenset[str] = frozenset()

    def __init__(self, attribute: AttributeKey, groups: Iterable[Group], ignored: Iterable[str] = ()) -> None:
        object.__setattr__(self, "attribute", attribute)
        object.__setattr__(self, "groups", tuple(groups))
        object.__setattr__(self, "ignored", frozenset(ignored))


_FACET_VALUE_TYPES = {
    "year": int,
    "venue": str,
    "rank": CcfRank,
    "bucket": CitationBucket,
    "paper": str,
}


def _check_group_specs(
    chain: Sequence[AttributeKey], group_specs: Iterable[GroupSpec]
) -> dict[AttributeKey, GroupSpec]:
    by_attr: dict[AttributeKey, GroupSpec] = {}
    for spec in group_specs:
        if spec.attribute not in chain:
            raise InvalidGroupSpec(f"grouping on {spec.attribute.value}, which is not in the chain")
        if spec.attribute in by_attr:
            raise InvalidGroupSpec(f"more than one group spec for {spec.attribute.value}")
        by_attr[spec.attribute] = spec
        labels = [g.label for g in spec.groups]
        if len(set(labels)) != len(labels):
            raise InvalidGroupSpec(f"duplicate group labels on {spec.attribute.value}")
        if any(not g.label for g in spec.groups):
            raise InvalidGroupSpec("group labels must be non-empty")
        unknown_ignored = spec.ignored - set(labels)
        if unknown_ignored:
            raise InvalidGroupSpec(f"ignored labels {sorted(unknown_ignored)} name no group")
        want = _FACET_VALUE_TYPES[spec.attribute.facet]
        seen_values: set = set()
        for group in spec.groups:
            if not group.values:
                raise InvalidGroupSpec(f"group {group.label!r} has no values")
            bad = [v for v in group.values if not isinstance(v, want) or isinstance(v, bool) and want is int]
            if bad:
                raise InvalidGroupSpec(
                    f"group {group.label!r} holds values of the wrong type for {spec.attribute.value}"
                )
            overlap = seen_values & group.values
            if overlap:
                raise InvalidGroupSpec(f"value {sorted(map(str, overlap))[0]!r} appears in two groups")
            seen_values |= group.values
            if spec.attribute.is_year:
                years = sorted(group.values)
                if years[-1] - years[0] + 1 != len(years):
                    raise InvalidGroupSpec(f"year group {group.label!r} is not a contiguous range")
    return by_attr


@dataclass(frozen=True)
class HistNode:
    """One bar (or the root). Leaves carry elements and the chain's last level."""

    attribute: Optional[AttributeKey]
    value: object
    label: str
    is_group: bool
    width: int
    measure: Union[int, float]
    children: tuple["HistNode", ...]
    elements: tuple = ()
    group_values: Optional[frozenset] = None

    @property
    def is_leaf(self) -> bool:
        return self.attribute is not None and not self.children


@dataclass(frozen=True)
class Hierarchy:
    root: HistNode
    chain: tuple[AttributeKey, ...]
    mode: Mode
    measure: Measure
    set_label: str
    thresholds: BucketThresholds

    def leaves(self) -> list[HistNode]:
        out: list[HistNode] = []

        def walk(node: HistNode) -> None:
            if node.is_leaf:
                out.append(node)
            for child in node.children:
                walk(child)

        walk(self.root)
        return out


def _measure_fn(corpus: Corpus, mode: Mode, measure: Measure):
    def paper_citations(pid: str) -> int:
        return len(corpus.citing_index.get(pid, ()))

    if mode is Mode.PAPERS:
        if measure is Measure.PAPER_COUNT:
            return lambda elems: len(elems)
        if measure is Measure.TOTAL_CITATIONS:
            return lambda elems: sum(paper_citations(e.id) for e in elems)
        return lambda elems: h_index(paper_citations(e.id) for e in elems)
    # Citations mode: elements are links; papers are the distinct cited ends,
    # each scored by its link count inside the node.
    if measure is Measure.PAPER_COUNT:
        return lambda elems: len({e.cited.id for e in elems})
    if measure is Measure.TOTAL_CITATIONS:
        return lambda elems: len(elems)
    return lambda elems: h_index(Counter(e.cited.id for e in elems).values())


def _sort_key(facet: str, bar: "_Bar") -> tuple:
    if facet == "year":
        if bar.values is not None:
            return (0, 0, min(bar.values))
        if isinstance(bar.value, UnknownValue):
            return (0, 1, 0)
        return (0, 0, bar.value)
    if facet == "rank":
        vals = bar.values if bar.values is not None else {bar.value}
        return (0, min(_RANK_ORDER[v] for v in vals))
    if facet == "bucket":
        vals = bar.values if bar.values is not None else {bar.value}
        return (0, min(_BUCKET_ORDER[v] for v in vals))
    # venue / paper: measure descending, then label, then raw value
    raw = bar.value
    raw_str = "" if raw is None else (raw.value if isinstance(raw, Enum) else str(raw))
    return (-bar.measure, bar.label, raw_str)


@dataclass
class _Bar:
    value: object
    label: str
    is_group: bool
    values: Optional[frozenset]
    elems: list
    children: tuple = ()
    width: int = 0
    measure: Union[int, float] = 0
    surviving: list = field(default_factory=list)


def _partition(
    corpus: Corpus,
    elems: list,
    chain: tuple[AttributeKey, ...],
    level: int,
    specs: dict[AttributeKey, GroupSpec],
    thresholds: BucketThresholds,
    mfunc,
) -> tuple[list[HistNode], list]:
    """Build the bars for one level; returns (nodes, surviving elements)."""
    key = chain[level]
    gspec = specs.get(key)
    covered: dict[object, Group] = {}
    dropped_labels: set[str] = set()
    if gspec is not None:
        dropped_labels = set(gspec.ignored) | {"ignore"}
        for group in gspec.groups:
            for v in group.values:
                covered[v] = group

    singles: dict[object, list] = {}
    grouped: dict[str, list] = {}
    group_by_label = {g.label: g for g in (gspec.groups if gspec else ())}
    for e in elems:
        v = attribute_value(corpus, e, key, thresholds)
        group = covered.get(v)
        if group is not None:
            if group.label in dropped_labels:
                continue
            grouped.setdefault(group.label, []).append(e)
        else:
            singles.setdefault(v, []).append(e)

    bars: list[_Bar] = []
    for v, sub in singles.items():
        bars.append(_Bar(value=v, label=value_label(corpus, key, v), is_group=False, values=None, elems=sub))
    for label, sub in grouped.items():
        bars.append(_Bar(value=label, label=label, is_group=True, values=group_by_label[label].values, elems=sub))

    last = level == len(chain) - 1
    kept: list[_Bar] = []
    for bar in bars:
        if last:
            bar.children = ()
            bar.width = 1
            bar.surviving = bar.elems
            bar.measure = mfunc(bar.elems)
        else:
            child_nodes, surviving = _partition(corpus, bar.elems, chain, level + 1, specs, thresholds, mfunc)
            if not child_nodes:
                # everything below was discarded by an ignored group
                continue
            bar.children = tuple(child_nodes)
            bar.width = sum(c.width for c in child_nodes)
            bar.surviving = surviving
            bar.measure = mfunc(surviving)
        kept.append(bar)

    facet = key.facet
    kept.sort(key=lambda b: _sort_key(facet, b))
    nodes = [
        HistNode(
            attribute=key,
            value=bar.value,
            label=bar.label,
            is_group=bar.is_group,
            width=bar.width,
            measure=bar.measure,
            children=bar.children,
            elements=tuple(bar.surviving) if last else (),
            group_values=bar.values,
        )
        for bar in kept
    ]
    surviving_all = [e for bar in kept for e in bar.surviving]
    return nodes, surviving_all


def _check_chain(chain: Sequence[AttributeKey], mode: Mode) -> tuple[AttributeKey, ...]:
    chain = tuple(chain)
    if not 1 <= len(chain) <= MAX_CHAIN:
        raise ChainTooLong(len(chain), MAX_CHAIN)
    seen: set[AttributeKey] = set()
    for key in chain:
        if key in seen:
            raise RepeatedAttribute(key.value)
        seen.add(key)
        if key.is_citing and mode is Mode.PAPERS:
            raise InvalidAttributeForMode(key.value, mode.value)
    return chain


def build_hierarchy(
    corpus: Corpus,
    paper_set: PaperSet,
    chain: Sequence[AttributeKey],
    *,
    mode: Mode = Mode.PAPERS,
    group_specs: Iterable[GroupSpec] = (),
    measure: Measure = Measure.PAPER_COUNT,
    thresholds: BucketThresholds = DEFAULT_THRESHOLDS,
) -> Hierarchy:
    """Partition a paper set along an attribute chain into a bar hierarchy."""
    chain = _check_chain(chain, mode)
    specs = _check_group_specs(chain, group_specs)
    elements = elements_of(corpus, paper_set, mode)
    mfunc = _measure_fn(corpus, mode, measure)
    children, surviving = _partition(corpus, elements, chain, 0, specs, thresholds, mfunc)
    root = HistNode(
        attribute=None,
        value=None,
        label=paper_set.label,
        is_group=False,
        width=sum(c.width for c in children),
        measure=mfunc(surviving),
        children=tuple(children),
    )
    return Hierarchy(
        root=root,
        chain=chain,
        mode=mode,
        measure=measure,
        set_label=paper_set.label,
        thresholds=thresholds,
    )


def reorder_chain(
    corpus: Corpus,
    paper_set: PaperSet,
    chain: Sequence[AttributeKey],
    permutation: Sequence[int],
    *,
    mode: Mode = Mode.PAPERS,
    group_specs: Iterable[GroupSpec] = (),
    measure: Measure = Measure.PAPER_COUNT,
    thresholds: BucketThresholds = DEFAULT_THRESHOLDS,
) -> Hierarchy:
    """Rebuild with the chain levels permuted; grouping follows its attribute."""
    chain = tuple(chain)
    perm = tuple(permutation)
    if sorted(perm) != list(range(len(chain))):
        raise ValueError(f"permutation {list(perm)} does not fit a chain of {len(chain)} levels")
    reordered = tuple(chain[i] for i in perm)
    return build_hierarchy(
        corpus,
        paper_set,
        reordered,
        mode=mode,
        group_specs=group_specs,
        measure=measure,
        thresholds=thresholds,
    )


class ScaleKind(str, Enum):
    LINEAR = "linear"
    SQRT = "sqrt"
    LOG = "log"


def scale_heights(values: Iterable[Union[int, float]], kind: ScaleKind) -> list[float]:
    """Map measures to bar heights. All three scales preserve order.

    linear: v, sqrt: sqrt(v), log: log10(1 + v). Inputs must be >= 0.
    """
    arr = np.asarray(list(values), dtype=float)
    if arr.size and float(arr.min()) < 0:
        raise NegativeValue(float(arr.min()))
    kind = ScaleKind(kind)
    if kind is ScaleKind.LINEAR:
        out = arr
    elif kind is ScaleKind.SQRT:
        out = np.sqrt(arr)
    else:
        out = np.log10(1.0 + arr)
    return [float(x) for x in out]


def _json_value(value: object) -> object:
    if value is None:
        return None
    if isinstance(value, UnknownValue):
        return "Unknown"
    if isinstance(value, Enum):
        return value.value
    return value


def _element_id(element: Element) -> str:
    if isinstance(element, LinkElement):
        return f"{element.citing.id}->{element.cited.id}"
    return element.id


def _node_dict(node: HistNode, element_cap: int) -> dict:
    d: dict = {
        "attr": node.attribute.value if node.attribute is not None else None,
        "value": _json_value(node.value),
        "label": node.label,
        "group": node.is_group,
        "width": node.width,
        "measure": node.measure,
        "children": [_node_dict(c, element_cap) for c in node.children],
    }
    if node.is_group and node.group_values is not None:
        d["values"] = sorted(_json_value(v) for v in node.group_values)
    if node.is_leaf:
        m = float(node.measure)
        d["height_linear"] = m
        d["height_sqrt"] = math.sqrt(m)
        d["height_log"] = math.log10(1.0 + m)
        d["element_count"] = len(node.elements)
        d["element_ids"] = [_element_id(e) for e in node.elements[:element_cap]]
    return d


def hierarchy_to_dict(hierarchy: Hierarchy, element_cap: int = 200) -> dict:
    """JSON-shaped dict for one hierarchy; leaf element ids capped."""
    return {
        "set_label": hierarchy.set_label,
        "mode": hierarchy.mode.value,
        "measure": hierarchy.measure.value,
        "chain": [key.value for key in hierarchy.chain],
        "thresholds": {
            "low_below": hierarchy.thresholds.low_below,
            "high_at_least": hierarchy.thresholds.high_at_least,
        },
        "root": _node_dict(hierarchy.root, element_cap),
    }
