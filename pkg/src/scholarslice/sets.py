"""Scholar set algebra.

Every registered scholar owns a set of papers (their profile intersected
with the corpus). An analysis set is built by labeling each scholar with one
of four operators and combining:

* ``And``: the result is restricted to this scholar's papers;
* ``Or``: the result may draw from this scholar's papers;
* ``Not``: this scholar's papers are removed;
* ``Ignore``: the scholar does not participate.

Formally, with O the union of all Or scholars' sets (the whole corpus when
there are none), A the intersection of all And sets (the whole corpus when
there are none), and N the union of all Not sets, the combination is
``(O & A) - N``. At least one And or Or scholar is required.

Labels render canonically: And names joined with `` + ``, the Or group
joined with `` | `` and parenthesized when And names are present, and each
Not name appended as `` - name``, all in registration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Union

from .corpus import UNKNOWN, Corpus, UnknownValue
from .errors import InvalidRange, NoPositiveSelector, UnknownScholarId

__all__ = [
    "OperatorLabel",
    "CombinationSpec",
    "PaperSet",
    "CoauthorStat",
    "papers_of",
    "combine",
    "format_label",
    "coauthor_stats",
    "timeline",
    "filter_years",
]

EN_DASH = "–"


class OperatorLabel(str, Enum):
    NOT = "not"
    IGNORE = "ignore"
    AND = "and"
    OR = "or"


@dataclass(frozen=True)
class CombinationSpec:
    """Operator label per scholar id. Unlabeled scholars are ignored."""

    labels: Mapping[str, OperatorLabel]

    @classmethod
    def from_strings(cls, labels: Mapping[str, str]) -> "CombinationSpec":
        return cls({sid: OperatorLabel(val) for sid, val in labels.items()})

    def partition(self, corpus: Corpus) -> tuple[list[str], list[str], list[str]]:
        """Split into (and_ids, or_ids, not_ids) in registration order.

        Raises UnknownScholarId for unregistered ids and NoPositiveSelector
        when no And or Or label is present.
        """
        for sid in self.labels:
            if sid not in corpus.scholars:
                raise UnknownScholarId(sid)
        ands, ors, nots = [], [], []
        for sid in corpus.scholar_ids:
            label = self.labels.get(sid)
            if label is None or label is OperatorLabel.IGNORE:
                continue
            if label is OperatorLabel.AND:
                ands.append(sid)
            elif label is OperatorLabel.OR:
                ors.append(sid)
            else:
                nots.append(sid)
        if not ands and not ors:
            raise NoPositiveSelector()
        return ands, ors, nots


@dataclass(frozen=True)
class PaperSet:
    """A set of paper ids with a display label."""

    ids: frozenset[str]
    label: str
    spec: Optional[CombinationSpec] = None

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, paper_id: str) -> bool:
        return paper_id in self.ids


@dataclass(frozen=True)
class CoauthorStat:
    coauthor: str
    name: str
    total_papers: int
    co_papers: int


def papers_of(corpus: Corpus, scholar_id: str) -> PaperSet:
    """The scholar's papers (profile entries present in the corpus)."""
    prof = corpus.scholar(scholar_id)
    return PaperSet(ids=prof.paper_ids, label=prof.name)


def combine(corpus: Corpus, spec: CombinationSpec) -> PaperSet:
    """Evaluate a combination spec to a PaperSet with its canonical label."""
    ands, ors, nots = spec.partition(corpus)
    universe = frozenset(corpus.papers)
    result = universe
    if ors:
        pool: frozenset[str] = frozenset()
        for sid in ors:
            pool |= corpus.scholars[sid].paper_ids
        result &= pool
    for sid in ands:
        result &= corpus.scholars[sid].paper_ids
    for sid in nots:
        result -= corpus.scholars[sid].paper_ids
    return PaperSet(ids=result, label=format_label(corpus, spec), spec=spec)


def format_label(corpus: Corpus, spec: CombinationSpec) -> str:
    """Render the canonical display label for a combination."""
    ands, ors, nots = spec.partition(corpus)

    def name(sid: str) -> str:
        return corpus.scholars[sid].name

    parts = [name(sid) for sid in ands]
    if ors:
        group = " | ".join(name(sid) for sid in ors)
        parts.append(f"({group})" if ands else group)
    label = " + ".join(parts)
    for sid in nots:
        label += f" - {name(sid)}"
    return label


def coauthor_stats(corpus: Corpus, scholar_id: str) -> tuple[CoauthorStat, ...]:
    """Registered scholars sharing at least one paper with ``scholar_id``.

    Sorted by shared-paper count descending, then name, then id.
    """
    focus = corpus.scholar(scholar_id)
    stats = []
    for sid in corpus.scholar_ids:
        if sid == scholar_id:
            continue
        other = corpus.scholars[sid]
        shared = len(focus.paper_ids & other.paper_ids)
        if shared:
            stats.append(
                CoauthorStat(
                    coauthor=sid,
                    name=other.name,
                    total_papers=len(other.paper_ids),
                    co_papers=shared,
                )
            )
    stats.sort(key=lambda s: (-s.co_papers, s.name, s.coauthor))
    return tuple(stats)


def timeline(corpus: Corpus, paper_set: PaperSet) -> dict[Union[int, UnknownValue], int]:
    """Paper counts per publication year; UNKNOWN collects missing years.

    Keys are the years that actually occur, ascending, UNKNOWN last.
    """
    counts: dict[Union[int, UnknownValue], int] = {}
    for pid in paper_set.ids:
        year = corpus.paper(pid).year
        counts[year] = counts.get(year, 0) + 1
    ordered = sorted((y for y in counts if not isinstance(y, UnknownValue)))
    result: dict[Union[int, UnknownValue], int] = {y: counts[y] for y in ordered}
    if UNKNOWN in counts:
        result[UNKNOWN] = counts[UNKNOWN]
    return result


def filter_years(corpus: Corpus, paper_set: PaperSet, from_year: int, to_year: int) -> PaperSet:
    """Restrict a set to papers published within [from_year, to_year].

    Papers with unknown years are dropped. The label records the window.
    """
    if from_year > to_year:
        raise InvalidRange(f"empty year range {from_year}..{to_year}")
    kept = frozenset(
        pid
        for pid in paper_set.ids
        if isinstance(corpus.paper(pid).year, int) and from_year <= corpus.paper(pid).year <= to_year
    )
    label = f"{paper_set.label} [{from_year}{EN_DASH}{to_year}]"
    return PaperSet(ids=kept, label=label, spec=paper_set.spec)
