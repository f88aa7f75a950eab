"""Citation metrics: counts, h-index, and per-set summaries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus
from .sets import PaperSet

__all__ = [
    "h_index",
    "citation_count",
    "paper_h_index",
    "SetMetrics",
    "set_metrics",
]


def h_index(counts: Iterable[int]) -> int:
    """Largest h such that at least h of the counts are >= h."""
    ordered = sorted(counts, reverse=True)
    if ordered and ordered[-1] < 0:
        raise ValueError(f"citation counts must be non-negative, got {ordered[-1]}")
    h = 0
    for i, c in enumerate(ordered, 1):
        if c >= i:
            h = i
        else:
            break
    return h


def citation_count(corpus: Corpus, paper_id: str) -> int:
    """Number of corpus papers citing ``paper_id``."""
    return len(corpus.citing_papers(paper_id))


def paper_h_index(corpus: Corpus, paper_id: str) -> int:
    """h-index of the papers citing ``paper_id``, by their own citation counts.

    A paper with per-paper h-index h is cited by at least h papers that are
    themselves cited at least h times; a high value signals influential
    citers, not just many of them.
    """
    return h_index(citation_count(corpus, q) for q in corpus.citing_papers(paper_id))


@dataclass(frozen=True)
class SetMetrics:
    paper_count: int
    total_citations: int
    h_index: int


def set_metrics(corpus: Corpus, paper_set: PaperSet) -> SetMetrics:
    """Summary metrics for a paper set.

    ``total_citations`` sums each member's citation count, so a paper citing
    two members contributes twice, matching how profile totals are usually
    reported.
    """
    counts = [citation_count(corpus, pid) for pid in paper_set.ids]
    return SetMetrics(
        paper_count=len(counts),
        total_citations=sum(counts),
        h_index=h_index(counts),
    )
