"""Bibliographic corpus: papers, citation links, scholars, venues.

A corpus is loaded once from four files and treated as immutable afterwards:

* papers.jsonl, one JSON object per line:
  ``{"id", "title", "year": int|null, "venue": str|null, "authors": [str]}``
* citations.csv with the exact header ``citing,cited``
* venues.json, a list of venue objects (see :mod:`scholarslice.venues`)
* profiles.jsonl, one scholar per line:
  ``{"scholar_id", "name", "paper_ids": [str]}``

Malformed rows are dropped and counted in the :class:`LoadReport`; files that
are structurally broken (bad CSV header, venues file that is not a list)
raise :class:`~scholarslice.errors.SchemaViolation`. Duplicate paper ids are
fatal. Scholar profiles are the authoritative source of authorship: the
``authors`` field on papers is advisory display data only.

Missing years and unresolvable venues map to the :data:`UNKNOWN` sentinel,
which sorts after every real value and prints as ``"Unknown"``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import (
    DuplicatePaperId,
    FileNotReadable,
    SchemaViolation,
    UnknownPaperId,
    UnknownScholarId,
)
from .venues import VenueTable, load_venues

__all__ = [
    "UNKNOWN",
    "UnknownValue",
    "YEAR_MIN",
    "YEAR_MAX",
    "PaperRecord",
    "ScholarProfile",
    "LoadReport",
    "Corpus",
    "build_corpus",
    "load_corpus",
]

YEAR_MIN = 1900
YEAR_MAX = 2100


class UnknownValue:
    """Singleton sentinel for missing years and unresolved venues."""

    _instance: Optional["UnknownValue"] = None

    def __new__(cls) -> "UnknownValue":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def __str__(self) -> str:
        return "Unknown"


UNKNOWN = UnknownValue()

Year = Union[int, UnknownValue]
VenueRef = Union[str, UnknownValue]


@dataclass(frozen=True)
class PaperRecord:
    """One paper. ``venue`` is a resolved venue id or UNKNOWN."""

    id: str
    title: str
    year: Year
    venue: VenueRef
    authors: tuple[str, ...] = ()


@dataclass(frozen=True)
class ScholarProfile:
    """One registered scholar.

    ``listed_paper_ids`` is the profile as given; ``paper_ids`` keeps only
    ids present in the corpus, which is what every downstream operation uses.
    """

    id: str
    name: str
    listed_paper_ids: tuple[str, ...]
    paper_ids: frozenset[str]


@dataclass
class LoadReport:
    """Counts of accepted and dropped records for one load."""

    papers_accepted: int = 0
    papers_dropped: int = 0
    links_accepted: int = 0
    links_dropped_malformed: int = 0
    links_dropped_self: int = 0
    links_dropped_dangling: int = 0
    links_dropped_duplicate: int = 0
    scholars_accepted: int = 0
    scholars_dropped: int = 0
    profile_papers_unresolved: int = 0
    venues_unresolved: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "papers_accepted": self.papers_accepted,
            "papers_dropped": self.papers_dropped,
            "links_accepted": self.links_accepted,
            "links_dropped_malformed": self.links_dropped_malformed,
            "links_dropped_self": self.links_dropped_self,
            "links_dropped_dangling": self.links_dropped_dangling,
            "links_dropped_duplicate": self.links_dropped_duplicate,
            "scholars_accepted": self.scholars_accepted,
            "scholars_dropped": self.scholars_dropped,
            "profile_papers_unresolved": self.profile_papers_unresolved,
            "venues_unresolved": self.venues_unresolved,
        }


@dataclass(frozen=True)
class Corpus:
    """Immutable snapshot of papers, links, scholars, and venues."""

    papers: Mapping[str, PaperRecord]
    links: tuple[tuple[str, str], ...]
    scholars: Mapping[str, ScholarProfile]
    venues: VenueTable
    report: LoadReport
    citing_index: Mapping[str, tuple[str, ...]] = field(repr=False, default_factory=dict)
    cited_index: Mapping[str, tuple[str, ...]] = field(repr=False, default_factory=dict)

    def paper(self, paper_id: str) -> PaperRecord:
        rec = self.papers.get(paper_id)
        if rec is None:
            raise UnknownPaperId(paper_id)
        return rec

    def scholar(self, scholar_id: str) -> ScholarProfile:
        prof = self.scholars.get(scholar_id)
        if prof is None:
            raise UnknownScholarId(scholar_id)
        return prof

    def citing_papers(self, paper_id: str) -> tuple[str, ...]:
        """Ids of papers that cite ``paper_id``, ascending."""
        self.paper(paper_id)
        return self.citing_index.get(paper_id, ())

    def cited_papers(self, paper_id: str) -> tuple[str, ...]:
        """Ids of papers that ``paper_id`` cites, ascending."""
        self.paper(paper_id)
        return self.cited_index.get(paper_id, ())

    @property
    def scholar_ids(self) -> tuple[str, ...]:
        """Scholar ids in registration order (profile file order)."""
        return tuple(self.scholars)


def _valid_paper_row(row: object) -> Optional[tuple[str, str, Optional[int], Optional[str], tuple[str, ...]]]:
    """Validate one papers.jsonl row; None means drop it."""
    if not isinstance(row, dict):
        return None
    pid = row.get("id")
    title = row.get("title")
    year = row.get("year")
    venue = row.get("venue")
    authors = row.get("authors")
    if not isinstance(pid, str) or not pid:
        return None
    if not isinstance(title, str):
        return None
    if year is not None:
        if isinstance(year, bool) or not isinstance(year, int):
            return None
        if not YEAR_MIN <= year <= YEAR_MAX:
            return None
    if venue is not None and not isinstance(venue, str):
        return None
    if not isinstance(authors, list) or any(not isinstance(a, str) or not a for a in authors):
        return None
    return pid, title, year, venue, tuple(dict.fromkeys(authors))


def _valid_profile_row(row: object) -> Optional[tuple[str, str, tuple[str, ...]]]:
    if not isinstance(row, dict):
        return None
    sid = row.get("scholar_id")
    name = row.get("name")
    paper_ids = row.get("paper_ids")
    if not isinstance(sid, str) or not sid:
        return None
    if not isinstance(name, str) or not name:
        return None
    if not isinstance(paper_ids, list) or any(not isinstance(p, str) or not p for p in paper_ids):
        return None
    return sid, name, tuple(dict.fromkeys(paper_ids))


def build_corpus(
    paper_rows: Iterable[object],
    link_rows: Iterable[object],
    venues: VenueTable,
    profile_rows: Iterable[object],
) -> Corpus:
    """Assemble a corpus from parsed rows, applying all validation rules.

    Rows may be ``None`` (a line that failed to parse), which counts as
    malformed. Link rows are ``(citing, cited)`` pairs; paper and profile
    rows are dicts in file schema shape.
    """
    report = LoadReport()
    papers: dict[str, PaperRecord] = {}

    for row in paper_rows:
        parsed = _valid_paper_row(row) if row is not None else None
        if parsed is None:
            report.papers_dropped += 1
            continue
        pid, title, year, venue_raw, authors = parsed
        if pid in papers:
            raise DuplicatePaperId(pid)
        year_val: Year = UNKNOWN if year is None else year
        venue_val: VenueRef = UNKNOWN
        if venue_raw is not None and venue_raw.strip():
            resolved = venues.resolve(venue_raw)
            if resolved is None:
                report.venues_unresolved += 1
            else:
                venue_val = resolved
        papers[pid] = PaperRecord(id=pid, title=title, year=year_val, venue=venue_val, authors=authors)
        report.papers_accepted += 1

    links: list[tuple[str, str]] = []
    seen_links: set[tuple[str, str]] = set()
    for row in link_rows:
        if (
            row is None
            or not isinstance(row, (tuple, list))
            or len(row) != 2
            or not all(isinstance(x, str) and x for x in row)
        ):
            report.links_dropped_malformed += 1
            continue
        citing, cited = row[0], row[1]
        if citing == cited:
            report.links_dropped_self += 1
            continue
        if citing not in papers or cited not in papers:
            report.links_dropped_dangling += 1
            continue
        pair = (citing, cited)
        if pair in seen_links:
            report.links_dropped_duplicate += 1
            continue
        seen_links.add(pair)
        links.append(pair)
        report.links_accepted += 1
    links.sort()

    scholars: dict[str, ScholarProfile] = {}
    for row in profile_rows:
        parsed = _valid_profile_row(row) if row is not None else None
        if parsed is None:
            report.scholars_dropped += 1
            continue
        sid, name, listed = parsed
        if sid in scholars:
            report.scholars_dropped += 1
            continue
        present = frozenset(p for p in listed if p in papers)
        report.profile_papers_unresolved += len(listed) - len(present)
        scholars[sid] = ScholarProfile(id=sid, name=name, listed_paper_ids=listed, paper_ids=present)
        report.scholars_accepted += 1

    citing_index: dict[str, list[str]] = {}
    cited_index: dict[str, list[str]] = {}
    for citing, cited in links:
        citing_index.setdefault(cited, []).append(citing)
        cited_index.setdefault(citing, []).append(cited)

    return Corpus(
        papers=papers,
        links=tuple(links),
        scholars=scholars,
        venues=venues,
        report=report,
        citing_index={k: tuple(sorted(v)) for k, v in citing_index.items()},
        cited_index={k: tuple(sorted(v)) for k, v in cited_index.items()},
    )


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileNotReadable(path, str(exc)) from exc


def _jsonl_rows(text: str) -> Iterator[object]:
    """Yield parsed objects for non-blank lines; unparseable lines yield None."""
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            yield json.loads(line)
        except ValueError:
            yield None


def _link_rows(text: str) -> Iterator[object]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaViolation("citations file is empty", line=1, field="header") from None
    if [h.strip().lstrip("﻿") for h in header] != ["citing", "cited"]:
        raise SchemaViolation("citations header must be exactly 'citing,cited'", line=1, field="header")
    for row in reader:
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            yield None
            continue
        yield (row[0].strip(), row[1].strip())


def load_corpus(
    papers_path: str,
    citations_path: str,
    venues_path: str,
    profiles_path: str,
) -> Corpus:
    """Load the four corpus files and build an immutable snapshot."""
    venues = load_venues(venues_path)
    papers_text = _read_text(papers_path)
    citations_text = _read_text(citations_path)
    profiles_text = _read_text(profiles_path)
    return build_corpus(
        _jsonl_rows(papers_text),
        _link_rows(citations_text),
        venues,
        _jsonl_rows(profiles_text),
    )
