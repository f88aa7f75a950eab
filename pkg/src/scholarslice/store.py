"""Deterministic on-disk snapshots of a loaded corpus.

The store is canonical JSON: keys sorted, compact separators, UTF-8, lists
pre-sorted (papers by id, links lexicographically, venues by id) except
scholar profiles, whose file order is meaningful (registration order).
Loading the same four input files always produces byte-identical stores.
"""

from __future__ import annotations

import json
from typing import Optional

from .corpus import UNKNOWN, Corpus, LoadReport, PaperRecord, ScholarProfile
from .errors import FileNotReadable, SchemaViolation
from .venues import CcfRank, VenueRecord, VenueTable

__all__ = ["canonical_json", "corpus_to_dict", "corpus_from_dict", "save_store", "load_store"]

_FORMAT = "scholarslice-store"
_VERSION = 1


def canonical_json(obj: object) -> str:
    """The one JSON spelling used everywhere byte-stability matters."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _opt(value: object) -> Optional[object]:
    return None if value is UNKNOWN else value


def corpus_to_dict(corpus: Corpus) -> dict:
    papers = [
        [p.id, p.title, _opt(p.year), _opt(p.venue), list(p.authors)]
        for p in sorted(corpus.papers.values(), key=lambda p: p.id)
    ]
    profiles = [
        [s.id, s.name, list(s.listed_paper_ids), sorted(s.paper_ids)]
        for s in corpus.scholars.values()
    ]
    venues = [
        [v.id, v.canonical, list(v.aliases), v.category, v.rank.value]
        for v in sorted(corpus.venues.records, key=lambda v: v.id)
    ]
    return {
        "format": _FORMAT,
        "version": _VERSION,
        "papers": papers,
        "links": [list(pair) for pair in corpus.links],
        "profiles": profiles,
        "venues": venues,
        "report": corpus.report.as_dict(),
    }


def corpus_from_dict(data: dict) -> Corpus:
    if not isinstance(data, dict) or data.get("format") != _FORMAT:
        raise SchemaViolation("not a corpus store file", field="format")
    if data.get("version") != _VERSION:
        raise SchemaViolation(f"unsupported store version {data.get('version')!r}", field="version")
    for section in ("papers", "links", "profiles", "venues"):
        if not isinstance(data.get(section), list):
            raise SchemaViolation(f"missing store section {section!r}", field=section)

    venue_records = [
        VenueRecord(
            id=vid,
            canonical=canonical,
            aliases=tuple(aliases),
            category=category,
            rank=CcfRank.UNRANKED if rank == "Unranked" else CcfRank(rank),
        )
        for vid, canonical, aliases, category, rank in data["venues"]
    ]
    venues = VenueTable(venue_records)

    papers = {
        pid: PaperRecord(
            id=pid,
            title=title,
            year=UNKNOWN if year is None else year,
            venue=UNKNOWN if venue is None else venue,
            authors=tuple(authors),
        )
        for pid, title, year, venue, authors in data["papers"]
    }

    links = tuple((citing, cited) for citing, cited in data["links"])
    scholars = {
        sid: ScholarProfile(
            id=sid,
            name=name,
            listed_paper_ids=tuple(listed),
            paper_ids=frozenset(present),
        )
        for sid, name, listed, present in data["profiles"]
    }

    report_data = data.get("report", {})
    report = LoadReport(**{k: int(report_data.get(k, 0)) for k in LoadReport().as_dict()})

    citing_index: dict[str, list[str]] = {}
    cited_index: dict[str, list[str]] = {}
    for citing, cited in links:
        citing_index.setdefault(cited, []).append(citing)
        cited_index.setdefault(citing, []).append(cited)

    return Corpus(
        papers=papers,
        links=links,
        scholars=scholars,
        venues=venues,
        report=report,
        citing_index={k: tuple(sorted(v)) for k, v in citing_index.items()},
        cited_index={k: tuple(sorted(v)) for k, v in cited_index.items()},
    )


def save_store(corpus: Corpus, path: str) -> None:
    payload = canonical_json(corpus_to_dict(corpus)).encode("utf-8")
    try:
        with open(path, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc


def load_store(path: str) -> Corpus:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise FileNotReadable(path, str(exc)) from exc
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, ValueError) as exc:
        raise SchemaViolation(f"store file is not valid JSON: {exc}") from exc
    return corpus_from_dict(data)
