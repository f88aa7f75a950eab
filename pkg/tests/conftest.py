"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

from pathlib import Path

import pytest

from scholarslice import Corpus, VenueTable, build_corpus, load_corpus
from scholarslice.venues import VenueRecord, CcfRank

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): a named acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            name = marker.kwargs.get("name") or marker.args[0]
            _ACCEPTANCE_RESULTS.append((name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, ok in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"ACCEPTANCE {'PASS' if ok else 'FAIL'}: {name}")


@pytest.fixture(scope="session")
def small_paths() -> dict[str, str]:
    base = FIXTURES / "small"
    return {
        "papers": str(base / "papers.jsonl"),
        "citations": str(base / "citations.csv"),
        "venues": str(base / "venues.json"),
        "profiles": str(base / "profiles.jsonl"),
    }


@pytest.fixture(scope="session")
def corpus_paths() -> dict[str, str]:
    base = FIXTURES / "corpus"
    return {
        "papers": str(base / "papers.jsonl"),
        "citations": str(base / "citations.csv"),
        "venues": str(base / "venues.json"),
        "profiles": str(base / "profiles.jsonl"),
    }


@pytest.fixture(scope="session")
def small_corpus(small_paths) -> Corpus:
    return load_corpus(
        small_paths["papers"], small_paths["citations"], small_paths["venues"], small_paths["profiles"]
    )


@pytest.fixture(scope="session")
def big_corpus(corpus_paths) -> Corpus:
    return load_corpus(
        corpus_paths["papers"], corpus_paths["citations"], corpus_paths["venues"], corpus_paths["profiles"]
    )


@pytest.fixture(scope="session")
def mini_venues() -> VenueTable:
    return VenueTable(
        [
            VenueRecord("v-grand", "Grand Annals of Testing", ("GAT",), "theoretical computer science", CcfRank.A),
            VenueRecord("v-petit", "Petit Review of Widgets", ("PRW",), "computer graphics and multimedia", CcfRank.B),
            VenueRecord("v-side", "Sideline Notes Quarterly", ("SNQ",), None, CcfRank.UNRANKED),
        ]
    )


def make_corpus(
    papers: list[dict],
    links: list[tuple[str, str]] = (),
    profiles: list[dict] = (),
    venues: VenueTable | None = None,
) -> Corpus:
    """Inline corpus builder for hand-crafted cases."""
    if venues is None:
        venues = VenueTable([])
    return build_corpus(papers, links, venues, profiles)


def paper_row(pid: str, year=2000, venue=None, title: str | None = None, authors=()) -> dict:
    return {
        "id": pid,
        "title": title if title is not None else f"Paper {pid}",
        "year": year,
        "venue": venue,
        "authors": list(authors),
    }
