"""Command line front end.

Subcommands:

* ``ingest``: read the four corpus files, write a deterministic store file
  plus a load report.
* ``query``: evaluate a combination expression against a store; with
  ``--chain``, also build a hierarchy. Output is canonical JSON on stdout.
* ``serve``: run the HTTP API over a store.

Exit codes: 0 ok, 2 unreadable file, 3 duplicate paper id, 4 parse or
validation error, 5 unknown id, 6 port in use.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import api
from .corpus import load_corpus
from .errors import (
    DuplicatePaperId,
    EngineError,
    FileNotReadable,
    ParseError,
    PortInUse,
    RepeatedAttribute,
    UnknownPaperId,
    UnknownScholarId,
    UnknownSetHandle,
    UnknownVenueId,
)
from .expressions import spec_from_expression
from .histogram import AttributeKey, Measure, Mode, build_hierarchy, hierarchy_to_dict
from .metrics import set_metrics
from .sets import combine
from .store import canonical_json, load_store, save_store

__all__ = ["main"]


def _exit_code(exc: EngineError) -> int:
    if isinstance(exc, FileNotReadable):
        return 2
    if isinstance(exc, DuplicatePaperId):
        return 3
    if isinstance(exc, (UnknownPaperId, UnknownScholarId, UnknownVenueId, UnknownSetHandle)):
        return 5
    if isinstance(exc, PortInUse):
        return 6
    return 4


def _store_path(args: argparse.Namespace) -> str:
    path = args.store or os.environ.get("SD2_STORE")
    if not path:
        raise FileNotReadable("<store>", "no --store given and SD2_STORE is not set")
    return path


def cli_ingest(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.papers, args.citations, args.venues, args.profiles)
    save_store(corpus, args.out)
    report = corpus.report.as_dict()
    report_path = args.report or f"{args.out}.report.json"
    with open(report_path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(report))
        fh.write("\n")
    print(
        f"ingested {report['papers_accepted']} papers, "
        f"{report['links_accepted']} links, "
        f"{report['scholars_accepted']} scholars -> {args.out}"
    )
    dropped = sum(v for k, v in report.items() if "dropped" in k or "unresolved" in k)
    if dropped:
        print(f"dropped or unresolved records: {dropped} (see {report_path})")
    return 0


def _parse_chain(raw: str) -> tuple[AttributeKey, ...]:
    keys = []
    for part in raw.split(","):
        part = part.strip()
        try:
            keys.append(AttributeKey(part))
        except ValueError:
            valid = ", ".join(a.value for a in AttributeKey)
            raise ParseError(f"unknown attribute {part!r}, expected one of: {valid}") from None
    return tuple(keys)


def cli_query(args: argparse.Namespace) -> int:
    corpus = load_store(_store_path(args))
    spec = spec_from_expression(corpus, args.expr)
    paper_set = combine(corpus, spec)
    metrics = set_metrics(corpus, paper_set)
    out: dict = {
        "label": paper_set.label,
        "paper_count": metrics.paper_count,
        "total_citations": metrics.total_citations,
        "h_index": metrics.h_index,
        "hierarchy": None,
    }
    if args.chain:
        chain = _parse_chain(args.chain)
        try:
            mode = Mode(args.mode)
        except ValueError:
            raise ParseError(f"unknown mode {args.mode!r}") from None
        try:
            measure = Measure(args.measure)
        except ValueError:
            valid = ", ".join(m.value for m in Measure)
            raise ParseError(f"unknown measure {args.measure!r}, expected one of: {valid}") from None
        try:
            hierarchy = build_hierarchy(corpus, paper_set, chain, mode=mode, measure=measure)
        except RepeatedAttribute as exc:
            raise ParseError(str(exc)) from None
        out["hierarchy"] = hierarchy_to_dict(hierarchy)
    print(canonical_json(out))
    return 0


def cli_serve(args: argparse.Namespace) -> int:
    corpus = load_store(_store_path(args))
    port = args.port if args.port is not None else int(os.environ.get("SD2_PORT", str(api.DEFAULT_PORT)))
    api.serve(corpus, host=args.host, port=port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scholarslice", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="build a store from the four corpus files")
    p_ingest.add_argument("--papers", required=True)
    p_ingest.add_argument("--citations", required=True)
    p_ingest.add_argument("--venues", required=True)
    p_ingest.add_argument("--profiles", required=True)
    p_ingest.add_argument("--out", required=True)
    p_ingest.add_argument("--report", help="load report path (default: <out>.report.json)")
    p_ingest.set_defaults(func=cli_ingest)

    p_query = sub.add_parser("query", help="evaluate a combination expression")
    p_query.add_argument("--store", help="store file (default: $SD2_STORE)")
    p_query.add_argument("--expr", required=True, help='e.g. "Bengio + Courville - Goodfellow"')
    p_query.add_argument("--mode", default="papers", help="papers or citations")
    p_query.add_argument("--chain", help="comma-separated attributes, e.g. P.Year,P.Venue")
    p_query.add_argument("--measure", default="papers", help="papers, citations, or hindex")
    p_query.set_defaults(func=cli_query)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--store", help="store file (default: $SD2_STORE)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, help="default: $SD2_PORT or 8642")
    p_serve.set_defaults(func=cli_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
