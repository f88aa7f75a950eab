"""HTTP API over one loaded corpus.

``create_app(corpus)`` returns a FastAPI app; ``serve(corpus)`` runs it with
uvicorn. Registered analysis sets live in an in-process registry keyed by
handles ``set-1``, ``set-2``, ...; at most one set holds the ``upper`` role
and one the ``lower`` role at a time.

Engine errors map to ``{"error": {"code", "message"}}`` bodies: unknown ids
and handles are 404, every other validation failure is 400.
"""

from __future__ import annotations

import importlib.resources
import json
import os
import socket
import threading
from dataclasses import dataclass
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .compare import align, comparison_to_dict, describe_comparison
from .corpus import UNKNOWN, Corpus
from .errors import EngineError, ParseError, PortInUse, UnknownSetHandle
from .histogram import (
    AttributeKey,
    BucketThresholds,
    CitationBucket,
    Group,
    GroupSpec,
    Hierarchy,
    Measure,
    Mode,
    build_hierarchy,
    hierarchy_to_dict,
)
from .metrics import citation_count, paper_h_index, set_metrics
from .sets import CombinationSpec, OperatorLabel, PaperSet, coauthor_stats, combine, filter_years, timeline
from .venues import CcfRank

__all__ = ["create_app", "serve", "load_schema", "schema_names", "DEFAULT_PORT"]

DEFAULT_PORT = 8642


def schema_names() -> list[str]:
    """Names of the published response schemas."""
    root = importlib.resources.files("scholarslice") / "schemas"
    return sorted(path.name[: -len(".json")] for path in root.iterdir() if path.name.endswith(".json"))


def load_schema(name: str) -> dict:
    """One published response schema as a dict (e.g. ``load_schema("hierarchy")``)."""
    path = importlib.resources.files("scholarslice") / "schemas" / f"{name}.json"
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(f"no schema named {name!r}; have {schema_names()}") from None
    return json.loads(raw)

_NOT_FOUND_CODES = {"UNKNOWN_PAPER_ID", "UNKNOWN_SCHOLAR_ID", "UNKNOWN_VENUE_ID", "UNKNOWN_SET_HANDLE"}


@dataclass
class RegisteredSet:
    handle: str
    paper_set: PaperSet
    role: Optional[str] = None


class SetRegistry:
    """Session-scoped registry of analysis sets."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._sets: dict[str, RegisteredSet] = {}
        self._seq = 0

    def add(self, paper_set: PaperSet) -> RegisteredSet:
        with self._lock:
            self._seq += 1
            handle = f"set-{self._seq}"
            entry = RegisteredSet(handle=handle, paper_set=paper_set)
            self._sets[handle] = entry
            return entry

    def get(self, handle: str) -> RegisteredSet:
        entry = self._sets.get(handle)
        if entry is None:
            raise UnknownSetHandle(handle)
        return entry

    def remove(self, handle: str) -> None:
        with self._lock:
            if handle not in self._sets:
                raise UnknownSetHandle(handle)
            del self._sets[handle]

    def assign_role(self, handle: str, role: str) -> None:
        with self._lock:
            entry = self._sets.get(handle)
            if entry is None:
                raise UnknownSetHandle(handle)
            for other in self._sets.values():
                if other.role == role and other.handle != handle:
                    other.role = None
            entry.role = role

    def all(self) -> list[RegisteredSet]:
        return list(self._sets.values())


class SetBody(BaseModel):
    labels: dict[str, str]


class FilterBody(BaseModel):
    from_year: int
    to_year: int


class GroupBody(BaseModel):
    label: str
    values: list


class GroupSpecBody(BaseModel):
    attribute: str
    groups: list[GroupBody] = []
    ignored: list[str] = []


class ThresholdsBody(BaseModel):
    low_below: int = 10
    high_at_least: int = 50


class HierarchyBody(BaseModel):
    chain: list[str]
    mode: str = "papers"
    groups: list[GroupSpecBody] = []
    measure: str = "papers"
    thresholds: Optional[ThresholdsBody] = None
    element_cap: int = 200


class CompareBody(BaseModel):
    upper: str
    lower: str
    lock: bool = True
    align: bool = False
    offset: int = 0
    request: Optional[HierarchyBody] = None
    upper_request: Optional[HierarchyBody] = None
    lower_request: Optional[HierarchyBody] = None


def _parse_enum(cls, raw: str, what: str):
    try:
        return cls(raw)
    except ValueError:
        valid = ", ".join(m.value for m in cls)
        raise ParseError(f"unknown {what} {raw!r}, expected one of: {valid}") from None


def _parse_spec(body: SetBody) -> CombinationSpec:
    labels = {sid: _parse_enum(OperatorLabel, op, "operator") for sid, op in body.labels.items()}
    return CombinationSpec(labels=labels)


_GROUP_VALUE_FACETS = {"rank": CcfRank, "bucket": CitationBucket}


def _parse_group_values(attr: AttributeKey, values: list) -> list:
    facet = attr.facet
    out = []
    for v in values:
        if facet == "year":
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"year group values must be integers, got {v!r}")
            out.append(v)
        elif facet in _GROUP_VALUE_FACETS:
            if not isinstance(v, str):
                raise ParseError(f"group values for {attr.value} must be strings, got {v!r}")
            out.append(_parse_enum(_GROUP_VALUE_FACETS[facet], v, attr.value))
        else:
            if not isinstance(v, str):
                raise ParseError(f"group values for {attr.value} must be strings, got {v!r}")
            out.append(v)
    return out


def _parse_hierarchy_body(body: HierarchyBody) -> dict:
    chain = tuple(_parse_enum(AttributeKey, a, "attribute") for a in body.chain)
    specs = []
    for spec_body in body.groups:
        attr = _parse_enum(AttributeKey, spec_body.attribute, "attribute")
        groups = [Group(g.label, _parse_group_values(attr, g.values)) for g in spec_body.groups]
        specs.append(GroupSpec(attribute=attr, groups=groups, ignored=spec_body.ignored))
    thresholds = BucketThresholds(
        low_below=body.thresholds.low_below, high_at_least=body.thresholds.high_at_least
    ) if body.thresholds is not None else BucketThresholds()
    return {
        "mode": _parse_enum(Mode, body.mode, "mode"),
        "chain": chain,
        "group_specs": tuple(specs),
        "measure": _parse_enum(Measure, body.measure, "measure"),
        "thresholds": thresholds,
    }


def _set_summary(corpus: Corpus, entry: RegisteredSet) -> dict:
    m = set_metrics(corpus, entry.paper_set)
    tl = timeline(corpus, entry.paper_set)
    return {
        "handle": entry.handle,
        "label": entry.paper_set.label,
        "role": entry.role,
        "paper_count": m.paper_count,
        "total_citations": m.total_citations,
        "h_index": m.h_index,
        "timeline": {str(year): count for year, count in tl.items()},
    }


def _build_side(corpus: Corpus, entry: RegisteredSet, params: dict) -> Hierarchy:
    return build_hierarchy(
        corpus,
        entry.paper_set,
        params["chain"],
        mode=params["mode"],
        group_specs=params["group_specs"],
        measure=params["measure"],
        thresholds=params["thresholds"],
    )


def create_app(corpus: Corpus) -> FastAPI:
    app = FastAPI(title="scholarslice", docs_url=None, redoc_url=None)
    registry = SetRegistry()
    app.state.corpus = corpus
    app.state.registry = registry

    @app.exception_handler(EngineError)
    async def engine_error_handler(request: Request, exc: EngineError):
        status = 404 if exc.code in _NOT_FOUND_CODES else 400
        return JSONResponse(status_code=status, content={"error": {"code": exc.code, "message": str(exc)}})

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "INVALID_BODY", "message": str(exc.errors()[:3])}},
        )

    @app.get("/health")
    def health() -> dict:
        return {
            "status": "ok",
            "papers": len(corpus.papers),
            "links": len(corpus.links),
            "scholars": len(corpus.scholars),
        }

    @app.get("/scholars")
    def scholars() -> dict:
        return {
            "scholars": [
                {
                    "id": sid,
                    "name": corpus.scholars[sid].name,
                    "paper_count": len(corpus.scholars[sid].paper_ids),
                }
                for sid in corpus.scholar_ids
            ]
        }

    @app.get("/scholars/{scholar_id}/coauthors")
    def coauthors(scholar_id: str) -> dict:
        focus = corpus.scholar(scholar_id)
        stats = coauthor_stats(corpus, scholar_id)
        return {
            "focus": {"id": focus.id, "name": focus.name, "paper_count": len(focus.paper_ids)},
            "coauthors": [
                {
                    "id": s.coauthor,
                    "name": s.name,
                    "total_papers": s.total_papers,
                    "co_papers": s.co_papers,
                }
                for s in stats
            ],
        }

    @app.get("/papers/{paper_id}")
    def paper_detail(paper_id: str) -> dict:
        rec = corpus.paper(paper_id)
        venue_id = None if rec.venue is UNKNOWN else rec.venue
        return {
            "id": rec.id,
            "title": rec.title,
            "year": None if rec.year is UNKNOWN else rec.year,
            "venue_id": venue_id,
            "venue": corpus.venues.display_name(venue_id) if venue_id else None,
            "authors": list(rec.authors),
            "citation_count": citation_count(corpus, paper_id),
            "paper_h_index": paper_h_index(corpus, paper_id),
        }

    @app.get("/sets")
    def list_sets() -> dict:
        return {"sets": [_set_summary(corpus, e) for e in registry.all()]}

    @app.post("/sets", status_code=201)
    def create_set(body: SetBody) -> dict:
        spec = _parse_spec(body)
        entry = registry.add(combine(corpus, spec))
        return _set_summary(corpus, entry)

    @app.delete("/sets/{handle}")
    def delete_set(handle: str) -> dict:
        registry.remove(handle)
        return {"deleted": handle}

    @app.post("/sets/{handle}/filter-years", status_code=201)
    def filter_set(handle: str, body: FilterBody) -> dict:
        entry = registry.get(handle)
        filtered = filter_years(corpus, entry.paper_set, body.from_year, body.to_year)
        return _set_summary(corpus, registry.add(filtered))

    @app.post("/sets/{handle}/hierarchy")
    def set_hierarchy(handle: str, body: HierarchyBody) -> dict:
        entry = registry.get(handle)
        params = _parse_hierarchy_body(body)
        hierarchy = _build_side(corpus, entry, params)
        return hierarchy_to_dict(hierarchy, element_cap=body.element_cap)

    @app.post("/compare")
    def compare(body: CompareBody) -> dict:
        upper_entry = registry.get(body.upper)
        lower_entry = registry.get(body.lower)
        if body.lock:
            if body.request is None:
                raise ParseError("a locked comparison needs a shared 'request'")
            upper_params = lower_params = _parse_hierarchy_body(body.request)
            cap = body.request.element_cap
        else:
            if body.upper_request is None or body.lower_request is None:
                raise ParseError("an unlocked comparison needs 'upper_request' and 'lower_request'")
            upper_params = _parse_hierarchy_body(body.upper_request)
            lower_params = _parse_hierarchy_body(body.lower_request)
            cap = body.upper_request.element_cap
        registry.assign_role(body.upper, "upper")
        registry.assign_role(body.lower, "lower")
        upper_h = _build_side(corpus, upper_entry, upper_params)
        lower_h = _build_side(corpus, lower_entry, lower_params)
        if body.align:
            comparison = align(upper_h, lower_h, offset=body.offset)
            result = comparison_to_dict(comparison, element_cap=cap)
            result["aligned"] = True
            return result
        desc = describe_comparison(upper_h.set_label, lower_h.set_label, aligned=False)
        return {
            "aligned": False,
            "offset": body.offset,
            "upper_label": upper_h.set_label,
            "lower_label": lower_h.set_label,
            "description": {
                "aligned": False,
                "upper": desc.upper,
                "lower": desc.lower,
                "combined": None,
                "parts": [list(p) for p in desc.parts],
            },
            "upper": hierarchy_to_dict(upper_h, element_cap=cap),
            "lower": hierarchy_to_dict(lower_h, element_cap=cap),
        }

    return app


def _check_port(host: str, port: int) -> None:
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError:
        raise PortInUse(port) from None
    finally:
        probe.close()


def serve(corpus: Corpus, host: str = "127.0.0.1", port: Optional[int] = None) -> None:
    """Run the API with uvicorn. Raises PortInUse before starting."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("SD2_PORT", str(DEFAULT_PORT)))
    _check_port(host, port)
    uvicorn.run(create_app(corpus), host=host, port=port, log_level="warning")
