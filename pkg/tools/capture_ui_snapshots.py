#!/usr/bin/env python3
"""Capture live API responses into frontend/tests/fixtures/snapshots.json.

The web client's tests never invent expected values: every number and label
they assert against comes from this file, which records real responses from
the engine over the checked-in fixture corpus. Rerun after changing the
fixture corpus or any response shape.

Run from the repository root:  python3 tools/capture_ui_snapshots.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from scholarslice import load_corpus
from scholarslice.api import create_app

ROOT = Path(__file__).resolve().parent.parent
BASE = ROOT / "fixtures" / "corpus"
OUT = ROOT / "frontend" / "tests" / "fixtures" / "snapshots.json"

LABEL_CASES = [
    {"s01": "and", "s02": "and"},
    {"s01": "and", "s02": "or"},
    {"s01": "and", "s02": "not"},
    {"s02": "or", "s03": "or"},
    {"s01": "and", "s02": "not", "s03": "not"},
    {"s01": "and", "s04": "or", "s05": "or"},
    {"s01": "and", "s02": "ignore", "s03": "or", "s04": "or", "s05": "not"},
    {"s07": "and"},
    {"s03": "or", "s06": "or", "s09": "or"},
    {"s02": "and", "s08": "and", "s10": "not"},
]


def main() -> None:
    corpus = load_corpus(
        str(BASE / "papers.jsonl"),
        str(BASE / "citations.csv"),
        str(BASE / "venues.json"),
        str(BASE / "profiles.jsonl"),
    )
    snaps: dict = {}
    with TestClient(create_app(corpus)) as client:
        snaps["scholars"] = client.get("/scholars").json()
        snaps["coauthors_s01"] = client.get("/scholars/s01/coauthors").json()
        snaps["coauthors_s02"] = client.get("/scholars/s02/coauthors").json()

        upper = client.post("/sets", json={"labels": {"s01": "and"}}).json()
        lower = client.post("/sets", json={"labels": {"s02": "and"}}).json()
        snaps["set_upper"] = upper
        snaps["set_lower"] = lower
        snaps["set_group"] = client.post(
            "/sets", json={"labels": {"s01": "and", "s04": "or", "s05": "or"}}
        ).json()
        snaps["set_filtered"] = client.post(
            f"/sets/{upper['handle']}/filter-years", json={"from_year": 2005, "to_year": 2015}
        ).json()
        snaps["error_no_positive"] = client.post(
            "/sets", json={"labels": {"s03": "not"}}
        ).json()

        year_request = {"chain": ["P.Year"], "mode": "papers", "measure": "papers"}
        snaps["hierarchy_upper_year"] = client.post(
            f"/sets/{upper['handle']}/hierarchy", json=year_request
        ).json()
        snaps["hierarchy_upper_year_rank"] = client.post(
            f"/sets/{upper['handle']}/hierarchy",
            json={"chain": ["P.Year", "P.CcfRank"], "mode": "papers", "measure": "papers"},
        ).json()
        snaps["compare_aligned_year"] = client.post(
            "/compare",
            json={
                "upper": upper["handle"],
                "lower": lower["handle"],
                "lock": True,
                "align": True,
                "request": year_request,
            },
        ).json()
        snaps["compare_side_by_side"] = client.post(
            "/compare",
            json={
                "upper": upper["handle"],
                "lower": lower["handle"],
                "lock": True,
                "align": False,
                "request": year_request,
            },
        ).json()
        snaps["sets_after_compare"] = client.get("/sets").json()

        cases = []
        for labels in LABEL_CASES:
            body = client.post("/sets", json={"labels": labels}).json()
            cases.append({"labels": labels, "label": body["label"]})
        snaps["label_cases"] = cases

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(snaps, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({OUT.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
