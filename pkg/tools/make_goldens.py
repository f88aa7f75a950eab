#!/usr/bin/env python3
"""Compute golden expectations for the fixtures, independently of the package.

This script deliberately shares no code with src/: it re-reads the raw
fixture files with its own parsing and re-derives every expected number from
the documented rules (drop counting, venue resolution, set combination,
label grammar, h-index). The engine's tests then compare against these
frozen values.

Outputs:
  fixtures/small/golden_report.json     load report for the small fixture
  fixtures/golden_set_metrics.json      metrics for the ten stored expressions

Run from the repository root:  python tools/make_goldens.py
"""

from __future__ import annotations

import csv
import json
import re
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SMALL = ROOT / "fixtures" / "small"
CORPUS = ROOT / "fixtures" / "corpus"


# ---------------------------------------------------------------- resolution

def norm(raw: str) -> str:
    tokens = re.sub(r"[^a-z0-9\s]", " ", raw.lower()).split()
    while tokens and tokens[0] in ("a", "an", "the"):
        tokens.pop(0)
    return " ".join(tokens)


def edit_distance(a: str, b: str) -> int:
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def build_alias_index(venues_path: Path) -> dict[str, str]:
    index: dict[str, str] = {}
    for v in json.loads(venues_path.read_text("utf-8")):
        for name in [v["canonical"]] + v["aliases"]:
            index[norm(name)] = v["id"]
    return index


def resolve(alias_index: dict[str, str], raw: str) -> str | None:
    n = norm(raw)
    if not n:
        return None
    if n in alias_index:
        return alias_index[n]
    best_d, winners = None, set()
    for alias, vid in alias_index.items():
        limit = max(2, len(alias) // 10)
        if abs(len(alias) - len(n)) > limit:
            continue
        d = edit_distance(n, alias)
        if d > limit:
            continue
        if best_d is None or d < best_d:
            best_d, winners = d, {vid}
        elif d == best_d:
            winners.add(vid)
    return winners.pop() if len(winners) == 1 else None


# ------------------------------------------------------------------- parsing

def valid_paper(row: object) -> bool:
    if not isinstance(row, dict):
        return False
    if not isinstance(row.get("id"), str) or not row["id"]:
        return False
    if not isinstance(row.get("title"), str):
        return False
    year = row.get("year")
    if year is not None and (isinstance(year, bool) or not isinstance(year, int) or not 1900 <= year <= 2100):
        return False
    venue = row.get("venue")
    if venue is not None and not isinstance(venue, str):
        return False
    authors = row.get("authors")
    if not isinstance(authors, list) or any(not isinstance(a, str) or not a for a in authors):
        return False
    return True


def load_fixture(base: Path) -> dict:
    alias_index = build_alias_index(base / "venues.json")
    report = {
        "papers_accepted": 0,
        "papers_dropped": 0,
        "links_accepted": 0,
        "links_dropped_malformed": 0,
        "links_dropped_self": 0,
        "links_dropped_dangling": 0,
        "links_dropped_duplicate": 0,
        "scholars_accepted": 0,
        "scholars_dropped": 0,
        "profile_papers_unresolved": 0,
        "venues_unresolved": 0,
    }

    papers: dict[str, dict] = {}
    for line in (base / "papers.jsonl").read_text("utf-8").splitlines():
        if not line.strip():
            continue
        try:
            row = json.loads(line)
        except ValueError:
            report["papers_dropped"] += 1
            continue
        if not valid_paper(row):
            report["papers_dropped"] += 1
            continue
        assert row["id"] not in papers, "duplicate id in fixture"
        venue = row.get("venue")
        if isinstance(venue, str) and venue.strip() and resolve(alias_index, venue) is None:
            report["venues_unresolved"] += 1
        papers[row["id"]] = row
        report["papers_accepted"] += 1

    cites_of: dict[str, int] = {}
    seen: set[tuple[str, str]] = set()
    with open(base / "citations.csv", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        assert [h.strip() for h in header] == ["citing", "cited"]
        for row in reader:
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2 or not row[0].strip() or not row[1].strip():
                report["links_dropped_malformed"] += 1
                continue
            citing, cited = row[0].strip(), row[1].strip()
            if citing == cited:
                report["links_dropped_self"] += 1
            elif citing not in papers or cited not in papers:
                report["links_dropped_dangling"] += 1
            elif (citing, cited) in seen:
                report["links_dropped_duplicate"] += 1
            else:
                seen.add((citing, cited))
                cites_of[cited] = cites_of.get(cited, 0) + 1
                report["links_accepted"] += 1

    scholars: dict[str, dict] = {}
    order: list[str] = []
    for line in (base / "profiles.jsonl").read_text("utf-8").splitlines():
        if not line.strip():
            continue
        try:
            row = json.loads(line)
        except ValueError:
            report["scholars_dropped"] += 1
            continue
        sid, name, pids = row.get("scholar_id"), row.get("name"), row.get("paper_ids")
        ok = (
            isinstance(sid, str) and sid
            and isinstance(name, str) and name
            and isinstance(pids, list)
            and all(isinstance(p, str) and p for p in pids)
        )
        if not ok or sid in scholars:
            report["scholars_dropped"] += 1
            continue
        listed = list(dict.fromkeys(pids))
        present = {p for p in listed if p in papers}
        report["profile_papers_unresolved"] += len(listed) - len(present)
        scholars[sid] = {"name": name, "papers": present}
        order.append(sid)
        report["scholars_accepted"] += 1

    return {"report": report, "papers": papers, "cites_of": cites_of, "scholars": scholars, "order": order}


# --------------------------------------------------------------- set algebra

def combine_sets(data: dict, labels: dict[str, str]) -> set[str]:
    universe = set(data["papers"])
    ands = [s for s in data["order"] if labels.get(s) == "and"]
    ors = [s for s in data["order"] if labels.get(s) == "or"]
    nots = [s for s in data["order"] if labels.get(s) == "not"]
    assert ands or ors
    result = set(universe)
    if ors:
        pool: set[str] = set()
        for s in ors:
            pool |= data["scholars"][s]["papers"]
        result &= pool
    for s in ands:
        result &= data["scholars"][s]["papers"]
    for s in nots:
        result -= data["scholars"][s]["papers"]
    return result


def label_of(data: dict, labels: dict[str, str]) -> str:
    names = {s: data["scholars"][s]["name"] for s in data["order"]}
    ands = [names[s] for s in data["order"] if labels.get(s) == "and"]
    ors = [names[s] for s in data["order"] if labels.get(s) == "or"]
    nots = [names[s] for s in data["order"] if labels.get(s) == "not"]
    parts = list(ands)
    if ors:
        group = " | ".join(ors)
        parts.append(f"({group})" if ands else group)
    text = " + ".join(parts)
    for n in nots:
        text += f" - {n}"
    return text


def definitional_h(counts: list[int]) -> int:
    for h in range(len(counts), -1, -1):
        if sum(1 for c in counts if c >= h) >= h:
            return h
    return 0


def main() -> None:
    small = load_fixture(SMALL)
    (SMALL / "golden_report.json").write_text(
        json.dumps(small["report"], indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    print("small fixture report:", small["report"])

    data = load_fixture(CORPUS)
    assert all(v == 0 for k, v in data["report"].items() if "dropped" in k), "corpus fixture should be clean"
    expressions = json.loads((ROOT / "fixtures" / "expressions.json").read_text("utf-8"))
    goldens = []
    for expr in expressions:
        members = combine_sets(data, expr["labels"])
        counts = [data["cites_of"].get(p, 0) for p in members]
        goldens.append(
            {
                "name": expr["name"],
                "labels": expr["labels"],
                "expected": {
                    "label": label_of(data, expr["labels"]),
                    "paper_count": len(members),
                    "total_citations": sum(counts),
                    "h_index": definitional_h(counts),
                },
            }
        )
    (ROOT / "fixtures" / "golden_set_metrics.json").write_text(
        json.dumps(goldens, indent=1, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    for g in goldens:
        print(f"{g['name']}: {g['expected']}")


if __name__ == "__main__":
    main()
