"""Venue name resolution and CCF-style classification.

Raw venue strings in bibliographic dumps arrive in many spellings: "IEEE
TVCG", "IEEE Trans. Vis. Comput. Graph.", "Visualization and Computer
Graphics, IEEE Transactions on", and so on. A :class:`VenueTable` maps each
raw spelling to a single canonical venue id via a normalized alias index,
falling back to a bounded edit-distance search for near-misses, and answers
category / rank lookups for resolved venues.

Resolution contract:

* exact match on the normalized form wins immediately;
* otherwise the venue with the smallest qualifying edit distance wins, where
  an alias qualifies when ``distance <= max(2, len(alias) // 10)``;
* a tie between two different venues resolves to nothing (unresolved beats
  wrong).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Iterable, Optional

from .errors import FileNotReadable, SchemaViolation, UnknownVenueId

__all__ = [
    "CCF_CATEGORIES",
    "CcfRank",
    "VenueRecord",
    "VenueTable",
    "normalize_name",
    "levenshtein",
    "load_venues",
    "packaged_venue_table",
]

# The ten CCF catalogue categories.
CCF_CATEGORIES = (
    "computer architecture and systems",
    "computer networks",
    "network and information security",
    "software engineering and programming languages",
    "databases and data mining",
    "theoretical computer science",
    "computer graphics and multimedia",
    "artificial intelligence",
    "human-computer interaction",
    "interdisciplinary and emerging",
)


class CcfRank(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    UNRANKED = "Unranked"


_ARTICLES = frozenset({"a", "an", "the"})
_NON_ALNUM = re.compile(r"[^a-z0-9\s]")


def normalize_name(raw: str) -> str:
    """Normalize a venue string for matching.

    Lowercase, replace punctuation with spaces, collapse whitespace, and drop
    leading articles (repeatedly, so the result is a fixed point of this
    function).
    """
    tokens = _NON_ALNUM.sub(" ", raw.lower()).split()
    while tokens and tokens[0] in _ARTICLES:
        tokens.pop(0)
    return " ".join(tokens)


def levenshtein(a: str, b: str, limit: int | None = None) -> int:
    """Edit distance between two strings.

    With ``limit`` set, gives up early and returns ``limit + 1`` as soon as
    the distance provably exceeds it; callers only ever need exact values up
    to their own threshold.
    """
    if a == b:
        return 0
    if limit is not None and abs(len(a) - len(b)) > limit:
        return limit + 1
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        best = i
        for j, cb in enumerate(b, 1):
            d = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
            cur.append(d)
            if d < best:
                best = d
        if limit is not None and best > limit:
            return limit + 1
        prev = cur
    dist = prev[-1]
    if limit is not None and dist > limit:
        return limit + 1
    return dist


def _edit_limit(alias: str) -> int:
    # An alias qualifies within distance 2, or within 10% of its own length
    # for long names, whichever is larger.
    return max(2, len(alias) // 10)


@dataclass(frozen=True)
class VenueRecord:
    """One venue: canonical name, alias spellings, CCF category and rank."""

    id: str
    canonical: str
    aliases: tuple[str, ...]
    category: Optional[str]
    rank: CcfRank

    @property
    def all_names(self) -> tuple[str, ...]:
        return (self.canonical,) + self.aliases


class VenueTable:
    """Alias index over a set of venues.

    The table is immutable after construction. Normalized alias spellings
    must be disjoint across venues; duplicates within one venue collapse.
    """

    def __init__(self, records: Iterable[VenueRecord]):
        self._records: dict[str, VenueRecord] = {}
        self._exact: dict[str, str] = {}
        for rec in records:
            if rec.id in self._records:
                raise SchemaViolation(f"duplicate venue id {rec.id!r}", field="id")
            self._records[rec.id] = rec
            for name in rec.all_names:
                norm = normalize_name(name)
                if not norm:
                    raise SchemaViolation(
                        f"venue {rec.id!r} has a name that normalizes to nothing: {name!r}",
                        field="aliases",
                    )
                owner = self._exact.get(norm)
                if owner is not None and owner != rec.id:
                    raise SchemaViolation(
                        f"alias {name!r} of venue {rec.id!r} collides with venue {owner!r}",
                        field="aliases",
                    )
                self._exact[norm] = rec.id
        # Fallback candidates, longest first so the tightest length band is
        # scanned coherently; order does not affect the result.
        self._fallback: list[tuple[str, int, str]] = sorted(
            ((norm, _edit_limit(norm), vid) for norm, vid in self._exact.items()),
            key=lambda t: (-len(t[0]), t[0]),
        )

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, venue_id: str) -> bool:
        return venue_id in self._records

    @property
    def records(self) -> tuple[VenueRecord, ...]:
        return tuple(self._records.values())

    def record(self, venue_id: str) -> VenueRecord:
        rec = self._records.get(venue_id)
        if rec is None:
            raise UnknownVenueId(venue_id)
        return rec

    def display_name(self, venue_id: str) -> str:
        return self.record(venue_id).canonical

    def resolve(self, raw: str) -> Optional[str]:
        """Resolve a raw venue string to a venue id, or None if unresolved.

        Exact normalized match first; otherwise the unique venue with the
        smallest qualifying edit distance. Ties across venues, or no
        qualifying alias at all, resolve to None.
        """
        norm = normalize_name(raw)
        if not norm:
            return None
        hit = self._exact.get(norm)
        if hit is not None:
            return hit
        best_d: int | None = None
        winners: set[str] = set()
        n = len(norm)
        for alias, limit, vid in self._fallback:
            if abs(len(alias) - n) > limit:
                continue
            cap = limit if best_d is None else min(limit, best_d)
            d = levenshtein(norm, alias, cap)
            if d > limit or d > cap:
                continue
            if best_d is None or d < best_d:
                best_d = d
                winners = {vid}
            elif d == best_d:
                winners.add(vid)
        if len(winners) == 1:
            return winners.pop()
        return None

    def classify(self, venue_id: str) -> tuple[Optional[str], CcfRank]:
        """Return (category, rank) for a known venue id."""
        rec = self.record(venue_id)
        return rec.category, rec.rank


def _venue_from_obj(obj: object, index: int) -> VenueRecord:
    if not isinstance(obj, dict):
        raise SchemaViolation("venue entry is not an object", line=index)
    vid = obj.get("id")
    canonical = obj.get("canonical")
    aliases = obj.get("aliases", [])
    category = obj.get("category")
    rank = obj.get("rank")
    if not isinstance(vid, str) or not vid:
        raise SchemaViolation("venue id must be a non-empty string", line=index, field="id")
    if not isinstance(canonical, str) or not canonical:
        raise SchemaViolation("canonical name must be a non-empty string", line=index, field="canonical")
    if not isinstance(aliases, list) or any(not isinstance(a, str) or not a for a in aliases):
        raise SchemaViolation("aliases must be a list of non-empty strings", line=index, field="aliases")
    if category is not None and category not in CCF_CATEGORIES:
        raise SchemaViolation(f"unknown category {category!r}", line=index, field="category")
    if rank is None:
        rank_val = CcfRank.UNRANKED
    elif rank in ("A", "B", "C"):
        rank_val = CcfRank(rank)
    else:
        raise SchemaViolation(f"rank must be A, B, C, or null, got {rank!r}", line=index, field="rank")
    return VenueRecord(
        id=vid,
        canonical=canonical,
        aliases=tuple(dict.fromkeys(aliases)),
        category=category,
        rank=rank_val,
    )


def venues_from_json(data: object) -> VenueTable:
    """Build a VenueTable from already-parsed venues JSON (a list of objects)."""
    if not isinstance(data, list):
        raise SchemaViolation("venues file must contain a JSON list")
    return VenueTable(_venue_from_obj(obj, i) for i, obj in enumerate(data))


def load_venues(path: str) -> VenueTable:
    """Load a venues JSON file from disk."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileNotReadable(path, str(exc)) from exc
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise SchemaViolation(f"venues file is not valid JSON: {exc}") from exc
    return venues_from_json(data)


def packaged_venue_table() -> VenueTable:
    """The CCF catalogue shipped with the package (571 venues)."""
    text = resources.files(__package__).joinpath("data/ccf_venues.json").read_text("utf-8")
    return venues_from_json(json.loads(text))
