"""Exception taxonomy for the engine.

Every error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can map failures without string matching.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine failures."""

    code = "ENGINE_ERROR"


class FileNotReadable(EngineError):
    """An input path is missing, unreadable, or not decodable as UTF-8."""

    code = "FILE_NOT_READABLE"

    def __init__(self, path: str, reason: str = "") -> None:
        self.path = str(path)
        msg = f"cannot read {path}"
        if reason:
            msg = f"{msg}: {reason}"
        super().__init__(msg)


class SchemaViolation(EngineError):
    """A file is structurally broken (not just a bad row)."""

    code = "SCHEMA_VIOLATION"

    def __init__(self, message: str, line: int | None = None, field: str | None = None) -> None:
        self.line = line
        self.field = field
        parts = [message]
        if line is not None:
            parts.append(f"line {line}")
        if field is not None:
            parts.append(f"field {field!r}")
        super().__init__(" / ".join(parts))


class DuplicatePaperId(EngineError):
    code = "DUPLICATE_PAPER_ID"

    def __init__(self, paper_id: str, line: int | None = None) -> None:
        self.paper_id = paper_id
        self.line = line
        suffix = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate paper id {paper_id!r}{suffix}")


class UnknownPaperId(EngineError):
    code = "UNKNOWN_PAPER_ID"

    def __init__(self, paper_id: str) -> None:
        self.paper_id = paper_id
        super().__init__(f"unknown paper id {paper_id!r}")


class UnknownScholarId(EngineError):
    code = "UNKNOWN_SCHOLAR_ID"

    def __init__(self, scholar_id: str) -> None:
        self.scholar_id = scholar_id
        super().__init__(f"unknown scholar id {scholar_id!r}")


class UnknownVenueId(EngineError):
    code = "UNKNOWN_VENUE_ID"

    def __init__(self, venue_id: str) -> None:
        self.venue_id = venue_id
        super().__init__(f"unknown venue id {venue_id!r}")


class UnknownSetHandle(EngineError):
    code = "UNKNOWN_SET_HANDLE"

    def __init__(self, handle: str) -> None:
        self.handle = handle
        super().__init__(f"unknown set handle {handle!r}")


class NoPositiveSelector(EngineError):
    """A combination needs at least one And or Or scholar."""

    code = "NO_POSITIVE_SELECTOR"

    def __init__(self) -> None:
        super().__init__("combination has no And or Or scholar")


class InvalidRange(EngineError):
    code = "INVALID_RANGE"

    def __init__(self, message: str) -> None:
        super().__init__(message)


class InvalidAttributeForMode(EngineError):
    code = "INVALID_ATTRIBUTE_FOR_MODE"

    def __init__(self, attribute: str, mode: str) -> None:
        self.attribute = attribute
        super().__init__(f"attribute {attribute} is not valid in {mode} mode")


class InvalidThresholds(EngineError):
    code = "INVALID_THRESHOLDS"

    def __init__(self, message: str) -> None:
        super().__init__(message)


class ChainTooLong(EngineError):
    code = "CHAIN_TOO_LONG"

    def __init__(self, length: int, limit: int = 4) -> None:
        self.length = length
        super().__init__(f"attribute chain must have 1..{limit} levels, got {length}")


class RepeatedAttribute(EngineError):
    code = "REPEATED_ATTRIBUTE"

    def __init__(self, attribute: str) -> None:
        self.attribute = attribute
        super().__init__(f"attribute {attribute} appears more than once in the chain")


class InvalidGroupSpec(EngineError):
    code = "INVALID_GROUP_SPEC"

    def __init__(self, message: str) -> None:
        super().__init__(message)


class ChainMismatch(EngineError):
    code = "CHAIN_MISMATCH"

    def __init__(self, upper: tuple, lower: tuple) -> None:
        super().__init__(f"cannot align chains {list(upper)} and {list(lower)}")


class OffsetOnUnorderedAttribute(EngineError):
    code = "OFFSET_ON_UNORDERED_ATTRIBUTE"

    def __init__(self, attribute: str) -> None:
        self.attribute = attribute
        super().__init__(f"year offset requires a year attribute at the top level, got {attribute}")


class NegativeValue(EngineError):
    code = "NEGATIVE_VALUE"

    def __init__(self, value: float) -> None:
        self.value = value
        super().__init__(f"scale input must be non-negative, got {value}")


class ParseError(EngineError):
    code = "PARSE_ERROR"

    def __init__(self, message: str) -> None:
        super().__init__(message)


class PortInUse(EngineError):
    code = "PORT_IN_USE"

    def __init__(self, port: int) -> None:
        self.port = port
        super().__init__(f"port {port} is already in use")
