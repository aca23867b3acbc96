"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class MultiarityError(Exception):
    exit_code = 2


class ShapeError(MultiarityError):
    """Malformed input: mismatched domains, bad arities, unknown names."""

    exit_code = 2


class LawError(MultiarityError):
    """A structural law failed where the operation requires it to hold."""

    exit_code = 1

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class NotACoconeError(LawError):
    pass


class InternalConsistencyError(LawError):
    """A proven closure property failed; signals a bug or a bad table."""


class CapacityError(MultiarityError):
    exit_code = 3


class CoverageError(MultiarityError):
    """A table entry needed to evaluate an expression is absent."""

    exit_code = 3

    def __init__(self, op: str, key, truncated: bool = False):
        self.op = op
        self.key = key
        # truncated: the entry would land beyond the context bound L,
        # so its absence is expected rather than a gap in the table.
        self.truncated = truncated
        kind = "beyond bound" if truncated else "missing"
        super().__init__(f"{op} entry {kind}: {key!r}")
