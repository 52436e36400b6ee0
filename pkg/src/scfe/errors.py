"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ScfeError(Exception):
    """Base class for all library errors."""


class GraphError(ScfeError, ValueError):
    """A graph or completion violates a structural invariant."""


class DrawingError(ScfeError, ValueError):
    """A drawing is not total or not injective on the vertex set."""


class PreconditionError(ScfeError, ValueError):
    """An operation was called on inputs outside its contract."""


class ConstructionError(ScfeError, RuntimeError):
    """A constructed artifact failed its own postcondition.

    This always indicates a defect in the library, never bad input.
    """


class SearchLimitError(ScfeError):
    """The completion search would exceed the configured ceiling on k."""


class ParseError(ScfeError, ValueError):
    """Malformed text input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NoEqualLengthModel(ScfeError):
    """A proper circular-arc graph has no arc model with one common length.

    Open and closed ends do not always suffice; callers fall back to a
    drawing with per-vertex thresholds.
    """
