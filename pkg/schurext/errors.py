"""
Exception hierarchy. Every error raised on purpose by schurext derives from
SchurExtError; the CLI maps the subclasses to exit codes.
"""
from __future__ import annotations


class SchurExtError(Exception):
    """Base class for all schurext errors."""

    exit_code = 1


class ParseError(SchurExtError):
    """Partition or functor text could not be parsed."""

    exit_code = 2


class UsageError(SchurExtError):
    """Invalid combination of options (e.g. integral stable cohomology)."""

    exit_code = 2


class NoHookRouteError(SchurExtError):
    """Neither duality rewrite of an Ext query has a hook source."""

    exit_code = 3


class GuardExceededError(SchurExtError):
    """A degree guard was exceeded."""

    exit_code = 4

    def __init__(self, what: str, degree: int, guard: int) -> None:
        super().__init__(f"{what}: degree {degree} exceeds guard {guard} (use --unsafe-degree)")
        self.degree = degree
        self.guard = guard


class MalformedComplexError(SchurExtError):
    """d∘d != 0, or term ranks disagree with matrix shapes."""


class ShapeMismatchError(SchurExtError):
    """Matrix, chain map or partition shapes do not fit together."""


class SolveError(SchurExtError):
    """An element expected in a lattice could not be expressed in its basis."""


class PreconditionError(SchurExtError):
    """An operation was called outside its documented range."""


class InvariantError(SchurExtError):
    """A computed result violates a vanishing or range law it must satisfy."""
