"""
Suite interface for the verification engine.

Every suite implements run(max_degree, primes) and returns a Tally of the
cases it checked and the failures it found. Failures are strings, never
exceptions; an exception escaping run() is reported by the engine as an error.
"""
from __future__ import annotations

import contextlib
import logging
from collections.abc import Callable, Iterator
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Protocol

from schurext.combinat import partitions_of
from schurext.polyfun import Divided, Exterior, FunctorExpr, Symmetric, Weyl, tensor
from schurext.speccomplex import CheckReport

logger = logging.getLogger(__name__)

# (case number, passed, message) for every case a Tally records
ProgressFn = Callable[[int, bool, str], None]
_progress: ContextVar[ProgressFn | None] = ContextVar("suite_progress", default=None)


@contextlib.contextmanager
def reporting_progress(fn: ProgressFn) -> Iterator[None]:
    """Call fn for every case recorded by any Tally inside the block."""
    token = _progress.set(fn)
    try:
        yield
    finally:
        _progress.reset(token)


def _notify(cases: int, ok: bool, message: str) -> None:
    fn = _progress.get()
    if fn is not None:
        fn(cases, ok, message)


@dataclass
class Tally:
    """Cases checked and failure messages collected by one suite run."""

    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> bool:
        self.cases += 1
        if not ok:
            logger.warning("suite failure=%s", message)
            self.failures.append(message)
        _notify(self.cases, ok, message)
        return ok

    def absorb(self, report: CheckReport) -> None:
        """Fold a structural CheckReport in; a report that checked nothing still counts once."""
        self.cases += max(report.checked, 1)
        self.failures.extend(f"{report.name}: {msg}" for msg in report.failures)
        _notify(self.cases, not report.failures, report.name)

    @property
    def ok(self) -> bool:
        return not self.failures


class Suite(Protocol):
    """Protocol for a verification suite."""

    name: str

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        """Check every case up to max_degree over each prime; never raises on a failed case."""
        ...


def sample_functors(d: int) -> list[FunctorExpr]:
    """Functors of degree d exercised by the structural suites."""
    out = [Divided(d), Exterior(d), Symmetric(d)]
    out += [Weyl(lam) for lam in partitions_of(d) if lam.length > 1 and lam[0] > 1]
    if d >= 2:
        out.append(tensor(Divided(1), Exterior(d - 1)))
    return out
