"""
JSON payload shapes for every result the CLI prints.

render.py produces these from the computational types and parses them back.
"""
from __future__ import annotations

from typing import Optional, TypedDict


class GroupOut(TypedDict):
    """One homology or Ext group: free rank (dimension over F_p) and invariant factors."""

    free_rank: int
    torsion: list[int]


class ExtOut(TypedDict, total=False):
    ring: str
    source: str
    target: str
    rewrite: list[str]
    groups: dict[str, GroupOut]


class StableCohOut(TypedDict):
    mu: str
    p: int
    dims: dict[str, int]


class SeriesOut(TypedDict):
    k: int
    p: int
    tmax: int
    umax: int
    coeffs: list[list[int]]


class ResolutionOut(TypedDict):
    mu: str
    flavor: str
    terms: dict[str, list[str]]
    count: int
    length: int


class SuiteOut(TypedDict, total=False):
    suite: str
    name: str
    status: str
    cases: int
    failures: list[str]
    duration_ms: int
    error: Optional[str]


class RunOut(TypedDict):
    ok: bool
    total_cases: int
    total_failures: int
    summary: str
    suites: list[SuiteOut]


class ComplexOut(TypedDict):
    """Debug dump of a chain complex; diffs[n] are the rows of term(n) -> term(n-1)."""

    ring: str
    degrees: list[int]
    terms: dict[str, int]
    diffs: dict[str, list[list[int]]]
