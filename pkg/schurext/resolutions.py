"""
Shapes of short resolutions of Weyl functors by tensor products of divided
powers, and of Schur functors by tensor products of exterior powers.

Only the summands are produced, degree by degree; the differentials are not.
The Euler characteristic is certified against the Schur polynomial.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from schurext.combinat import Partition, check_degree, kostka_number, pieri_strips

logger = logging.getLogger(__name__)

FLAVORS = ("divided", "exterior")


@dataclass(frozen=True)
class ResolutionShape:
    """Summands per homological degree; λ names D^λ (divided) or Λ^λ (exterior)."""

    target: Partition
    flavor: str
    terms: Mapping[int, tuple[Partition, ...]] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return max((i for i, summands in self.terms.items() if summands), default=0)

    def count(self) -> int:
        return summand_count(self)

    def bound(self) -> int:
        """d − μ_1 for the divided flavor, d − ℓ(μ) for the exterior one."""
        if self.flavor == "divided":
            return self.target.size - self.target[0]
        return self.target.size - self.target.length

    def to_dict(self) -> dict:
        return {
            "mu": str(self.target),
            "flavor": self.flavor,
            "terms": {str(i): [str(s) for s in self.terms[i]] for i in sorted(self.terms)},
            "count": self.count(),
            "length": self.length,
        }


def _normalize(parts) -> Partition:
    return Partition(tuple(sorted(parts, reverse=True)))


@lru_cache(maxsize=512)
def _weyl_terms(mu: Partition) -> tuple[tuple[int, tuple[Partition, ...]], ...]:
    if mu.length <= 1:
        return ((0, (mu,)),)
    first, rest = mu[0], mu.bar()
    acc: dict[int, list[Partition]] = {}
    for i, summands in _weyl_terms(rest):
        acc.setdefault(i, []).extend(_normalize((first,) + s.parts) for s in summands)
    for gamma in pieri_strips(first, rest):
        if gamma == mu:
            continue
        for i, summands in _weyl_terms(gamma):
            acc.setdefault(i + 1, []).extend(summands)
    return tuple((i, tuple(sorted(acc[i], reverse=True))) for i in sorted(acc))


def weyl_resolution_shape(mu: Partition) -> ResolutionShape:
    """
    Res(μ): μ_1 prepended to every summand of Res(μ̄) in the same degree, plus
    Res(γ) one degree up for every horizontal strip γ ⊇ μ̄ of size μ_1, γ ≠ μ.
    """
    check_degree("weyl_resolution_shape", mu.size)
    shape = ResolutionShape(mu, "divided", dict(_weyl_terms(mu)))
    logger.debug("resolution mu=%s count=%s length=%s", mu, shape.count(), shape.length)
    return shape


def schur_resolution_shape(mu: Partition) -> ResolutionShape:
    """Exterior-power resolution of S_μ: the divided shape of μ' read with Λ."""
    check_degree("schur_resolution_shape", mu.size)
    return ResolutionShape(mu, "exterior", dict(_weyl_terms(mu.conjugate())))


def summand_count(shape: ResolutionShape) -> int:
    return sum(len(s) for s in shape.terms.values())


# --- characters ---


@dataclass(frozen=True)
class SymPoly:
    """Polynomial in a fixed number of variables as an exponent → coefficient map."""

    nvars: int
    coeffs: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {k: c for k, c in self.coeffs.items() if c})

    @classmethod
    def one(cls, nvars: int) -> SymPoly:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def complete(cls, k: int, nvars: int) -> SymPoly:
        """h_k: every monomial of degree k."""
        return cls(nvars, {w: 1 for w in _compositions(k, nvars)})

    @classmethod
    def elementary(cls, k: int, nvars: int) -> SymPoly:
        """e_k: squarefree monomials of degree k."""
        out = {}
        for support in combinations(range(nvars), k):
            out[tuple(1 if v in support else 0 for v in range(nvars))] = 1
        return cls(nvars, out)

    @classmethod
    def schur(cls, mu: Partition, nvars: int) -> SymPoly:
        """s_μ = Σ_w K_{μ,w} x^w."""
        out = {}
        for w in _compositions(mu.size, nvars):
            k = kostka_number(mu, tuple(sorted(w, reverse=True)))
            if k:
                out[w] = k
        return cls(nvars, out)

    def __add__(self, other: SymPoly) -> SymPoly:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymPoly(self.nvars, out)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + other.scale(-1)

    def scale(self, k: int) -> SymPoly:
        return SymPoly(self.nvars, {w: k * c for w, c in self.coeffs.items()})

    def __mul__(self, other: SymPoly) -> SymPoly:
        out: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return SymPoly(self.nvars, out)

    def is_symmetric(self) -> bool:
        """Invariance under swapping the first two variables."""
        if self.nvars < 2:
            return True
        swapped = {(w[1], w[0]) + w[2:]: c for w, c in self.coeffs.items()}
        return swapped == dict(self.coeffs)


def _compositions(k: int, nvars: int) -> list[tuple[int, ...]]:
    if nvars == 0:
        return [()] if k == 0 else []
    out = []
    for first in range(k, -1, -1):
        out.extend((first,) + rest for rest in _compositions(k - first, nvars - 1))
    return out


@lru_cache(maxsize=1024)
def _product(flavor: str, lam: Partition, nvars: int) -> SymPoly:
    result = SymPoly.one(nvars)
    for part in lam:
        factor = SymPoly.complete(part, nvars) if flavor == "divided" else SymPoly.elementary(part, nvars)
        result = result * factor
    return result


def euler_check(shape: ResolutionShape) -> bool:
    """Σ_i (-1)^i Σ_{λ ∈ terms_i} h_λ (resp. e_λ) equals s_μ in |μ| variables."""
    nvars = shape.target.size
    total = SymPoly(nvars)
    for i, summands in shape.terms.items():
        for lam in summands:
            term = _product(shape.flavor, lam, nvars)
            total = total - term if i % 2 else total + term
    expected = SymPoly.schur(shape.target, nvars)
    ok = dict(total.coeffs) == dict(expected.coeffs)
    if not ok:
        logger.warning("euler characteristic mismatch mu=%s flavor=%s", shape.target, shape.flavor)
    return ok
