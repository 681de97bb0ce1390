"""
Hook Weyl modules W_{(A,1^B)} as the cokernel of the Koszul map

    Υ: (D^{A+1} ⊗ Λ^{B−1})(k^n) → (D^A ⊗ Λ^B)(k^n),   Υ(x) = Σ_i η_i(x) ∧ e_i.

A monomial e^α ⊗ e_β is drawn as the hook tableau whose first row carries
the content α and whose first column continues downwards with β. It is
standard when min supp(α) < β_1; the standard monomials of a weight form
a basis of the cokernel there.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from schurext.combinat import Weight
from schurext.errors import PreconditionError, ShapeMismatchError
from schurext.exactlin import LatticeBasis, hermite_normal_form
from schurext.polyfun.base import (
    Combination,
    add_term,
    gen_index,
    insert_zero,
    merge_weight,
    normalize_wedge,
    spec_index,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TableauMonomial:
    """e^α ⊗ e_β in (D^A ⊗ Λ^B)(k^n), with n = len(α) and β strictly increasing."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.alpha):
            raise PreconditionError(f"negative exponent in {self.alpha}")
        if any(a >= b for a, b in zip(self.beta, self.beta[1:])):
            raise PreconditionError(f"β={self.beta} is not strictly increasing")
        if self.beta and not (1 <= self.beta[0] and self.beta[-1] <= len(self.alpha)):
            raise PreconditionError(f"β={self.beta} outside [1,{len(self.alpha)}]")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def A(self) -> int:
        return sum(self.alpha)

    @property
    def B(self) -> int:
        return len(self.beta)

    @property
    def weight(self) -> Weight:
        w = list(self.alpha)
        for j in self.beta:
            w[j - 1] += 1
        return tuple(w)

    @property
    def min_support(self) -> int | None:
        for j, x in enumerate(self.alpha, start=1):
            if x:
                return j
        return None

    def is_standard(self) -> bool:
        if not self.beta:
            return True
        m = self.min_support
        return m is not None and m < self.beta[0]

    def reading_word(self) -> tuple[int, ...]:
        row = tuple(j for j, x in enumerate(self.alpha, start=1) for _ in range(x))
        return row + self.beta

    def __str__(self) -> str:
        div = "".join(f"e{j}^({x})" for j, x in enumerate(self.alpha, start=1) if x) or "1"
        if not self.beta:
            return div
        return div + "⊗" + "∧".join(f"e{j}" for j in self.beta)


def monomial(alpha: Iterable[int], beta: Iterable[int] = ()) -> TableauMonomial:
    return TableauMonomial(tuple(alpha), tuple(beta))


def wedge_onto(m: TableauMonomial, alpha: tuple[int, ...], extra: int) -> tuple[int, TableauMonomial | None]:
    """(sign, e^alpha ⊗ e_β ∧ e_extra) with β normalized; sign 0 when extra ∈ β."""
    sign, beta = normalize_wedge(m.beta + (extra,))
    if not sign:
        return 0, None
    return sign, TableauMonomial(alpha, beta)


# --- functoriality on the ambient D^A ⊗ Λ^B ---


def specialize_monomial(m: TableauMonomial, i: int) -> tuple[int, TableauMonomial | None]:
    """ψ_i: k^{n} → k^{n−1} applied to m; binomial on D, sign-free relabeling on Λ."""
    if not 1 <= i < m.n:
        raise PreconditionError(f"ψ_{i} undefined on k^{m.n}")
    if i in m.beta and i + 1 in m.beta:
        return 0, None
    a, b = m.alpha[i - 1], m.alpha[i]
    beta = tuple(spec_index(j, i) for j in m.beta)
    return comb(a + b, a), TableauMonomial(merge_weight(m.alpha, i), beta)


def generize_monomial(m: TableauMonomial, i: int) -> TableauMonomial:
    """ψ^i: k^{n} → k^{n+1} applied to m."""
    if not 0 <= i <= m.n:
        raise PreconditionError(f"ψ^{i} undefined on k^{m.n}")
    return TableauMonomial(insert_zero(m.alpha, i), tuple(gen_index(j, i) for j in m.beta))


def specialize_combination(x: Mapping[TableauMonomial, int], i: int) -> dict[TableauMonomial, int]:
    out: dict[TableauMonomial, int] = {}
    for m, c in x.items():
        k, image = specialize_monomial(m, i)
        if k:
            add_term(out, image, k * c)
    return out


def generize_combination(x: Mapping[TableauMonomial, int], i: int) -> dict[TableauMonomial, int]:
    return {generize_monomial(m, i): c for m, c in x.items() if c}


def upsilon_monomial(m: TableauMonomial) -> dict[TableauMonomial, int]:
    """Υ(m) = Σ_i η_i(m) ∧ e_i."""
    out: dict[TableauMonomial, int] = {}
    for i, x in enumerate(m.alpha, start=1):
        if not x:
            continue
        alpha = m.alpha[: i - 1] + (x - 1,) + m.alpha[i:]
        sign, image = wedge_onto(m, alpha, i)
        if sign:
            add_term(out, image, sign)
    return out


# --- standard basis and straightening ---


def _hook_monomials(A: int, B: int, w: Weight) -> Iterable[TableauMonomial]:
    for beta in combinations([j for j, x in enumerate(w, start=1) if x], B):
        alpha = list(w)
        for j in beta:
            alpha[j - 1] -= 1
        if sum(alpha) == A:
            yield TableauMonomial(tuple(alpha), beta)


@lru_cache(maxsize=4096)
def standard_monomials(A: int, B: int, w: Weight) -> tuple[TableauMonomial, ...]:
    """Standard basis of W_{(A,1^B)} at weight w, ordered by reading word."""
    found = [m for m in _hook_monomials(A, B, tuple(w)) if m.is_standard()]
    return tuple(sorted(found, key=TableauMonomial.reading_word))


def _straighten(m: TableauMonomial) -> dict[TableauMonomial, int]:
    """One straightening step; every monomial on the right is standard."""
    j = m.beta[0]
    rest = m.beta[1:]
    base_sign = -1 if m.B % 2 else 1
    out: dict[TableauMonomial, int] = {}
    for i, x in enumerate(m.alpha, start=1):
        if i == j or not x or i in rest:
            continue
        alpha = list(m.alpha)
        alpha[j - 1] += 1
        alpha[i - 1] -= 1
        sign, beta = normalize_wedge(rest + (i,))
        add_term(out, TableauMonomial(tuple(alpha), beta), base_sign * sign)
    return out


def _check_homogeneous(x: Mapping[TableauMonomial, int]) -> tuple[int, int, Weight] | None:
    shapes = {(m.A, m.B, m.weight) for m, c in x.items() if c}
    if len(shapes) > 1:
        raise ShapeMismatchError(f"terms of mixed weight: {sorted(shapes)}")
    return next(iter(shapes), None)


def hook_reduce(x: Mapping[TableauMonomial, int], method: str = "rule") -> dict[TableauMonomial, int]:
    """
    Residue of x modulo im(Υ) in the standard basis of W_{(A,1^B)}.

    method "rule" applies the explicit hook straightening relation,
    "lattice" solves against a basis of the cokernel presentation.
    """
    key = _check_homogeneous(x)
    if key is None:
        return {}
    if method == "lattice":
        return _reduce_by_lattice(x, *key)
    out: dict[TableauMonomial, int] = {}
    for m, c in x.items():
        if not c:
            continue
        if m.is_standard():
            add_term(out, m, c)
        else:
            for s, k in _straighten(m).items():
                add_term(out, s, k * c)
    return out


class _Presentation:
    """All monomials of a weight, with the lattice spanned by standard ones and im(Υ)."""

    def __init__(self, A: int, B: int, w: Weight) -> None:
        self.monomials = sorted(_hook_monomials(A, B, w), key=TableauMonomial.reading_word)
        self.index = {m: k for k, m in enumerate(self.monomials)}
        self.standard = standard_monomials(A, B, w)
        relations = []
        if B >= 1:
            for source in _hook_monomials(A + 1, B - 1, w):
                image = upsilon_monomial(source)
                if image:
                    relations.append({self.index[m]: c for m, c in image.items()})
        h, _ = hermite_normal_form(relations)
        self.relations = [row for row in h if row]
        units = [{self.index[m]: 1} for m in self.standard]
        self.lattice = LatticeBasis(units + self.relations)


@lru_cache(maxsize=1024)
def _presentation(A: int, B: int, w: Weight) -> _Presentation:
    return _Presentation(A, B, w)


def _reduce_by_lattice(x: Mapping[TableauMonomial, int], A: int, B: int, w: Weight) -> dict[TableauMonomial, int]:
    pres = _presentation(A, B, w)
    coords = pres.lattice.coordinates({pres.index[m]: c for m, c in x.items() if c})
    return {m: c for m, c in zip(pres.standard, coords) if c}


class HookWeylModel:
    """Weyl atoms of hook shape through the cokernel of Υ."""

    name = "weyl-hook"

    def basis(self, atom, w: Weight) -> list[TableauMonomial]:
        A, B = atom.shape.hook_params()
        if sum(w) != atom.degree:
            return []
        return list(standard_monomials(A, B, tuple(w)))

    def specialize(self, atom, w: Weight, label: TableauMonomial, i: int) -> Combination:
        k, image = specialize_monomial(label, i)
        if not k:
            return {}
        return hook_reduce({image: k})

    def generize(self, atom, w: Weight, label: TableauMonomial, i: int) -> Combination:
        return {generize_monomial(label, i): 1}
