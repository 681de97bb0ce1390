"""
Weight spaces of functor expressions and the matrices of ψ_i and ψ^i.

The basis of a tensor product at weight w runs over the splittings of w
among the factors (lexicographically decreasing), then over the product of
the factors' own bases. Matrices have rows indexed by the target basis and
columns by the source basis; they are built over Z and reduced mod p.
"""
from __future__ import annotations

import logging
from collections.abc import Hashable
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from schurext.combinat import Weight
from schurext.config import get_settings
from schurext.errors import PreconditionError, ShapeMismatchError
from schurext.exactlin import ZZ, IntegerMatrix, Ring
from schurext.polyfun.base import insert_zero, merge_weight
from schurext.polyfun.expr import FunctorExpr
from schurext.polyfun.registry import model_for

logger = logging.getLogger(__name__)

Label = tuple[Hashable, ...]


@dataclass(frozen=True)
class WeightSpace:
    """Ordered basis of F_w; labels are tuples with one entry per tensor factor."""

    functor: FunctorExpr
    weight: Weight
    ring: Ring
    basis: tuple[Label, ...]
    splits: tuple[tuple[Weight, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index(self, label: Label) -> int:
        return self.basis.index(label)


def _splittings(degrees: tuple[int, ...], w: Weight) -> list[tuple[Weight, ...]]:
    if not degrees:
        return [()] if not any(w) else []
    first, rest = degrees[0], degrees[1:]
    out = []
    for part in _bounded_compositions(first, w):
        remainder = tuple(a - b for a, b in zip(w, part))
        for tail in _splittings(rest, remainder):
            out.append((part,) + tail)
    return out


def _bounded_compositions(d: int, bound: Weight) -> list[Weight]:
    """Vectors v ≤ bound entrywise with |v| = d, lexicographically decreasing."""
    out: list[Weight] = []

    def go(pos: int, left: int, acc: tuple[int, ...]) -> None:
        if pos == len(bound):
            if left == 0:
                out.append(acc)
            return
        for x in range(min(bound[pos], left), -1, -1):
            go(pos + 1, left - x, acc + (x,))

    go(0, d, ())
    return out


def _validate(f: FunctorExpr, w: Weight) -> None:
    if f.has_schur:
        raise PreconditionError(f"{f} contains a Schur atom; apply kuhn_dual first")
    if sum(w) != f.degree:
        raise ShapeMismatchError(f"weight {w} has size {sum(w)}, functor {f} has degree {f.degree}")


@lru_cache(maxsize=8192)
def _space(f: FunctorExpr, w: Weight, hook_model: str) -> tuple[tuple[Label, ...], tuple[tuple[Weight, ...], ...]]:
    labels: list[Label] = []
    splits: list[tuple[Weight, ...]] = []
    for split in _splittings(tuple(a.degree for a in f.atoms), w):
        per_atom = [
            model_for(atom, hook_model).basis(atom, part) for atom, part in zip(f.atoms, split)
        ]
        for combo in product(*per_atom):
            labels.append(tuple(combo))
            splits.append(split)
    return tuple(labels), tuple(splits)


def weight_space(f: FunctorExpr, w: Weight, ring: Ring = ZZ) -> WeightSpace:
    """Explicit ordered basis of the weight space F_w."""
    w = tuple(w)
    _validate(f, w)
    labels, splits = _space(f, w, get_settings().hook_model)
    return WeightSpace(f, w, ring, labels, splits)


def _tensor_image(f: FunctorExpr, split: tuple[Weight, ...], combo: Label, act) -> dict[Label, int]:
    images = [act(atom, part, label) for atom, part, label in zip(f.atoms, split, combo)]
    out: dict[Label, int] = {}
    for terms in product(*(list(img.items()) for img in images)):
        coeff = 1
        for _, c in terms:
            coeff *= c
        key = tuple(lab for lab, _ in terms)
        out[key] = out.get(key, 0) + coeff
    return out


@lru_cache(maxsize=16384)
def _matrix(f: FunctorExpr, w: Weight, i: int, kind: str, hook_model: str) -> IntegerMatrix:
    src_labels, src_splits = _space(f, w, hook_model)
    tgt_w = merge_weight(w, i) if kind == "spec" else insert_zero(w, i)
    tgt_labels, _ = _space(f, tgt_w, hook_model)
    index = {lab: r for r, lab in enumerate(tgt_labels)}
    entries: dict[tuple[int, int], int] = {}

    def act(atom, part, label):
        model = model_for(atom, hook_model)
        if kind == "spec":
            return model.specialize(atom, part, label, i)
        return model.generize(atom, part, label, i)

    for col, (split, combo) in enumerate(zip(src_splits, src_labels)):
        for key, c in _tensor_image(f, split, combo, act).items():
            if c:
                entries[(index[key], col)] = entries.get((index[key], col), 0) + c
    return IntegerMatrix(len(tgt_labels), len(src_labels), entries)


def specialization_matrix(f: FunctorExpr, w: Weight, i: int, ring: Ring = ZZ) -> IntegerMatrix:
    """Matrix of F(ψ_i): F_w → F_{ψ_i(w)} for w of length n+1 and 1 ≤ i ≤ n."""
    w = tuple(w)
    _validate(f, w)
    if not 1 <= i < len(w):
        raise PreconditionError(f"ψ_{i} needs 1 ≤ i ≤ {len(w) - 1}")
    return _matrix(f, w, i, "spec", get_settings().hook_model).reduce(ring)


def generization_matrix(f: FunctorExpr, w: Weight, i: int, ring: Ring = ZZ) -> IntegerMatrix:
    """Matrix of F(ψ^i): F_w → F_{ψ^i(w)} for w of length n and 0 ≤ i ≤ n."""
    w = tuple(w)
    _validate(f, w)
    if not 0 <= i <= len(w):
        raise PreconditionError(f"ψ^{i} needs 0 ≤ i ≤ {len(w)}")
    return _matrix(f, w, i, "gen", get_settings().hook_model).reduce(ring)
