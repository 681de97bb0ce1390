"""
Atom model interface and the index bookkeeping shared by every model.

An atom model realizes one tensor factor (D^a, Λ^a, Sym^a or a Weyl
functor) weight by weight: an ordered basis of labels, and the action of
the specialization maps ψ_i and generization maps ψ^i on those labels.
"""
from __future__ import annotations

from collections.abc import Hashable, Sequence
from typing import Protocol

from schurext.combinat import Weight

Combination = dict[Hashable, int]


def merge_weight(w: Sequence[int], i: int) -> Weight:
    """ψ_i on weights: entries i and i+1 (1-based) are added."""
    return tuple(w[: i - 1]) + (w[i - 1] + w[i],) + tuple(w[i + 1:])


def insert_zero(w: Sequence[int], i: int) -> Weight:
    """ψ^i on weights: a zero is inserted after position i."""
    return tuple(w[:i]) + (0,) + tuple(w[i:])


def spec_index(j: int, i: int) -> int:
    """Image of the basis index j under ψ_i: e_j for j ≤ i, e_{j−1} for j > i."""
    return j if j <= i else j - 1


def gen_index(j: int, i: int) -> int:
    """Image of the basis index j under ψ^i."""
    return j if j <= i else j + 1


def normalize_wedge(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """
    Sort a wedge e_{j_1}∧...∧e_{j_k} into increasing order.

    Returns (sign, sorted indices), or (0, ()) when an index repeats.
    """
    if len(set(indices)) != len(indices):
        return 0, ()
    seq = list(indices)
    sign = 1
    for a in range(len(seq)):
        for b in range(len(seq) - 1 - a):
            if seq[b] > seq[b + 1]:
                seq[b], seq[b + 1] = seq[b + 1], seq[b]
                sign = -sign
    return sign, tuple(seq)


def add_term(acc: dict, key: Hashable, coeff: int) -> None:
    """acc[key] += coeff, dropping zeros."""
    v = acc.get(key, 0) + coeff
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class AtomModel(Protocol):
    """Weight-space realization of one kind of tensor factor."""

    name: str

    def basis(self, atom, w: Weight) -> list[Hashable]:
        """Ordered basis labels of the atom's weight space at w."""
        ...

    def specialize(self, atom, w: Weight, label: Hashable, i: int) -> Combination:
        """ψ_i(label), expressed in the basis at merge_weight(w, i)."""
        ...

    def generize(self, atom, w: Weight, label: Hashable, i: int) -> Combination:
        """ψ^i(label), expressed in the basis at insert_zero(w, i)."""
        ...
