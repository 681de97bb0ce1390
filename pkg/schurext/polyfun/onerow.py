"""
Divided, exterior and symmetric powers. Every weight space of these atoms
has rank at most one; the label is the weight itself.
"""
from __future__ import annotations

from math import comb

from schurext.combinat import Weight
from schurext.polyfun.base import Combination, insert_zero, merge_weight


class _RankOneModel:
    name = "rank-one"

    def basis(self, atom, w: Weight) -> list[Weight]:
        if sum(w) != atom.degree or not self._allowed(w):
            return []
        return [tuple(w)]

    def _allowed(self, w: Weight) -> bool:
        return True

    def _merge_coeff(self, a: int, b: int) -> int:
        raise NotImplementedError

    def specialize(self, atom, w: Weight, label: Weight, i: int) -> Combination:
        c = self._merge_coeff(label[i - 1], label[i])
        return {merge_weight(label, i): c} if c else {}

    def generize(self, atom, w: Weight, label: Weight, i: int) -> Combination:
        return {insert_zero(label, i): 1}


class DividedModel(_RankOneModel):
    """D^a: e^{(a)}e^{(b)} merges to binom(a+b, a)·e^{(a+b)}."""

    name = "divided"

    def _merge_coeff(self, a: int, b: int) -> int:
        return comb(a + b, a)


class SymmetricModel(_RankOneModel):
    name = "symmetric"

    def _merge_coeff(self, a: int, b: int) -> int:
        return 1


class ExteriorModel(_RankOneModel):
    """Λ^a: weights are 0/1 vectors; merging two occupied slots gives 0."""

    name = "exterior"

    def _allowed(self, w: Weight) -> bool:
        return all(x in (0, 1) for x in w)

    def _merge_coeff(self, a: int, b: int) -> int:
        return 0 if a and b else 1
