"""
Integral Weyl modules for arbitrary shapes.

W_λ(k^n) is the image lattice of the box map

    D^{λ_1} ⊗ ... ⊗ D^{λ_r} → Λ^{λ'_1} ⊗ ... ⊗ Λ^{λ'_s}

(comultiply each row's divided power into its boxes, regroup the boxes by
columns, wedge each column). The images of the semistandard tableaux of
content w form the basis of the weight space at w; specialization is
computed on the exterior side and solved back into that basis.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product

from sympy.utilities.iterables import multiset_permutations

from schurext.combinat import Partition, Tableau, Weight, semistandard_tableaux
from schurext.errors import SolveError
from schurext.exactlin import LatticeBasis
from schurext.polyfun.base import (
    Combination,
    add_term,
    gen_index,
    merge_weight,
    normalize_wedge,
    spec_index,
)

logger = logging.getLogger(__name__)

ColumnKey = tuple[tuple[int, ...], ...]


def box_image(shape: Partition, rows: Tableau) -> dict[ColumnKey, int]:
    """Image of a row-filled tableau (rows as multisets) in the column exterior tensor."""
    conj = shape.conjugate().parts
    out: dict[ColumnKey, int] = {}
    for words in product(*(list(multiset_permutations(sorted(row))) for row in rows)):
        sign = 1
        key = []
        for c, height in enumerate(conj):
            s, col = normalize_wedge([words[r][c] for r in range(height)])
            if not s:
                break
            sign *= s
            key.append(col)
        else:
            add_term(out, tuple(key), sign)
    return out


def specialize_key(key: ColumnKey, i: int) -> ColumnKey | None:
    """ψ_i on a column key; None when some column holds both i and i+1."""
    cols = []
    for col in key:
        if i in col and i + 1 in col:
            return None
        cols.append(tuple(spec_index(j, i) for j in col))
    return tuple(cols)


class _WeylSpace:
    """Basis tableaux, their ambient images and the lattice they span."""

    def __init__(self, shape: Partition, w: Weight) -> None:
        self.tableaux = semistandard_tableaux(shape, w)
        self.images = [box_image(shape, t) for t in self.tableaux]
        keys = sorted({k for img in self.images for k in img})
        self.key_index = {k: j for j, k in enumerate(keys)}
        self.lattice = LatticeBasis(
            [{self.key_index[k]: v for k, v in img.items()} for img in self.images]
        )

    def coordinates(self, element: dict[ColumnKey, int]) -> list[int]:
        vec = {}
        for k, v in element.items():
            if k not in self.key_index:
                raise SolveError(f"ambient key {k} not in the Weyl weight space")
            vec[self.key_index[k]] = v
        return self.lattice.coordinates(vec)


@lru_cache(maxsize=2048)
def weyl_space(shape: Partition, w: Weight) -> _WeylSpace:
    logger.debug("weyl space shape=%s weight=%s", shape, w)
    return _WeylSpace(shape, w)


@lru_cache(maxsize=8192)
def _specialize(shape: Partition, w: Weight, label: Tableau, i: int) -> tuple[tuple[Tableau, int], ...]:
    src = weyl_space(shape, w)
    image: dict[ColumnKey, int] = {}
    for key, v in src.images[src.tableaux.index(label)].items():
        new = specialize_key(key, i)
        if new is not None:
            add_term(image, new, v)
    if not image:
        return ()
    tgt = weyl_space(shape, merge_weight(w, i))
    coords = tgt.coordinates(image)
    return tuple((t, c) for t, c in zip(tgt.tableaux, coords) if c)


class WeylBoxModel:
    """Weyl(λ) atoms through the box map."""

    name = "weyl-box"

    def basis(self, atom, w: Weight) -> list[Tableau]:
        if sum(w) != atom.degree:
            return []
        return list(weyl_space(atom.shape, tuple(w)).tableaux)

    def specialize(self, atom, w: Weight, label: Tableau, i: int) -> Combination:
        return dict(_specialize(atom.shape, tuple(w), label, i))

    def generize(self, atom, w: Weight, label: Tableau, i: int) -> Combination:
        return {tuple(tuple(gen_index(x, i) for x in row) for row in label): 1}

    def ambient_images(self, atom, w: Weight) -> list[dict[ColumnKey, int]]:
        return list(weyl_space(atom.shape, tuple(w)).images)
