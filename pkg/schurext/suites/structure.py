"""
Structural properties of specialization complexes: d∘d = 0, the filtration
long exact sequence, the degenerate splitting, exactness of the ambient
complex, the graded shift, Kostka ranks, model agreement and Künneth-type
identities for stable cohomology.
"""
from __future__ import annotations

import logging
from itertools import combinations_with_replacement

from schurext.combinat import Partition, enumerate_weights, kostka_number, partitions_of
from schurext.config import override_settings
from schurext.exactlin import GF, ZZ, homology_table, validate_complex
from schurext.polyfun import Divided, Exterior, FunctorExpr, Schur, Weyl, tensor, weight_space
from schurext.speccomplex import (
    FilteredFamily,
    Variant,
    ambient_exactness_check,
    build_complex,
    degenerate_split_check,
    ext_from_hook,
    graded_shift_check,
    stable_coh_dims_of,
    verify_les,
)
from schurext.suites.base import Tally, sample_functors

logger = logging.getLogger(__name__)

LES_DEGREE = 4
WINDOW_DEGREE = 3
KULKARNI_DEGREE = 5
KUNNETH_FACTOR_DEGREE = 3


def check_complexes(max_degree: int, primes: tuple[int, ...], tally: Tally) -> None:
    rings = [ZZ] + [GF(p) for p in primes]
    for d in range(1, max_degree + 1):
        for f in sample_functors(d):
            for a in range(1, d + 1):
                for variant in (Variant.FULL, Variant.GRADED):
                    c = build_complex(FilteredFamily(f, a, variant))
                    tally.check(validate_complex(c), f"d∘d != 0 in {variant.value} F^{a}({f})")
                if d <= LES_DEGREE:
                    tally.absorb(graded_shift_check(f, a))
                    if a < d:
                        for ring in rings:
                            tally.absorb(verify_les(f, a, ring))
            if d <= WINDOW_DEGREE:
                window = (1, d + 2)
                tally.absorb(degenerate_split_check(f, 1, window))
                tally.absorb(ambient_exactness_check(f, window))


def check_kostka_ranks(max_degree: int, tally: Tally) -> None:
    for hook_model in ("box", "hook"):
        with override_settings(hook_model=hook_model):
            for d in range(1, max_degree + 1):
                for lam in partitions_of(d):
                    for n in range(1, d + 1):
                        for w in enumerate_weights(d, n, False):
                            rank = weight_space(Weyl(lam), w).rank
                            expected = kostka_number(lam, sorted(w, reverse=True))
                            tally.check(rank == expected, f"rank W({lam})_{w} = {rank}, Kostka number {expected}")


def check_hook_models(max_degree: int, tally: Tally) -> None:
    """Box and Υ-cokernel realizations of hook Weyl functors give the same integral homology."""
    for d in range(1, max_degree + 1):
        for a in range(d, 0, -1):
            f = Weyl(Partition((a,) + (1,) * (d - a)))
            for level in range(1, d + 1):
                family = FilteredFamily(f, level, Variant.FULL)
                with override_settings(hook_model="box"):
                    box = homology_table(build_complex(family))
                with override_settings(hook_model="hook"):
                    hook = homology_table(build_complex(family))
                same = {n: g.canonical() for n, g in box.items()} == {n: g.canonical() for n, g in hook.items()}
                tally.check(same, f"box and hook models disagree on F^{level}({f})")


def check_kulkarni(max_degree: int, primes: tuple[int, ...], tally: Tally) -> None:
    """dim Ext^i(Λ^b, D^Δ ⊗ Λ^B) = dim Ext^i(Λ^Δ, D^Δ) for Δ + B = b."""
    for p in primes:
        for b in range(2, min(max_degree, KULKARNI_DEGREE) + 1):
            for delta in range(1, b):
                left = ext_from_hook(Partition((1,) * b), tensor(Divided(delta), Exterior(b - delta)), GF(p))
                right = ext_from_hook(Partition((1,) * delta), Divided(delta), GF(p))
                tally.check(
                    left.dims() == right.dims(),
                    f"p={p}: Ext(Λ^{b}, D^{delta}⊗Λ^{b - delta}) = {left.dims()}, Ext(Λ^{delta}, D^{delta}) = {right.dims()}",
                )


def _kunneth_factors(max_degree: int) -> list[FunctorExpr]:
    out: list[FunctorExpr] = []
    for d in range(1, min(max_degree, KUNNETH_FACTOR_DEGREE) + 1):
        out += [Schur(lam) for lam in partitions_of(d)]
        if d > 1:
            out += [Divided(d), Exterior(d)]
    return out


def check_kunneth(max_degree: int, primes: tuple[int, ...], tally: Tally) -> None:
    """Top stable cohomology is multiplicative; divided-power tensors have none unless d̄ = (1^d)."""
    for p in primes:
        for left, right in combinations_with_replacement(_kunneth_factors(max_degree), 2):
            d = left.degree + right.degree
            if d > max_degree:
                continue
            top = stable_coh_dims_of(tensor(left, right), p).get(d, 0)
            product = stable_coh_dims_of(left, p).get(left.degree, 0) * stable_coh_dims_of(right, p).get(right.degree, 0)
            tally.check(top == product, f"p={p}: top H_st({left}⊗{right}) = {top}, product of tops = {product}")
        for d in range(1, min(max_degree, LES_DEGREE) + 1):
            for n in range(1, d + 1):
                for parts in enumerate_weights(d, n, True):
                    dims = stable_coh_dims_of(tensor(*(Divided(x) for x in parts)), p)
                    expected = {d: 1} if all(x == 1 for x in parts) else {}
                    tally.check(dims == expected, f"p={p}: H_st(D^{parts}) = {dims}, expected {expected}")


class StructureSuite:
    name = "structure"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        check_complexes(max_degree, primes, tally)
        check_kostka_ranks(max_degree, tally)
        check_hook_models(max_degree, tally)
        check_kulkarni(max_degree, primes, tally)
        check_kunneth(max_degree, primes, tally)
        logger.info("structure cases=%s failures=%s", tally.cases, len(tally.failures))
        return tally
