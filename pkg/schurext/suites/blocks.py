"""
GL_2 blocks against the two-row Ext series, the hook nonvanishing criterion
against H_{a,b}, and the closed formulas against specialization-complex homology.
"""
from __future__ import annotations

import logging

from schurext.combinat import Partition, hook, partitions_of
from schurext.exactlin import GF
from schurext.series import e_series, ext_dim_formula, gl2_same_block, h_polynomial, hook_nonvanishing
from schurext.speccomplex import ext_schur_query
from schurext.suites.base import Tally

logger = logging.getLogger(__name__)

BLOCK_DEGREE = 20
BLOCK_PRIMES = (2, 3, 5)


def two_row_pairs(d: int) -> list[tuple[Partition, Partition]]:
    """(λ, μ) with at most two rows each and λ_1 ≥ μ_1."""
    shapes = [Partition((d - b, b)) for b in range(0, d // 2 + 1)]
    return [(lam, mu) for lam in shapes for mu in shapes if lam[0] >= mu[0]]


def check_blocks(tally: Tally) -> None:
    for p in BLOCK_PRIMES:
        for d in range(1, BLOCK_DEGREE + 1):
            for lam, mu in two_row_pairs(d):
                span = lam[0] - mu[0]
                # every t-degree of E_k at u^span is at most 2·span + 1
                nonzero = bool(e_series(mu[0] - mu[1], p, 2 * span + 1, span).u_coefficient(span))
                tally.check(
                    gl2_same_block(lam, mu, p) == nonzero,
                    f"p={p}: block test for ({lam}),({mu}) disagrees with the Ext series",
                )
        for m in range(0, BLOCK_DEGREE + 1):
            for n in range(0, m + 1):
                series = bool(h_polynomial(n + 1, m - n, p))
                tally.check(
                    hook_nonvanishing(n, m, p) == series,
                    f"p={p}: nonvanishing criterion for (n,m)=({n},{m}) disagrees with H_(n+1,m-n)",
                )


def check_formulas(max_degree: int, primes: tuple[int, ...], tally: Tally) -> None:
    """Closed formulas against homology for hook pairs and for λ = (d) against two-row μ."""
    for p in primes:
        for d in range(1, max_degree + 1):
            hooks = [hook(a, d - a) for a in range(d, 0, -1)]
            for lam in hooks:
                for mu in hooks:
                    if lam[0] < mu[0]:
                        continue
                    dims = ext_schur_query(lam, mu, GF(p)).dims()
                    formula = {j: ext_dim_formula("hook", lam, mu, j, p) for j in range(0, d + 1)}
                    formula = {j: v for j, v in formula.items() if v}
                    tally.check(dims == formula, f"p={p}: hook formula {formula} != homology {dims} for ({lam}),({mu})")
            row = Partition.of(d)
            for mu in partitions_of(d):
                if mu.length > 2:
                    continue
                dims = ext_schur_query(row, mu, GF(p)).dims()
                formula = {j: ext_dim_formula("two_row", row, mu, j, p) for j in range(0, d + 1)}
                formula = {j: v for j, v in formula.items() if v}
                tally.check(dims == formula, f"p={p}: two-row formula {formula} != homology {dims} for ({row}),({mu})")


class BlocksSuite:
    name = "blocks"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        check_blocks(tally)
        check_formulas(max_degree, primes, tally)
        logger.info("blocks cases=%s failures=%s", tally.cases, len(tally.failures))
        return tally
