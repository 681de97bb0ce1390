"""
Hook invariance: sliding a box from the leg to the arm of both hooks leaves
Ext(S_{(A,1^B)}, S_{(a,1^b)}) unchanged, over Z and over F_p.
"""
from __future__ import annotations

import logging

from schurext.combinat import Partition, hook
from schurext.exactlin import GF, ZZ
from schurext.speccomplex import ext_schur_query, stable_coh_dims
from schurext.suites.base import Tally

logger = logging.getLogger(__name__)


def slid_pairs(d: int, delta: int) -> list[tuple[Partition, Partition]]:
    """(λ, μ) = ((A,1^B), (a,1^b)) with A - a = Δ, starting at λ = (d)."""
    out = []
    for a in range(d - delta, 0, -1):
        A = a + delta
        out.append((hook(A, d - A), hook(a, d - a)))
    return out


class InvarianceSuite:
    """Slid hook pairs, the stable-cohomology reading, and agreement of both hook routes."""

    name = "invariance"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        rings = [ZZ] + [GF(p) for p in primes]
        for d in range(1, max_degree + 1):
            for delta in range(0, d):
                pairs = slid_pairs(d, delta)
                for ring in rings:
                    tables = [ext_schur_query(lam, mu, ring) for lam, mu in pairs]
                    for (lam, mu), table in zip(pairs[1:], tables[1:]):
                        tally.check(
                            table.same_groups(tables[0]),
                            f"Ext(S({lam}),S({mu})) != Ext(S({pairs[0][0]}),S({pairs[0][1]})) over {ring}",
                        )
                    for (lam, mu), table in zip(pairs, tables):
                        other = ext_schur_query(lam, mu, ring, route="conjugate")
                        tally.check(
                            other.same_groups(table),
                            f"hook routes disagree for Ext(S({lam}),S({mu})) over {ring}",
                        )
                for p in primes:
                    coh = stable_coh_dims(hook(delta + 1, d - delta - 1), p)
                    expected = {d - j: v for j, v in coh.items()}
                    for lam, mu in pairs:
                        dims = ext_schur_query(lam, mu, GF(p)).dims()
                        tally.check(
                            dims == expected,
                            f"dim Ext(S({lam}),S({mu})) over F_{p} is {dims}, stable cohomology gives {expected}",
                        )
            logger.info("invariance d=%s cases=%s failures=%s", d, tally.cases, len(tally.failures))
        return tally
