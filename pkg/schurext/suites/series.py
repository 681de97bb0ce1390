"""
The Ext series: closed sum against p-adic recursion, nonnegativity, the
relation N_b = t·u^{b+1}·E_b, and H_{a,b} against stable-cohomology homology.
"""
from __future__ import annotations

import logging

from schurext.combinat import hook
from schurext.errors import InvariantError
from schurext.series import e_series, h_polynomial, n_series
from schurext.speccomplex import stable_coh_dims
from schurext.suites.base import Tally

logger = logging.getLogger(__name__)

SERIES_PRIMES = (2, 3, 5)
MAX_K = 40
T_MAX, U_MAX = 32, 64
N_WINDOW = (12, 24)


class SeriesSuite:
    name = "series"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for p in sorted(set(SERIES_PRIMES) | set(primes)):
            for k in range(0, MAX_K + 1):
                try:
                    closed = e_series(k, p, T_MAX, U_MAX, method="closed")
                    recursive = e_series(k, p, T_MAX, U_MAX, method="recursive")
                except InvariantError as e:
                    tally.check(False, f"p={p} k={k}: {e}")
                    continue
                tally.check(closed == recursive, f"p={p}: closed and recursive E_{k} differ")

            t_max, u_max = N_WINDOW
            for b in range(0, max_degree + 1):
                lhs = n_series(b, p, t_max, u_max)
                rhs = e_series(b, p, t_max, u_max).shift(1, b + 1)
                tally.check(lhs == rhs, f"p={p}: N_{b} != t·u^{b + 1}·E_{b}")

        for p in primes:
            for d in range(1, max_degree + 1):
                for a in range(d, 0, -1):
                    coh = stable_coh_dims(hook(a, d - a), p)
                    poly = h_polynomial(a, d - a, p)
                    from_series = {j: c for j, c in enumerate(poly) if c}
                    tally.check(coh == from_series, f"p={p}: H_({a},1^{d - a}) = {from_series}, homology gives {coh}")
        logger.info("series cases=%s failures=%s", tally.cases, len(tally.failures))
        return tally
