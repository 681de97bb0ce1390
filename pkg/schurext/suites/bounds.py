"""
Vanishing ranges: stable cohomology of S_μ lives in [ℓ(μ), |μ|], Ext^j(S_μ, Λ^d)
is dual to it and vanishes above d - ℓ(μ), and both resolution shapes stay
within their length bounds.
"""
from __future__ import annotations

import logging

from schurext.combinat import Partition, partitions_of
from schurext.config import get_settings
from schurext.errors import InvariantError
from schurext.exactlin import GF
from schurext.resolutions import schur_resolution_shape, weyl_resolution_shape
from schurext.speccomplex import ext_schur_query, stable_coh_dims
from schurext.suites.base import Tally

logger = logging.getLogger(__name__)

# resolution shapes are pure combinatorics and run further than the complexes
RESOLUTION_EXTRA = 3


def check_stable_range(mu: Partition, p: int, tally: Tally) -> None:
    d = mu.size
    try:
        coh = stable_coh_dims(mu, p)
    except InvariantError as e:
        tally.check(False, f"p={p}: {e}")
        return
    tally.check(all(mu.length <= j <= d for j in coh), f"p={p}: H_st(S({mu})) = {coh} outside [ℓ, d]")
    ext = ext_schur_query(mu, Partition((1,) * d), GF(p)).dims()
    tally.check(all(j <= d - mu.length for j in ext), f"p={p}: Ext(S({mu}),Λ^{d}) = {ext} above d-ℓ")
    dual = {d - j: v for j, v in coh.items()}
    tally.check(ext == dual, f"p={p}: Ext(S({mu}),Λ^{d}) = {ext}, stable cohomology gives {dual}")


def check_resolution_lengths(mu: Partition, tally: Tally) -> None:
    divided = weyl_resolution_shape(mu)
    tally.check(divided.length <= divided.bound(), f"Res({mu}) has length {divided.length} > {divided.bound()}")
    tally.check(
        all(s[0] >= mu[0] for summands in divided.terms.values() for s in summands),
        f"Res({mu}) has a summand with first part below {mu[0]}",
    )
    exterior = schur_resolution_shape(mu)
    tally.check(
        exterior.length <= exterior.bound(),
        f"exterior resolution of S({mu}) has length {exterior.length} > {exterior.bound()}",
    )


class BoundsSuite:
    name = "bounds"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for d in range(1, max_degree + 1):
            for mu in partitions_of(d):
                for p in primes:
                    check_stable_range(mu, p, tally)
        for d in range(1, min(max_degree + RESOLUTION_EXTRA, get_settings().combinat_guard) + 1):
            for mu in partitions_of(d):
                check_resolution_lengths(mu, tally)
        logger.info("bounds cases=%s failures=%s", tally.cases, len(tally.failures))
        return tally
