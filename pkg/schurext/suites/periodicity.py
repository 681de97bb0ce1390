"""
Periodicity of stable cohomology: H^j_st(S_μ) = H^{j+q}_st(S_{μ[q]}) for
μ[q] = (μ, 1^q) and q = p^r > |μ| - ℓ(μ).
"""
from __future__ import annotations

from schurext.combinat import Partition, append_ones, partitions_of
from schurext.config import get_settings
from schurext.speccomplex import stable_coh_dims
from schurext.suites.base import Tally

# shapes whose minimal period is checked; μ[q] may exceed max_degree by this much
BASE_DEGREE = 3
SLACK = 2


def minimal_period(mu: Partition, p: int) -> int:
    q = 1
    while q <= mu.size - mu.length:
        q *= p
    return q


def periodic_pairs(max_degree: int, p: int) -> list[tuple[Partition, int]]:
    limit = min(max_degree + SLACK, get_settings().complex_guard)
    out = []
    for d in range(1, BASE_DEGREE + 1):
        for mu in partitions_of(d):
            q = minimal_period(mu, p)
            if mu.size + q <= limit:
                out.append((mu, q))
    return out


class PeriodicitySuite:
    name = "periodicity"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for p in primes:
            for mu, q in periodic_pairs(max_degree, p):
                shifted = {j + q: v for j, v in stable_coh_dims(mu, p).items()}
                target = append_ones(mu, q)
                dims = stable_coh_dims(target, p)
                tally.check(dims == shifted, f"p={p}: H_st(S({mu})) shifted by {q} is {shifted}, H_st(S({target})) is {dims}")
        return tally
