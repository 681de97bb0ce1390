"""
Resolution shapes: Euler characteristics against Schur polynomials, and the
degree-one summands against the Pieri strips of the recipe.
"""
from __future__ import annotations

from schurext.combinat import Partition, partitions_of, pieri_strips
from schurext.config import get_settings
from schurext.resolutions import euler_check, schur_resolution_shape, weyl_resolution_shape
from schurext.suites.base import Tally

# character checks expand products in |μ| variables; keep them a step above max_degree
EULER_EXTRA = 2


def expected_degree_one(mu: Partition) -> list[Partition]:
    """Degree-one summands: μ_1 prepended to Res_1(μ̄), plus Res_0 of every strip γ ≠ μ."""
    if mu.length <= 1:
        return []
    inner = weyl_resolution_shape(mu.bar()).terms.get(1, ())
    out = [Partition(tuple(sorted((mu[0],) + s.parts, reverse=True))) for s in inner]
    out += [gamma for gamma in pieri_strips(mu[0], mu.bar()) if gamma != mu]
    return sorted(out, reverse=True)


class ResolutionsSuite:
    name = "resolutions"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        top = min(max_degree + EULER_EXTRA, get_settings().combinat_guard)
        for d in range(1, top + 1):
            for mu in partitions_of(d):
                divided = weyl_resolution_shape(mu)
                tally.check(euler_check(divided), f"Euler characteristic of Res({mu}) != s_{mu}")
                tally.check(euler_check(schur_resolution_shape(mu)), f"Euler characteristic of the exterior resolution of S({mu}) != s_{mu}")
                got = sorted(divided.terms.get(1, ()), reverse=True)
                tally.check(got == expected_degree_one(mu), f"degree-one summands of Res({mu}) are {got}")
        return tally
