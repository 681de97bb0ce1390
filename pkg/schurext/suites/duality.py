"""
Non-canonical duality between two-column shapes and hooks:

    dim Ext^j(S_{(2^n,1^{m-n})}, Λ^{m+n}) = dim Ext^{n-j}(S_{(n+1,1^{m-n})}, Λ^{m+1})   (m ≥ n)
"""
from __future__ import annotations

from schurext.combinat import Partition, hook
from schurext.exactlin import GF
from schurext.speccomplex import ext_schur_query
from schurext.suites.base import Tally


def two_column(m: int, n: int) -> Partition:
    return Partition((2,) * n + (1,) * (m - n))


def column(d: int) -> Partition:
    return Partition((1,) * d)


class DualitySuite:
    name = "duality"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for p in primes:
            for total in range(1, max_degree + 1):
                for n in range(0, total // 2 + 1):
                    m = total - n
                    left = ext_schur_query(two_column(m, n), column(m + n), GF(p)).dims()
                    right = ext_schur_query(hook(n + 1, m - n), column(m + 1), GF(p)).dims()
                    flipped = {n - j: v for j, v in right.items()}
                    tally.check(
                        left == flipped,
                        f"p={p} m={m} n={n}: two-column dims {left}, flipped hook dims {flipped}",
                    )
        return tally
