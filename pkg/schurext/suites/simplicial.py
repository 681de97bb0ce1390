"""
Cosimplicial identities of specialization ψ_i and generization ψ^i, checked
as matrix identities between weight spaces:

    ψ^j ψ^i = ψ^i ψ^{j-1}              i < j
    ψ_j ψ_i = ψ_i ψ_{j+1}              i ≤ j
    ψ_j ψ^i = ψ^i ψ_{j-1}              i < j-1
            = id                       i = j-1 or i = j
            = ψ^{i-1} ψ_j              i ≥ j+1
"""
from __future__ import annotations

from schurext.combinat import Weight, enumerate_weights
from schurext.config import override_settings
from schurext.exactlin import IntegerMatrix
from schurext.polyfun import FunctorExpr, generization_matrix, specialization_matrix, weight_space
from schurext.polyfun.base import insert_zero, merge_weight
from schurext.suites.base import Tally, sample_functors

MAX_LENGTH = 4
MAX_FUNCTOR_DEGREE = 4


def check_weight(f: FunctorExpr, w: Weight, tally: Tally) -> None:
    n = len(w)
    gen, spec = generization_matrix, specialization_matrix
    tag = f"{f} at {w}"
    for i in range(0, n + 1):
        for j in range(i + 1, n + 2):
            lhs = gen(f, insert_zero(w, i), j) @ gen(f, w, i)
            rhs = gen(f, insert_zero(w, j - 1), i) @ gen(f, w, j - 1)
            tally.check(lhs == rhs, f"ψ^{j}ψ^{i} != ψ^{i}ψ^{j - 1} on {tag}")
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            lhs = spec(f, merge_weight(w, i), j) @ spec(f, w, i)
            rhs = spec(f, merge_weight(w, j + 1), i) @ spec(f, w, j + 1)
            tally.check(lhs == rhs, f"ψ_{j}ψ_{i} != ψ_{i}ψ_{j + 1} on {tag}")
    for i in range(0, n + 1):
        for j in range(1, n + 1):
            lhs = spec(f, insert_zero(w, i), j) @ gen(f, w, i)
            if i < j - 1:
                rhs = gen(f, merge_weight(w, j - 1), i) @ spec(f, w, j - 1)
            elif i in (j - 1, j):
                rhs = IntegerMatrix.identity(weight_space(f, w).rank)
            else:
                rhs = gen(f, merge_weight(w, j), i - 1) @ spec(f, w, j)
            tally.check(lhs == rhs, f"ψ_{j}ψ^{i} identity fails on {tag}")


class SimplicialSuite:
    name = "simplicial"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for hook_model in ("box", "hook"):
            with override_settings(hook_model=hook_model):
                for d in range(1, min(max_degree, MAX_FUNCTOR_DEGREE) + 1):
                    for f in sample_functors(d):
                        for n in range(1, MAX_LENGTH + 1):
                            for w in enumerate_weights(d, n, False):
                                check_weight(f, w, tally)
        return tally
