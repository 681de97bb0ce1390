"""
The twisted Koszul calculus checked exhaustively on small monomials, and the
chain maps Φ, Φ^[B], Θ_[B] checked on the complexes they connect.
"""
from __future__ import annotations

import logging
from itertools import combinations

from schurext.combinat import Partition, enumerate_weights, hook, ordered_partitions
from schurext.exactlin import GF, ZZ, IntegerMatrix, compose, is_acyclic, mapping_cone
from schurext.polyfun import Weyl
from schurext.speccomplex import ext_from_hook
from schurext.suites.base import Tally
from schurext.twistedkoszul import (
    AmbientElement,
    ambient_boundary,
    ambient_generize,
    ambient_specialize,
    contraction_eta,
    full_support_part,
    graded_phiB_chain_map,
    koszul_upsilon,
    phi,
    phi_chain_map,
    phi_divided,
    phiB_chain_map,
    sigma_ks,
    sigma_image_counts,
    sigma_preimages,
    theta_chain_map,
    upsilon_via_specialization,
)

logger = logging.getLogger(__name__)

MAX_RANK = 4
MAX_DIVIDED_POWER = 3


def ambient_monomials(A: int, B: int, n: int) -> list[AmbientElement]:
    """Every e^α ⊗ e_β in (D^A ⊗ Λ^B)(k^n)."""
    out = []
    for alpha in enumerate_weights(A, n, False):
        for beta in combinations(range(1, n + 1), B):
            out.append(AmbientElement.monomial(alpha, beta))
    return out


def check_operator_identities(x: AmbientElement, tally: Tally) -> None:
    """Koszul and twisted-Koszul identities and η/ψ exchange rules on one element."""
    n = x.n
    ups = koszul_upsilon(x)
    tally.check(upsilon_via_specialization(x) == ups, f"Υ via specialization differs on {x}")

    boundary_phi = ambient_boundary(phi(x))
    phi_boundary = phi(ambient_boundary(x)) if n >= 2 else AmbientElement(x.A - 1, x.B + 1, n)
    tally.check((phi_boundary + boundary_phi + ups).is_zero, f"Φ∂ + ∂Φ + Υ != 0 on {x}")

    if x.A >= 2:
        tally.check(koszul_upsilon(ups).is_zero, f"ΥΥ != 0 on {x}")
        tally.check((phi(ups) + koszul_upsilon(phi(x))).is_zero, f"ΦΥ + ΥΦ != 0 on {x}")
        for j in range(1, n + 1):
            for t in range(j + 1, n + 1):
                lhs = contraction_eta(j, contraction_eta(t, x))
                tally.check(lhs == contraction_eta(t, contraction_eta(j, x)), f"η_{j}η_{t} != η_{t}η_{j} on {x}")

    for i in range(1, n):
        spec = ambient_specialize(x, i)
        for j in range(1, n):
            lhs = contraction_eta(j, spec)
            if j < i:
                rhs = ambient_specialize(contraction_eta(j, x), i)
            elif j == i:
                rhs = ambient_specialize(contraction_eta(i, x) + contraction_eta(i + 1, x), i)
            else:
                rhs = ambient_specialize(contraction_eta(j + 1, x), i)
            tally.check(lhs == rhs, f"η_{j}ψ_{i} exchange fails on {x}")

    for s in range(0, n + 1):
        gen = ambient_generize(x, s)
        for j in range(1, n + 2):
            lhs = contraction_eta(j, gen)
            if j <= s:
                rhs = ambient_generize(contraction_eta(j, x), s)
            elif j == s + 1:
                rhs = AmbientElement(x.A - 1, x.B, n + 1)
            else:
                rhs = ambient_generize(contraction_eta(j - 1, x), s)
            tally.check(lhs == rhs, f"η_{j}ψ^{s} exchange fails on {x}")


def check_sigma_multiplicities(d: tuple[int, ...], tally: Tally) -> None:
    """Every J in Par(d̄; N+1) has N+1-n preimages under the maps Σ_{k,s}."""
    n = len(d)
    for N in range(n, sum(d)):
        for J in ordered_partitions(d, N + 1):
            pre = sigma_preimages(J)
            tally.check(len(pre) == N + 1 - n, f"{J} has {len(pre)} preimages, expected {N + 1 - n}")
            for I, k, s in pre:
                ok = I.fits(d) and sigma_ks(I, k, s, d) == J
                tally.check(ok, f"Σ_{k},{s}({I}) != {J}")
        hits = sigma_image_counts(d, N)
        targets = set(ordered_partitions(d, N + 1))
        tally.check(set(hits) == targets, f"Σ images from Par({d};{N}) are not Par({d};{N + 1})")
        for J, count in hits.items():
            tally.check(count == N + 1 - n, f"{J} is hit {count} times, expected {N + 1 - n}")


def check_chain_maps(d: int, primes: tuple[int, ...], tally: Tally) -> None:
    rings = [ZZ] + [GF(p) for p in primes]
    for B in range(0, d):
        A = d - B
        for delta in range(0, A):
            tag = f"d={d} Δ={delta} B={B}"
            f = phiB_chain_map(d, delta, B)
            tally.check(f.is_chain_map(), f"Φ^[B] is not a chain map ({tag})")
            if B <= MAX_DIVIDED_POWER and delta <= A - 2:
                g = phi_chain_map(A, B, A - delta)
                tally.check(g.is_chain_map(), f"Φ is not a chain map (A={A} B={B} a={A - delta})")
                composite = compose(g, f)
                following = phiB_chain_map(d, delta, B + 1)
                same = all(composite.block(n) == following.block(n) * (B + 1) for n in f.source.degrees)
                tally.check(same, f"Φ∘Φ^[B] != (B+1)Φ^[B+1] ({tag})")

            graded = graded_phiB_chain_map(d, delta, B)
            theta = theta_chain_map(d, delta, B)
            tally.check(graded.is_chain_map(), f"graded Φ^[B] is not a chain map ({tag})")
            tally.check(theta.is_chain_map(), f"Θ_[B] is not a chain map ({tag})")
            retract = compose(theta, graded)
            identity = all(
                retract.block(n) == IntegerMatrix.identity(graded.source.rank(n)) for n in graded.source.degrees
            )
            tally.check(identity, f"Θ_[B]∘Φ^[B] != id ({tag})")

            for ring in rings:
                cone = mapping_cone(phiB_chain_map(d, delta, B, ring))
                tally.check(is_acyclic(cone), f"cone of Φ^[B] not acyclic over {ring} ({tag})")

            left = ext_from_hook(hook(d - delta, delta), Weyl(Partition.of(d)))
            right = ext_from_hook(hook(A - delta, B + delta), Weyl(hook(A, B)))
            tally.check(left.same_groups(right), f"Ext(W({d - delta},1^{delta}),W({d})) differs ({tag})")


class TwistedSuite:
    name = "twisted"

    def run(self, *, max_degree: int = 5, primes: tuple[int, ...] = (2,)) -> Tally:
        tally = Tally()
        for total in range(1, max_degree + 1):
            for A in range(1, total + 1):
                B = total - A
                for n in range(max(B, 1), MAX_RANK + 1):
                    for x in ambient_monomials(A, B, n):
                        check_operator_identities(x, tally)
            for n in range(1, total + 1):
                for d in enumerate_weights(total, n, True):
                    check_sigma_multiplicities(d, tally)
                    e = AmbientElement.monomial(d)
                    tally.check(phi_divided(1, d) == full_support_part(phi(e)), f"Φ^[1] != Φ on e^{d}")
            check_chain_maps(total, primes, tally)
            logger.info("twisted d=%s cases=%s failures=%s", total, tally.cases, len(tally.failures))
        return tally
