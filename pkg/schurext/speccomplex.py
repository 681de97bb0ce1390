"""
Specialization complexes and the Ext groups they compute.

For a functor P the complex P(k^•) has P(k^n) in homological degree n and
differential Σ_{i=1}^{n-1} (-1)^{i-1} ψ_i. Restricting to weight spaces
gives the variants used here:

    full        F^a:  d̄ > 0 entrywise, d_1 ≥ a       (degrees 1..d)
    graded      grF^a: d̄ > 0 entrywise, d_1 = a     (quotient F^a / F^{a+1})
    extended    F̂^a:  d_1 ≥ a, d_n > 0, zeros allowed (finite window)
    degenerate  D^a:  F̂^a minus full support          (finite window)
    ambient     P(k^•) itself                        (finite window)

For a hook μ = (a, 1^b), Ext^i(W_μ, P) = H_{b+1-i}(F^a_•(P)).
"""
from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from schurext.combinat import Partition, Weight, check_degree, enumerate_weights
from schurext.errors import (
    InvariantError,
    NoHookRouteError,
    PreconditionError,
    ShapeMismatchError,
)
from schurext.exactlin import (
    ZZ,
    ChainComplex,
    GF,
    HomologyGroup,
    IntegerMatrix,
    Ring,
    homology,
    kernel_basis,
    place,
    rank_of_vectors,
)
from schurext.polyfun import (
    Divided,
    Exterior,
    FunctorExpr,
    Weyl,
    generization_matrix,
    kuhn_dual,
    specialization_matrix,
    tensor,
    weight_space,
)
from schurext.polyfun.base import merge_weight

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    FULL = "full"
    GRADED = "graded"
    EXTENDED = "extended"
    DEGENERATE = "degenerate"
    AMBIENT = "ambient"


@dataclass(frozen=True)
class FilteredFamily:
    """Which complex to build: functor, filtration level, variant and degree window."""

    functor: FunctorExpr
    level: int
    variant: Variant = Variant.FULL
    window: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.functor.has_schur:
            raise PreconditionError(f"{self.functor} contains a Schur atom; apply kuhn_dual first")
        if self.level < 0:
            raise PreconditionError("level must be nonnegative")
        windowed = self.variant in (Variant.EXTENDED, Variant.DEGENERATE, Variant.AMBIENT)
        if windowed and self.window is None:
            raise PreconditionError(f"the {self.variant.value} complex needs a finite window")

    @property
    def degrees(self) -> tuple[int, int]:
        if self.window is not None:
            return self.window
        return (1, max(self.functor.degree, 1))

    def weights(self, n: int) -> list[Weight]:
        d, a = self.functor.degree, self.level
        if self.variant is Variant.FULL:
            return enumerate_weights(d, n, True, a)
        if self.variant is Variant.GRADED:
            return enumerate_weights(d, n, True, exact_first=a)
        if self.variant is Variant.AMBIENT:
            return enumerate_weights(d, n, False)
        extended = enumerate_weights(d, n, False, a, last_positive=True)
        if self.variant is Variant.EXTENDED:
            return extended
        return [w for w in extended if 0 in w]


def _assemble(
    functor: FunctorExpr,
    lo: int,
    hi: int,
    weights: Mapping[int, Sequence[Weight]],
    ring: Ring,
    *,
    first_index: int = 1,
    keep: str = "",
) -> ChainComplex:
    """
    Direct sums of weight spaces with the alternating specialization sum.

    Components landing outside the index set of the lower degree are dropped
    (projection to a quotient, or restriction to a subcomplex).
    """
    labels: dict[int, tuple[Hashable, ...]] = {}
    offsets: dict[int, dict[Weight, int]] = {}
    for n in range(lo, hi + 1):
        labs: list[Hashable] = []
        offsets[n] = {}
        for w in weights.get(n, ()):
            offsets[n][w] = len(labs)
            labs.extend((w, lab) for lab in weight_space(functor, w).basis)
        labels[n] = tuple(labs)

    diffs = {}
    for n in range(lo + 1, hi + 1):
        entries: dict[tuple[int, int], int] = {}
        for w, col0 in offsets[n].items():
            for i in range(first_index, len(w)):
                target = merge_weight(w, i)
                row0 = offsets[n - 1].get(target)
                if row0 is None:
                    continue
                sign = 1 if (i - first_index) % 2 == 0 else -1
                place(entries, specialization_matrix(functor, w, i), row0, col0, sign)
        diffs[n] = IntegerMatrix(len(labels[n - 1]), len(labels[n]), entries)
    c = ChainComplex(ring, lo, hi, labels, diffs)
    logger.info(
        "complex built functor=%s kind=%s degrees=%s..%s ranks=%s",
        functor,
        keep or "custom",
        lo,
        hi,
        [c.rank(n) for n in c.degrees],
    )
    return c


def build_complex(fam: FilteredFamily, ring: Ring = ZZ) -> ChainComplex:
    """The complex of a filtered family, over Z or reduced mod p."""
    check_degree("build_complex", fam.functor.degree, kind="complex")
    lo, hi = fam.degrees
    weights = {n: fam.weights(n) for n in range(lo, hi + 1)}
    return _assemble(fam.functor, lo, hi, weights, ring, keep=fam.variant.value)


def shifted_complex(functor: FunctorExpr, a: int, ring: Ring = ZZ) -> ChainComplex:
    """
    Full-support complex of the shifted family P^{(a)}_{d̄} = P_{(a, d̄)}:
    degree n carries the weights (a, d_1, ..., d_n), differential built from ψ_{i+1}.
    """
    check_degree("shifted_complex", functor.degree, kind="complex")
    rest = functor.degree - a
    if rest < 0:
        raise PreconditionError(f"level {a} exceeds degree {functor.degree}")
    weights = {n: [(a,) + w for w in enumerate_weights(rest, n, True)] for n in range(0, rest + 1)}
    c = _assemble(functor, 0, rest, weights, ring, first_index=2, keep="shifted")
    # labels carry the full weight (a, d̄); strip the leading a for the shifted family
    labels = {n: tuple((w[1:], lab) for w, lab in c.labels[n]) for n in c.degrees}
    return ChainComplex(ring, c.lo, c.hi, labels, dict(c.diffs))


# --- Ext tables ---


@dataclass(frozen=True)
class ExtTable:
    """Ext^j groups for j in a finite range; missing j means the zero group."""

    ring: Ring
    source: str
    target: str
    entries: Mapping[int, HomologyGroup]
    rewrite: tuple[str, ...] = ()

    def __getitem__(self, j: int) -> HomologyGroup:
        return self.entries.get(j, HomologyGroup(self.ring))

    def nonzero(self) -> dict[int, HomologyGroup]:
        return {j: g for j, g in sorted(self.entries.items()) if not g.is_zero}

    def dims(self) -> dict[int, int]:
        """Nonzero dimensions over F_p (free ranks over Z)."""
        return {j: g.dimension for j, g in self.nonzero().items() if g.dimension}

    def canonical(self) -> tuple[tuple[int, tuple[int, tuple[int, ...]]], ...]:
        return tuple((j, g.canonical()) for j, g in self.nonzero().items())

    def same_groups(self, other: ExtTable) -> bool:
        return self.ring == other.ring and self.canonical() == other.canonical()


def _hook_ext(a: int, b: int, target: FunctorExpr, ring: Ring, source: str, rewrite=()) -> ExtTable:
    if target.degree != a + b:
        raise ShapeMismatchError(f"degree of {target} is {target.degree}, expected {a + b}")
    c = build_complex(FilteredFamily(target, a, Variant.FULL), ring)
    entries = {i: homology(c, b + 1 - i) for i in range(0, b + 2)}
    return ExtTable(ring, source, str(target), entries, tuple(rewrite))


def ext_from_hook(mu: Partition, target: FunctorExpr, ring: Ring = ZZ) -> ExtTable:
    """Ext^i(W_μ, P) = H_{b+1-i}(F^a_•(P)) for the hook μ = (a, 1^b)."""
    if not mu.is_hook or not mu.parts:
        raise PreconditionError(f"{mu} is not a hook")
    if target.has_schur:
        raise PreconditionError(f"{target} contains a Schur atom; apply kuhn_dual first")
    a, b = mu.hook_params()
    return _hook_ext(a, b, target, ring, f"W({mu.compact()})")


def ext_from_divided_exterior(a: int, b: int, target: FunctorExpr, ring: Ring = ZZ) -> ExtTable:
    """Ext^i(D^a ⊗ Λ^b, P) = H_{b+1-i}(grF^a_•(P))."""
    if a < 1 or b < 0:
        raise PreconditionError("need a ≥ 1 and b ≥ 0")
    if target.degree != a + b:
        raise ShapeMismatchError(f"degree of {target} is {target.degree}, expected {a + b}")
    c = build_complex(FilteredFamily(target, a, Variant.GRADED), ring)
    entries = {i: homology(c, b + 1 - i) for i in range(0, b + 2)}
    return ExtTable(ring, str(tensor(Divided(a), Exterior(b))), str(target), entries)


def ext_schur_query(lam: Partition, mu: Partition, ring: Ring = ZZ, route: str = "auto") -> ExtTable:
    """
    Ext^j(S_λ, S_μ) through Ext(S_λ, S_μ) = Ext(W_μ, W_λ) = Ext(W_λ', W_μ'),
    routed to whichever side has a hook source.
    """
    if lam.size != mu.size:
        raise ShapeMismatchError(f"|{lam}| != |{mu}|")
    head = f"Ext(S({lam.compact()}),S({mu.compact()}))"
    lam_c, mu_c = lam.conjugate(), mu.conjugate()
    if route in ("auto", "weyl") and mu.is_hook:
        a, b = mu.hook_params()
        chain = (head, f"= Ext(W({mu.compact()}),W({lam.compact()}))")
        return _hook_ext(a, b, Weyl(lam), ring, f"S({lam.compact()})", chain)
    if route in ("auto", "conjugate") and lam_c.is_hook:
        a, b = lam_c.hook_params()
        chain = (head, f"= Ext(W({lam_c.compact()}),W({mu_c.compact()}))")
        return _hook_ext(a, b, Weyl(mu_c), ring, f"S({lam.compact()})", chain)
    raise NoHookRouteError(f"{head}: neither {mu} nor the conjugate of {lam} is a hook")


def stable_coh_dims_of(functor: FunctorExpr, p: int) -> dict[int, int]:
    """dim H^j_st(P) = dim H_j(F^1_•(P^#) ⊗ F_p); nonzero entries only."""
    dual = kuhn_dual(functor)
    c = build_complex(FilteredFamily(dual, 1, Variant.FULL), GF(p))
    dims = {}
    for j in range(0, functor.degree + 1):
        g = homology(c, j)
        if g.dimension:
            dims[j] = g.dimension
    return dims


def stable_coh_dims(mu: Partition, p: int) -> dict[int, int]:
    """
    dim H^j_st(S_μ) over F_p, read off as dim H_j(F^1_•(W_μ) ⊗ F_p).

    >>> stable_coh_dims(Partition.of(2), 2)
    {1: 1, 2: 1}
    """
    check_degree("stable_coh_dims", mu.size, kind="complex")
    c = build_complex(FilteredFamily(Weyl(mu), 1, Variant.FULL), GF(p))
    dims = {}
    for j in range(0, mu.size + 1):
        g = homology(c, j)
        if g.dimension:
            dims[j] = g.dimension
    outside = [j for j in dims if j < mu.length or j > mu.size]
    if outside:
        raise InvariantError(f"stable cohomology of S({mu}) nonzero at j={outside}, outside [ℓ, d]")
    return dims


# --- structural checks ---


@dataclass
class CheckReport:
    """Outcome of a structural check: failures are data, not exceptions."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    unverified: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        logger.warning("check=%s failure=%s", self.name, message)
        self.failures.append(message)


def _reindex(vectors: Sequence[Mapping[int, int]], mapping: Mapping[int, int]) -> list[dict[int, int]]:
    """Move coordinates through an index map; coordinates without an image are dropped."""
    out = []
    for v in vectors:
        out.append({mapping[k]: x for k, x in v.items() if k in mapping and x})
    return out


def _boundaries(c: ChainComplex, n: int) -> list[dict[int, int]]:
    return [v for v in c.diff(n + 1).column_vectors() if v]


def verify_les(functor: FunctorExpr, a: int, ring: Ring = ZZ) -> CheckReport:
    """
    Exactness of 0 → F^{a+1} → F^a → grF^a → 0 in every degree and of the
    induced long exact homology sequence at every position. Over Z the
    homology sequence is checked rationally.
    """
    report = CheckReport(f"les {functor} a={a} {ring}")
    if not 1 <= a < functor.degree:
        report.fail(f"level {a} outside 1..{functor.degree - 1}")
        return report
    big = build_complex(FilteredFamily(functor, a, Variant.FULL), ring)
    sub = build_complex(FilteredFamily(functor, a + 1, Variant.FULL), ring)
    quo = build_complex(FilteredFamily(functor, a, Variant.GRADED), ring)

    incl: dict[int, dict[int, int]] = {}
    proj: dict[int, dict[int, int]] = {}
    lift: dict[int, dict[int, int]] = {}
    for n in big.degrees:
        pos = {lab: k for k, lab in enumerate(big.term(n))}
        sub_labels, quo_labels = set(sub.term(n)), set(quo.term(n))
        if sub_labels & quo_labels or sub_labels | quo_labels != set(pos):
            report.fail(f"terms do not split at degree {n}")
            return report
        incl[n] = {k: pos[lab] for k, lab in enumerate(sub.term(n))}
        lift[n] = {k: pos[lab] for k, lab in enumerate(quo.term(n))}
        proj[n] = {v: k for k, v in lift[n].items()}
        report.checked += 1

    for n in range(big.lo + 1, big.hi + 1):
        columns = big.diff(n).column_vectors()
        rows_sub = {v: k for k, v in incl[n - 1].items()}
        for k, col in enumerate(sub.diff(n).column_vectors()):
            image = columns[incl[n][k]]
            if any(ring.reduce(x) for r, x in image.items() if r in proj[n - 1]):
                report.fail(f"F^{a + 1} not closed under d at degree {n}")
                break
            if _reindex([image], rows_sub)[0] != {r: x for r, x in col.items() if x}:
                report.fail(f"d on F^{a + 1} is not the restriction at degree {n}")
                break
        for k, col in enumerate(quo.diff(n).column_vectors()):
            image = _reindex([columns[lift[n][k]]], proj[n - 1])[0]
            if image != {r: x for r, x in col.items() if x}:
                report.fail(f"d on grF^{a} is not the projection at degree {n}")
                break

    def rk(vectors) -> int:
        return rank_of_vectors([v for v in vectors if v], ring)

    for n in big.degrees:
        z_big = kernel_basis(big.diff(n), ring)
        z_sub = _reindex(kernel_basis(sub.diff(n), ring), incl[n])
        z_quo = kernel_basis(quo.diff(n), ring)
        b_big = _boundaries(big, n)
        b_quo = _boundaries(quo, n)
        b_sub_low = _reindex(_boundaries(sub, n - 1), incl.get(n - 1, {}))
        z_sub_low = _reindex(kernel_basis(sub.diff(n - 1), ring), incl.get(n - 1, {})) if n - 1 in incl else []
        b_big_low = _boundaries(big, n - 1) if n - 1 in incl else []

        # H_n(F^{a+1}) → H_n(F^a) → H_n(gr)
        im_i = rk(z_sub + b_big) - rk(b_big)
        pz = _reindex(z_big, proj[n])
        kernel_k = len(z_big) - (rk(pz + b_quo) - rk(b_quo))
        ker_pi = kernel_k - rk(b_big)
        if im_i != ker_pi:
            report.fail(f"not exact at H_{n}(F^{a}): dim im={im_i}, dim ker={ker_pi}")

        # H_n(F^a) → H_n(gr) → H_{n-1}(F^{a+1})
        im_pi = rk(pz + b_quo) - rk(b_quo)
        lifted = _reindex(z_quo, lift[n])
        d_big = big.diff(n)
        connecting = [d_big.apply(v) for v in lifted]
        if any(k in proj.get(n - 1, {}) and ring.reduce(x) for v in connecting for k, x in v.items()):
            report.fail(f"connecting map leaves F^{a + 1} at degree {n - 1}")
            continue
        im_delta = rk(connecting + b_sub_low) - rk(b_sub_low)
        ker_delta = len(z_quo) - im_delta - rk(b_quo)
        if im_pi != ker_delta:
            report.fail(f"not exact at H_{n}(grF^{a}): dim im={im_pi}, dim ker={ker_delta}")

        # H_n(gr) → H_{n-1}(F^{a+1}) → H_{n-1}(F^a)
        if n - 1 in incl:
            ker_i = len(z_sub_low) - (rk(z_sub_low + b_big_low) - rk(b_big_low)) - rk(b_sub_low)
            if im_delta != ker_i:
                report.fail(f"not exact at H_{n - 1}(F^{a + 1}): dim im={im_delta}, dim ker={ker_i}")
        report.checked += 3
    return report


def degenerate_split_check(
    functor: FunctorExpr, a: int, window: tuple[int, int], ring: Ring = ZZ
) -> CheckReport:
    """
    F̂^a = F^a ⊕ D^a termwise, both summands closed under d, and D^a acyclic
    in the interior of the window. Boundary degrees are reported unverified.
    """
    lo, hi = window
    report = CheckReport(f"degenerate split {functor} a={a} window={lo}..{hi}")
    report.unverified = [lo, hi]
    if hi < functor.degree + 2:
        report.fail(
            f"window {lo}..{hi} shorter than degree+2={functor.degree + 2}; "
            f"boundary degrees {lo},{hi} cannot be separated from the support"
        )
        return report
    ext = build_complex(FilteredFamily(functor, a, Variant.EXTENDED, window), ring)
    deg = build_complex(FilteredFamily(functor, a, Variant.DEGENERATE, window), ring)
    full_fam = FilteredFamily(functor, a, Variant.FULL)
    for n in ext.degrees:
        full_labels = {(w, lab) for w in full_fam.weights(n) for lab in weight_space(functor, w).basis}
        deg_labels = set(deg.term(n))
        if full_labels & deg_labels or full_labels | deg_labels != set(ext.term(n)):
            report.fail(f"F̂^{a} ≠ F^{a} ⊕ D^{a} at degree {n}")
        report.checked += 1
    for n in range(lo + 1, hi + 1):
        rows, cols = ext.term(n - 1), ext.term(n)
        for (r, c), v in ext.diff(n).entries.items():
            if not ring.reduce(v):
                continue
            src_full = 0 not in cols[c][0]
            tgt_full = 0 not in rows[r][0]
            if src_full != tgt_full:
                which = "D" if not src_full else "F"
                report.fail(f"d leaves {which}^{a} at degree {n}")
                break
    for n in range(lo + 1, hi):
        g = homology(deg, n)
        if not g.is_zero:
            report.fail(f"H_{n}(D^{a}) = {g} is not zero")
        report.checked += 1
    return report


def ambient_exactness_check(functor: FunctorExpr, window: tuple[int, int], ring: Ring = ZZ) -> CheckReport:
    """P(k^•) is exact: zero interior homology, and ψ^0 is a contracting homotopy."""
    lo, hi = window
    report = CheckReport(f"ambient exactness {functor} window={lo}..{hi}")
    report.unverified = [lo, hi]
    c = build_complex(FilteredFamily(functor, 0, Variant.AMBIENT, window), ring)
    starts: dict[int, dict[Weight, int]] = {}
    for n in c.degrees:
        starts[n] = {}
        for k, (w, _) in enumerate(c.term(n)):
            starts[n].setdefault(w, k)

    def homotopy(n: int) -> IntegerMatrix:
        entries: dict[tuple[int, int], int] = {}
        for w, col0 in starts[n].items():
            place(entries, generization_matrix(functor, w, 0), starts[n + 1][(0,) + w], col0)
        return IntegerMatrix(c.rank(n + 1), c.rank(n), entries)

    for n in range(lo + 1, hi):
        lhs = c.diff(n + 1) @ homotopy(n) + homotopy(n - 1) @ c.diff(n)
        if not (lhs - IntegerMatrix.identity(c.rank(n))).is_zero(ring):
            report.fail(f"dψ^0 + ψ^0d != id at degree {n}")
        if not homology(c, n).is_zero:
            report.fail(f"H_{n}(P(k^•)) != 0")
        report.checked += 2
    return report


def graded_shift_check(functor: FunctorExpr, a: int, ring: Ring = ZZ) -> CheckReport:
    """grF^a_{n+1}(P) equals the shifted family's degree-n term, with d negated."""
    report = CheckReport(f"graded shift {functor} a={a}")
    graded = build_complex(FilteredFamily(functor, a, Variant.GRADED), ring)
    shifted = shifted_complex(functor, a, ring)
    for n in shifted.degrees:
        expected = tuple(((a,) + w, lab) for w, lab in shifted.term(n))
        if graded.term(n + 1) != expected:
            report.fail(f"terms differ at degree {n + 1}")
            continue
        if n > shifted.lo and graded.diff(n + 1) != -shifted.diff(n):
            report.fail(f"differentials differ at degree {n + 1}")
        report.checked += 1
    return report
