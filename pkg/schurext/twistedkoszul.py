"""
The twisted Koszul calculus on (D^A ⊗ Λ^B)(k^n) and the chain maps it induces.

    η_j   contraction, lowers α_j by one
    Υ     Koszul map Σ_i η_i(x) ∧ e_i
    Φ     twisted Koszul map Σ_{t≤s} (-1)^s ψ^s(η_t x) ∧ e_{s+1}
    Φ^[B] divided powers of Φ, indexed by ordered set partitions
    Θ_[B] retraction of the graded Φ^[B]

Every complex built here uses the Υ-cokernel presentation of hook Weyl
modules, so basis labels are standard TableauMonomials.
"""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from schurext.combinat import OrderedSetPartition, Weight, hook, ordered_partitions
from schurext.config import override_settings
from schurext.errors import PreconditionError, ShapeMismatchError
from schurext.exactlin import ZZ, ChainComplex, ChainMap, IntegerMatrix, Ring
from schurext.polyfun import TableauMonomial, Weyl, hook_reduce
from schurext.polyfun.base import add_term, gen_index, normalize_wedge
from schurext.polyfun.hook import generize_monomial, specialize_monomial
from schurext.speccomplex import FilteredFamily, Variant, build_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AmbientElement:
    """Integer combination of monomials e^α ⊗ e_β in (D^A ⊗ Λ^B)(k^n)."""

    A: int
    B: int
    n: int
    terms: Mapping[TableauMonomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for m, c in self.terms.items():
            if not c:
                continue
            if (m.A, m.B, m.n) != (self.A, self.B, self.n):
                raise ShapeMismatchError(f"{m} does not live in (D^{self.A}⊗Λ^{self.B})(k^{self.n})")
            clean[m] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, terms: Mapping[TableauMonomial, int]) -> AmbientElement:
        shapes = {(m.A, m.B, m.n) for m, c in terms.items() if c}
        if len(shapes) != 1:
            raise ShapeMismatchError(f"cannot infer (A, B, n) from {len(shapes)} shapes")
        A, B, n = shapes.pop()
        return cls(A, B, n, dict(terms))

    @classmethod
    def monomial(cls, alpha: Iterable[int], beta: Iterable[int] = (), coeff: int = 1) -> AmbientElement:
        m = TableauMonomial(tuple(alpha), tuple(beta))
        return cls(m.A, m.B, m.n, {m: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _same_space(self, other: AmbientElement) -> None:
        if (self.A, self.B, self.n) != (other.A, other.B, other.n):
            raise ShapeMismatchError("elements of different ambient spaces")

    def __add__(self, other: AmbientElement) -> AmbientElement:
        self._same_space(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            add_term(out, m, c)
        return AmbientElement(self.A, self.B, self.n, out)

    def __neg__(self) -> AmbientElement:
        return AmbientElement(self.A, self.B, self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AmbientElement) -> AmbientElement:
        return self + (-other)

    def __rmul__(self, k: int) -> AmbientElement:
        return AmbientElement(self.A, self.B, self.n, {m: k * c for m, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: mc[0].reading_word()):
            parts.append(f"{c:+d}·{m}")
        return " ".join(parts)


def contraction_eta(j: int, x: AmbientElement) -> AmbientElement:
    """η_j: lower α_j by one; monomials with α_j = 0 die."""
    if not 1 <= j <= x.n:
        raise PreconditionError(f"η_{j} undefined on k^{x.n}")
    if x.A == 0:
        raise PreconditionError("η_j needs A ≥ 1")
    out: dict[TableauMonomial, int] = {}
    for m, c in x.terms.items():
        if m.alpha[j - 1]:
            alpha = m.alpha[: j - 1] + (m.alpha[j - 1] - 1,) + m.alpha[j:]
            add_term(out, TableauMonomial(alpha, m.beta), c)
    return AmbientElement(x.A - 1, x.B, x.n, out)


def wedge(x: AmbientElement, j: int) -> AmbientElement:
    """x ∧ e_j, with the exterior part resorted."""
    out: dict[TableauMonomial, int] = {}
    for m, c in x.terms.items():
        sign, beta = normalize_wedge(m.beta + (j,))
        if sign:
            add_term(out, TableauMonomial(m.alpha, beta), sign * c)
    return AmbientElement(x.A, x.B + 1, x.n, out)


def ambient_specialize(x: AmbientElement, i: int) -> AmbientElement:
    """ψ_i on the ambient space."""
    if not 1 <= i < x.n:
        raise PreconditionError(f"ψ_{i} undefined on k^{x.n}")
    out: dict[TableauMonomial, int] = {}
    for m, c in x.terms.items():
        k, image = specialize_monomial(m, i)
        if k:
            add_term(out, image, k * c)
    return AmbientElement(x.A, x.B, x.n - 1, out)


def ambient_generize(x: AmbientElement, s: int) -> AmbientElement:
    """ψ^s on the ambient space."""
    return AmbientElement(x.A, x.B, x.n + 1, {generize_monomial(m, s): c for m, c in x.terms.items()})


def ambient_boundary(x: AmbientElement) -> AmbientElement:
    """∂ = Σ_{i=1}^{n-1} (-1)^{i-1} ψ_i."""
    total = AmbientElement(x.A, x.B, x.n - 1)
    for i in range(1, x.n):
        term = ambient_specialize(x, i)
        total = total + term if i % 2 else total - term
    return total


def koszul_upsilon(x: AmbientElement) -> AmbientElement:
    """Υ(x) = Σ_i η_i(x) ∧ e_i."""
    total = AmbientElement(x.A - 1, x.B + 1, x.n)
    for i in range(1, x.n + 1):
        total = total + wedge(contraction_eta(i, x), i)
    return total


def upsilon_via_specialization(x: AmbientElement) -> AmbientElement:
    """Σ_t ψ_t(ψ^t(η_t x) ∧ e_{t+1}); agrees with Υ(x)."""
    total = AmbientElement(x.A - 1, x.B + 1, x.n)
    for t in range(1, x.n + 1):
        lifted = wedge(ambient_generize(contraction_eta(t, x), t), t + 1)
        total = total + ambient_specialize(lifted, t)
    return total


def phi(x: AmbientElement) -> AmbientElement:
    """
    Φ(x) = Σ_{1≤t≤s≤n} (-1)^s ψ^s(η_t x) ∧ e_{s+1}, from k^n to k^{n+1}.

    >>> str(phi(AmbientElement.monomial((2,))))
    '-1·e1^(1)⊗e2'
    """
    total = AmbientElement(x.A - 1, x.B + 1, x.n + 1)
    for t in range(1, x.n + 1):
        y = contraction_eta(t, x)
        if y.is_zero:
            continue
        for s in range(t, x.n + 1):
            term = wedge(ambient_generize(y, s), s + 1)
            total = total - term if s % 2 else total + term
    return total


def full_support_part(x: AmbientElement) -> AmbientElement:
    """Truncation to monomials of full-support weight."""
    return AmbientElement(x.A, x.B, x.n, {m: c for m, c in x.terms.items() if 0 not in m.weight})


def reduce_to_standard(x: AmbientElement) -> AmbientElement:
    """Residue modulo im Υ in the standard monomial basis."""
    by_weight: dict[Weight, dict[TableauMonomial, int]] = {}
    for m, c in x.terms.items():
        by_weight.setdefault(m.weight, {})[m] = c
    out: dict[TableauMonomial, int] = {}
    for part in by_weight.values():
        for m, c in hook_reduce(part).items():
            add_term(out, m, c)
    return AmbientElement(x.A, x.B, x.n, out)


# --- divided powers Φ^[B] ---


@dataclass(frozen=True)
class SignedBlockData:
    """α(d̄;I), β(d̄;I), sgn(d̄;I) and the monomial m(d̄;I) for I ∈ Par(d̄;N)."""

    weight: Weight
    partition: OrderedSetPartition
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    sign: int

    @property
    def monomial(self) -> TableauMonomial:
        return TableauMonomial(self.alpha, self.beta)


def _beta_sign(beta: Iterable[int]) -> int:
    return -1 if sum(b - 1 for b in beta) % 2 else 1


def signed_block_data(d: Weight, partition: OrderedSetPartition) -> SignedBlockData:
    if not partition.fits(d):
        raise PreconditionError(f"{partition} is not in Par({tuple(d)}; {partition.size})")
    N = partition.size
    alpha = [0] * N
    for dk, block in zip(d, partition.blocks):
        alpha[block[0] - 1] = dk + 1 - len(block)
    minima = set(partition.minima)
    beta = tuple(x for x in range(1, N + 1) if x not in minima)
    return SignedBlockData(tuple(d), partition, tuple(alpha), beta, _beta_sign(beta))


def phi_divided(B: int, d: Weight) -> AmbientElement:
    """
    Φ^[B](e^d̄) = Σ_{I ∈ Par(d̄; n+B)} sgn(d̄;I) · m(d̄;I).

    >>> str(phi_divided(2, (3, 1)))
    '-1·e1^(1)e2^(1)⊗e3∧e4 +1·e1^(1)e3^(1)⊗e2∧e4 -1·e1^(1)e4^(1)⊗e2∧e3'
    """
    d = tuple(d)
    if B < 0:
        raise PreconditionError("B must be nonnegative")
    n, N = len(d), len(d) + B
    out: dict[TableauMonomial, int] = {}
    for partition in ordered_partitions(d, N):
        data = signed_block_data(d, partition)
        add_term(out, data.monomial, data.sign)
    return AmbientElement(sum(d) - B, B, N, out)


def sigma_ks(
    partition: OrderedSetPartition, k: int, s: int, d: Weight | None = None
) -> OrderedSetPartition:
    """Σ_{k,s}: apply ψ^s to every block, then add s+1 to block k (1-based)."""
    blocks = partition.blocks
    if not 1 <= k <= len(blocks):
        raise PreconditionError(f"block index {k} outside 1..{len(blocks)}")
    if not blocks[k - 1][0] <= s <= partition.size:
        raise PreconditionError(f"need i_k={blocks[k - 1][0]} ≤ s={s} ≤ N={partition.size}")
    if d is not None and len(blocks[k - 1]) >= d[k - 1]:
        raise PreconditionError(f"block {k} already has d_k={d[k - 1]} elements")
    moved = [tuple(gen_index(x, s) for x in b) for b in blocks]
    moved[k - 1] = moved[k - 1] + (s + 1,)
    return OrderedSetPartition(tuple(moved))


def sigma_preimages(partition: OrderedSetPartition) -> list[tuple[OrderedSetPartition, int, int]]:
    """Every (I, k, s) with Σ_{k,s}(I) = J, one for each non-minimal element s+1 of J."""
    out = []
    minima = set(partition.minima)
    for x in range(2, partition.size + 1):
        if x in minima:
            continue
        s = x - 1
        k = partition.block_of(x)
        blocks = []
        for j, b in enumerate(partition.blocks):
            kept = tuple(y if y <= s else y - 1 for y in b if not (j == k and y == x))
            blocks.append(kept)
        out.append((OrderedSetPartition(tuple(blocks)), k + 1, s))
    return out


def sigma_image_counts(d: Weight, N: int) -> Counter[OrderedSetPartition]:
    """How often each J in Par(d̄; N+1) is hit by Σ_{k,s} over all admissible (I, k, s), I in Par(d̄; N)."""
    hits: Counter[OrderedSetPartition] = Counter()
    for I in ordered_partitions(d, N):
        for k, block in enumerate(I.blocks, start=1):
            if len(block) >= d[k - 1]:
                continue
            for s in range(block[0], N + 1):
                hits[sigma_ks(I, k, s, d)] += 1
    return hits


def theta_retraction(B: int, m: TableauMonomial) -> AmbientElement:
    """
    Θ_[B](m) for a standard m in degree n+B: sgn(β)·e^{(α_1+B, α_2, ..., α_n)}
    when m is terminal (β = (n+1, ..., n+B), α_i = 0 for i > n), else 0.
    """
    if not m.is_standard():
        raise PreconditionError(f"{m} is not standard")
    if m.B != B:
        raise ShapeMismatchError(f"{m} has {m.B} exterior factors, expected {B}")
    n = m.n - B
    zero = AmbientElement(m.A + B, 0, n)
    if n < 1:
        return zero
    terminal = m.beta == tuple(range(n + 1, n + B + 1)) and not any(m.alpha[n:])
    if not terminal:
        return zero
    alpha = (m.alpha[0] + B,) + m.alpha[1:n]
    return AmbientElement.monomial(alpha, (), _beta_sign(m.beta))


# --- chain maps ---


def hook_complex(A: int, B: int, a: int, variant: Variant = Variant.FULL, ring: Ring = ZZ) -> ChainComplex:
    """F^a_• or grF^a_• of W_{(A,1^B)} with standard monomial labels."""
    with override_settings(hook_model="hook"):
        return build_complex(FilteredFamily(Weyl(hook(A, B)), a, variant), ring)


def _monomial_of(label) -> TableauMonomial:
    _, (m,) = label
    return m


def _assemble_map(
    source: ChainComplex,
    target: ChainComplex,
    shift: int,
    image,
) -> ChainMap:
    """Blocks of a map given on basis monomials; image terms outside the target basis are dropped."""
    index = {n: {_monomial_of(lab): r for r, lab in enumerate(target.term(n))} for n in target.degrees}
    blocks = {}
    for n in source.degrees:
        tgt = index.get(n + shift, {})
        entries: dict[tuple[int, int], int] = {}
        for col, lab in enumerate(source.term(n)):
            for m, c in image(_monomial_of(lab)).terms.items():
                row = tgt.get(m)
                if row is not None and c:
                    entries[(row, col)] = entries.get((row, col), 0) + c
        blocks[n] = IntegerMatrix(target.rank(n + shift), source.rank(n), entries).reduce(source.ring)
    return ChainMap(source, target, shift, blocks)


def phi_chain_map(A: int, B: int, a: int, ring: Ring = ZZ) -> ChainMap:
    """Φ: F^a_•(W_{(A,1^B)}) → F^{a-1}_{•+1}(W_{(A-1,1^{B+1})})."""
    if A < 2 or a < 1:
        raise PreconditionError("need A ≥ 2 and a ≥ 1")
    source = hook_complex(A, B, a, ring=ring)
    target = hook_complex(A - 1, B + 1, a - 1, ring=ring)

    def image(m: TableauMonomial) -> AmbientElement:
        x = AmbientElement(m.A, m.B, m.n, {m: 1})
        return reduce_to_standard(full_support_part(phi(x)))

    f = _assemble_map(source, target, 1, image)
    logger.info("phi chain map A=%s B=%s a=%s ring=%s", A, B, a, ring)
    return f


def _phiB_params(d: int, delta: int, B: int) -> tuple[int, int]:
    A = d - B
    if not (0 <= delta < A <= d) or B < 0:
        raise PreconditionError(f"need 0 ≤ Δ < A ≤ d, got d={d} Δ={delta} B={B}")
    return A, A - delta


def phiB_chain_map(d: int, delta: int, B: int, ring: Ring = ZZ) -> ChainMap:
    """Φ^[B]: F^{a+B}_•(W_{(d)}) → F^a_{•+B}(W_{(A,1^B)}) with A = d-B, a = A-Δ."""
    A, a = _phiB_params(d, delta, B)
    source = hook_complex(d, 0, a + B, ring=ring)
    target = hook_complex(A, B, a, ring=ring)
    return _assemble_map(source, target, B, lambda m: phi_divided(B, m.alpha))


def graded_phiB_chain_map(d: int, delta: int, B: int, ring: Ring = ZZ) -> ChainMap:
    """Φ^[B] on associated graded pieces: grF^{a+B}_•(W_{(d)}) → grF^a_{•+B}(W_{(A,1^B)})."""
    A, a = _phiB_params(d, delta, B)
    source = hook_complex(d, 0, a + B, Variant.GRADED, ring)
    target = hook_complex(A, B, a, Variant.GRADED, ring)
    return _assemble_map(source, target, B, lambda m: phi_divided(B, m.alpha))


def theta_chain_map(d: int, delta: int, B: int, ring: Ring = ZZ) -> ChainMap:
    """Θ_[B]: grF^a_{•+B}(W_{(A,1^B)}) → grF^{a+B}_•(W_{(d)}), of degree -B."""
    A, a = _phiB_params(d, delta, B)
    source = hook_complex(A, B, a, Variant.GRADED, ring)
    target = hook_complex(d, 0, a + B, Variant.GRADED, ring)
    return _assemble_map(source, target, -B, lambda m: theta_retraction(B, m))
