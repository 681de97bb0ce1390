"""
Exact linear algebra over Z and F_p.

Sparse integer matrices, Smith and Hermite normal forms, ranks and kernels,
chain complexes with their homology, chain maps and mapping cones. All
arithmetic is on Python ints; prime-field work reduces integral data mod p.
"""
from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from math import gcd
from types import MappingProxyType

from sympy import isprime

from schurext.errors import (
    MalformedComplexError,
    ShapeMismatchError,
    SolveError,
    UsageError,
)
from schurext.models import ComplexOut

logger = logging.getLogger(__name__)

Vector = dict[int, int]


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: Z when p is None, otherwise F_p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not isprime(self.p):
            raise UsageError(f"p={self.p} is not a prime")

    @property
    def is_field(self) -> bool:
        return self.p is not None

    def reduce(self, x: int) -> int:
        return x if self.p is None else x % self.p

    def __str__(self) -> str:
        return "Z" if self.p is None else f"F_{self.p}"

    @classmethod
    def parse(cls, kind: str, p: int | None = None) -> Ring:
        """Ring from CLI-style selectors: ("int", None) or ("gf", p)."""
        kind = kind.strip().lower()
        if kind in ("int", "z", "zz"):
            return cls()
        if kind in ("gf", "fp", "f_p"):
            if p is None:
                raise UsageError("ring gf requires --p")
            return cls(p)
        raise UsageError(f"unknown ring {kind!r}")


ZZ = Ring()


def GF(p: int) -> Ring:
    return Ring(p)


class IntegerMatrix:
    """Sparse matrix of arbitrary-precision integers; only nonzero entries are stored."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Mapping[tuple[int, int], int] | None = None,
    ) -> None:
        if rows < 0 or cols < 0:
            raise ShapeMismatchError(f"negative shape {rows}x{cols}")
        clean: dict[tuple[int, int], int] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeMismatchError(f"entry ({r},{c}) outside {rows}x{cols}")
            v = int(v)
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        if cols is None:
            cols = len(data[0]) if data else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ShapeMismatchError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(len(data), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, int]], rows: int) -> IntegerMatrix:
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def row_vectors(self) -> list[Vector]:
        out: list[Vector] = [{} for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def column_vectors(self) -> list[Vector]:
        out: list[Vector] = [{} for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return out

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        right = other.row_vectors()
        acc: dict[tuple[int, int], int] = {}
        for (i, k), a in self._entries.items():
            for j, b in right[k].items():
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def apply(self, v: Mapping[int, int]) -> Vector:
        """M·v for a sparse column vector v."""
        out: Vector = {}
        cols = self.column_vectors()
        for c, x in v.items():
            if x:
                for r, a in cols[c].items():
                    out[r] = out.get(r, 0) + a * x
        return {r: x for r, x in out.items() if x}

    def _combine(self, other: IntegerMatrix, sign: int) -> IntegerMatrix:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shape {self.shape} vs {other.shape}")
        acc = dict(self._entries)
        for key, v in other._entries.items():
            acc[key] = acc.get(key, 0) + sign * v
        return IntegerMatrix(self.rows, self.cols, acc)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        return self._combine(other, -1)

    def __neg__(self) -> IntegerMatrix:
        return self * -1

    def __mul__(self, k: int) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, {key: k * v for key, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    __hash__ = None  # type: ignore[assignment]

    def reduce(self, ring: Ring) -> IntegerMatrix:
        if ring.p is None:
            return self
        return IntegerMatrix(self.rows, self.cols, {k: v % ring.p for k, v in self._entries.items()})

    def is_zero(self, ring: Ring = ZZ) -> bool:
        return not self.reduce(ring)._entries

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.to_rows() if self.rows * self.cols <= 64 else f'nnz={self.nnz}'})"


def place(entries: dict[tuple[int, int], int], m: IntegerMatrix, r0: int, c0: int, sign: int = 1) -> None:
    """Accumulate sign·m into a block of a larger entry map at offset (r0, c0)."""
    for (r, c), v in m.entries.items():
        key = (r0 + r, c0 + c)
        entries[key] = entries.get(key, 0) + sign * v


# --- Smith normal form ---


class SmithNormalForm:
    """
    Dense Smith normal form by repeated division with the smallest pivot.

    compute() returns (D, left, right) with D = left · A · right and left,
    right unimodular. Intended for small matrices; invariants of large
    sparse matrices go through smith_normal_form().
    """

    def __init__(self, matrix: IntegerMatrix) -> None:
        self.a = matrix.to_rows()
        self.m, self.n = matrix.shape
        self.left = IntegerMatrix.identity(self.m).to_rows()
        self.right = IntegerMatrix.identity(self.n).to_rows()

    def compute(self) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
        a = self.a
        s = 0
        while s < min(self.m, self.n):
            row, col = self._min_abs_entry(s)
            if row is None:
                break
            self._swap_rows(s, row)
            self._swap_cols(s, col)
            for i in range(s + 1, self.m):
                if a[i][s]:
                    self._add_row(i, s, -(a[i][s] // a[s][s]))
            for j in range(s + 1, self.n):
                if a[s][j]:
                    self._add_col(j, s, -(a[s][j] // a[s][s]))
            if any(a[i][s] for i in range(s + 1, self.m)) or any(a[s][j] for j in range(s + 1, self.n)):
                continue
            bad = self._non_divisible_row(s)
            if bad is not None:
                self._add_row(s, bad, 1)
                continue
            if a[s][s] < 0:
                self._negate_row(s)
            s += 1
        return (
            IntegerMatrix.from_rows(a, self.n),
            IntegerMatrix.from_rows(self.left, self.m),
            IntegerMatrix.from_rows(self.right, self.n),
        )

    def _min_abs_entry(self, s: int) -> tuple[int | None, int | None]:
        best: tuple[int | None, int | None] = (None, None)
        best_val = None
        for i in range(s, self.m):
            for j in range(s, self.n):
                v = abs(self.a[i][j])
                if v and (best_val is None or v < best_val):
                    best, best_val = (i, j), v
        return best

    def _non_divisible_row(self, s: int) -> int | None:
        pivot = self.a[s][s]
        for i in range(s + 1, self.m):
            for j in range(s + 1, self.n):
                if self.a[i][j] % pivot:
                    return i
        return None

    def _swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.left[i], self.left[j] = self.left[j], self.left[i]

    def _swap_cols(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.right:
            row[i], row[j] = row[j], row[i]

    def _add_row(self, target: int, source: int, k: int) -> None:
        for mat in (self.a, self.left):
            mat[target] = [x + k * y for x, y in zip(mat[target], mat[source])]

    def _add_col(self, target: int, source: int, k: int) -> None:
        for mat in (self.a, self.right):
            for row in mat:
                row[target] += k * row[source]

    def _negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.left[i] = [-x for x in self.left[i]]


def _axpy(major: dict[int, Vector], minor: dict[int, Vector], target: int, source: int, k: int) -> None:
    """major[target] += k·major[source], mirrored into the transposed index."""
    if not k:
        return
    tgt = major.setdefault(target, {})
    for j, v in list(major[source].items()):
        nv = tgt.get(j, 0) + k * v
        if nv:
            tgt[j] = nv
            minor.setdefault(j, {})[target] = nv
        else:
            tgt.pop(j, None)
            minor[j].pop(target, None)
            if not minor[j]:
                del minor[j]
    if not tgt:
        del major[target]


def _sparse_diagonal(m: IntegerMatrix) -> list[int]:
    """Diagonalize by unimodular row/column operations; returns |pivots| (no chain yet)."""
    rows: dict[int, Vector] = {}
    cols: dict[int, Vector] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, {})[r] = v

    diagonal: list[int] = []
    while rows:
        r, c = _choose_pivot(rows)
        while True:
            pv = rows[r][c]
            clean = True
            for i in [i for i in cols[c] if i != r]:
                _axpy(rows, cols, i, r, -(cols[c][i] // pv))
                if i in cols.get(c, {}):
                    clean = False
            for j in [j for j in rows[r] if j != c]:
                _axpy(cols, rows, j, c, -(rows[r][j] // pv))
                if j in rows.get(r, {}):
                    clean = False
            if clean:
                break
            candidates = [(abs(v), r, j) for j, v in rows[r].items()]
            candidates += [(abs(v), i, c) for i, v in cols[c].items()]
            _, r, c = min(candidates)
        diagonal.append(abs(rows[r][c]))
        del rows[r]
        del cols[c]
    return diagonal


def _choose_pivot(rows: dict[int, Vector]) -> tuple[int, int]:
    best = None
    for r, row in rows.items():
        for c, v in row.items():
            if abs(v) == 1:
                return r, c
            if best is None or abs(v) < best[0]:
                best = (abs(v), r, c)
    assert best is not None
    return best[1], best[2]


def _divisibility_chain(values: Iterable[int]) -> list[int]:
    d = sorted(v for v in values if v)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """
    Smith invariants d_1 | d_2 | ... | d_r of m, padded with zeros to min(rows, cols).

    >>> smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    [1, 6]
    """
    chain = _divisibility_chain(_sparse_diagonal(m))
    return chain + [0] * (min(m.rows, m.cols) - len(chain))


def smith_normal_decomposition(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """(D, left, right) with D = left · m · right diagonal in Smith form."""
    return SmithNormalForm(m).compute()


# --- echelon forms, ranks, kernels ---


def _primitive(v: Vector) -> Vector:
    g = 0
    for x in v.values():
        g = gcd(g, x)
    if g > 1:
        return {k: x // g for k, x in v.items()}
    return v


def _echelon(vectors: Iterable[Mapping[int, int]], p: int | None) -> dict[int, Vector]:
    """Row echelon form keyed by pivot column; fraction-free over Z, monic over F_p."""
    pivots: dict[int, Vector] = {}
    for vec in vectors:
        r = {k: (x % p if p else x) for k, x in vec.items()}
        r = {k: x for k, x in r.items() if x}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(r[c], -1, p)
                    r = {k: x * inv % p for k, x in r.items()}
                else:
                    r = _primitive(r)
                pivots[c] = r
                break
            a, b = piv[c], r[c]
            if p:
                for k, x in piv.items():
                    nv = (r.get(k, 0) - b * x) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                nr: Vector = {k: fa * x for k, x in r.items()}
                for k, x in piv.items():
                    nv = nr.get(k, 0) - fb * x
                    if nv:
                        nr[k] = nv
                    else:
                        nr.pop(k, None)
                r = _primitive(nr)
    return pivots


def rank(m: IntegerMatrix, ring: Ring = ZZ) -> int:
    """Rank over Q (ring Z) or over F_p."""
    if m.nnz == 0:
        return 0
    vecs = m.row_vectors() if m.rows <= m.cols else m.column_vectors()
    return len(_echelon(vecs, ring.p))


def rank_of_vectors(vectors: Sequence[Mapping[int, int]], ring: Ring = ZZ) -> int:
    return len(_echelon(vectors, ring.p))


def hermite_normal_form(vectors: Sequence[Mapping[int, int]]) -> tuple[list[Vector], list[Vector]]:
    """
    Row Hermite normal form with transform: returns (H, U) with H = U·V, U unimodular.

    Rows of H are ordered by strictly increasing pivot column with positive
    pivots and reduced entries above each pivot; zero rows come last.
    """
    h = [dict(v) for v in vectors]
    u: list[Vector] = [{i: 1} for i in range(len(h))]

    def sub(i: int, j: int, q: int) -> None:
        for mat in (h, u):
            tgt = mat[i]
            for k, x in mat[j].items():
                nv = tgt.get(k, 0) - q * x
                if nv:
                    tgt[k] = nv
                else:
                    tgt.pop(k, None)

    columns = sorted({c for v in h for c in v})
    top = 0
    for col in columns:
        if top == len(h):
            break
        while True:
            live = [i for i in range(top, len(h)) if h[i].get(col)]
            if not live:
                break
            best = min(live, key=lambda i: abs(h[i][col]))
            h[top], h[best] = h[best], h[top]
            u[top], u[best] = u[best], u[top]
            done = True
            for i in range(top + 1, len(h)):
                if h[i].get(col):
                    sub(i, top, h[i][col] // h[top][col])
                    if h[i].get(col):
                        done = False
            if done:
                break
        if not h[top].get(col):
            continue
        if h[top][col] < 0:
            h[top] = {k: -x for k, x in h[top].items()}
            u[top] = {k: -x for k, x in u[top].items()}
        for i in range(top):
            if h[i].get(col):
                sub(i, top, h[i][col] // h[top][col])
        top += 1
    return h, u


def kernel_basis(m: IntegerMatrix, ring: Ring = ZZ) -> list[Vector]:
    """
    Basis of {v : m·v = 0} as sparse column-index vectors.

    Over Z this is a Z-basis of the kernel lattice (rows of the Hermite
    transform of m^T that annihilate); over F_p it comes from the reduced
    row echelon form.
    """
    if ring.p is None:
        h, u = hermite_normal_form(m.column_vectors())
        return [u[i] for i in range(len(h)) if not h[i]]
    p = ring.p
    piv = _echelon(m.row_vectors(), p)
    order = sorted(piv)
    for c in reversed(order):
        row = piv[c]
        for c2 in order:
            if c2 >= c:
                break
            other = piv[c2]
            f = other.get(c, 0)
            if f:
                for k, x in row.items():
                    nv = (other.get(k, 0) - f * x) % p
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
    basis = []
    for free in (c for c in range(m.cols) if c not in piv):
        v = {free: 1}
        for c, row in piv.items():
            x = row.get(free, 0)
            if x:
                v[c] = (-x) % p
        basis.append(v)
    return basis


class LatticeBasis:
    """
    A Z-basis of a sublattice, given by independent integer vectors, with
    exact coordinates for lattice members.
    """

    def __init__(self, vectors: Sequence[Mapping[int, int]]) -> None:
        self.size = len(vectors)
        h, u = hermite_normal_form(vectors)
        if any(not row for row in h):
            raise SolveError("lattice generators are linearly dependent")
        self._rows = [(min(row), row) for row in h]
        self._transform = u

    def coordinates(self, y: Mapping[int, int]) -> list[int]:
        """c with y = Σ c_k·vectors[k]; SolveError if y is not in the lattice."""
        residual = {k: x for k, x in y.items() if x}
        coeff_h = [0] * self.size
        for idx, (col, row) in enumerate(self._rows):
            v = residual.get(col, 0)
            if not v:
                continue
            q, rem = divmod(v, row[col])
            if rem:
                raise SolveError(f"entry {v} at column {col} not divisible by pivot {row[col]}")
            coeff_h[idx] = q
            for k, x in row.items():
                nv = residual.get(k, 0) - q * x
                if nv:
                    residual[k] = nv
                else:
                    residual.pop(k, None)
        if residual:
            raise SolveError("vector lies outside the lattice span")
        out = [0] * self.size
        for idx, q in enumerate(coeff_h):
            if q:
                for k, x in self._transform[idx].items():
                    out[k] += q * x
        return out


# --- complexes ---


@dataclass(frozen=True)
class HomologyGroup:
    """
    Canonical form of a homology group: Z^free ⊕ ⊕ Z/d_i over Z, or a vector
    space of dimension free_rank over F_p.
    """

    ring: Ring
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        inv = self.invariant_factors
        if any(x <= 1 for x in inv) or any(b % a for a, b in zip(inv, inv[1:])):
            raise MalformedComplexError(f"not an invariant factor chain: {inv}")

    @property
    def dimension(self) -> int:
        return self.free_rank

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def canonical(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.invariant_factors)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.ring.is_field:
            return f"k^{self.free_rank}" if self.free_rank > 1 else "k"
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts)


@dataclass(frozen=True)
class ChainComplex:
    """
    Finite complex of free modules in degrees lo..hi with labeled bases;
    diffs[n] is the matrix of term(n) -> term(n-1).
    """

    ring: Ring
    lo: int
    hi: int
    labels: Mapping[int, tuple[Hashable, ...]]
    diffs: Mapping[int, IntegerMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for n, m in self.diffs.items():
            if m.shape != (self.rank(n - 1), self.rank(n)):
                raise MalformedComplexError(
                    f"diff({n}) has shape {m.shape}, terms have ranks {self.rank(n - 1)},{self.rank(n)}"
                )

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def term(self, n: int) -> tuple[Hashable, ...]:
        return self.labels.get(n, ()) if self.lo <= n <= self.hi else ()

    def rank(self, n: int) -> int:
        return len(self.term(n))

    def diff(self, n: int) -> IntegerMatrix:
        m = self.diffs.get(n) if self.lo <= n <= self.hi else None
        return m if m is not None else IntegerMatrix.zeros(self.rank(n - 1), self.rank(n))

    def with_ring(self, ring: Ring) -> ChainComplex:
        return replace(self, ring=ring)

    def shifted(self, s: int) -> ChainComplex:
        """C[s]: degree n moves to n+s, differentials negated for odd s."""
        sign = -1 if s % 2 else 1
        return ChainComplex(
            ring=self.ring,
            lo=self.lo + s,
            hi=self.hi + s,
            labels={n + s: lab for n, lab in self.labels.items()},
            diffs={n + s: m * sign for n, m in self.diffs.items()},
        )

    def ranks(self) -> dict[int, int]:
        return {n: self.rank(n) for n in self.degrees}


def validate_complex(c: ChainComplex) -> bool:
    """True iff every composite diff(n-1)∘diff(n) vanishes over c.ring."""
    for n in range(c.lo + 1, c.hi + 1):
        if not (c.diff(n - 1) @ c.diff(n)).is_zero(c.ring):
            return False
    return True


def _check_square(c: ChainComplex, n: int) -> None:
    if not (c.diff(n) @ c.diff(n + 1)).is_zero(c.ring):
        raise MalformedComplexError(f"d∘d != 0 at degree {n}")


def _group(ring: Ring, dim: int, d_out: IntegerMatrix, d_in: IntegerMatrix) -> HomologyGroup:
    r_out = rank(d_out, ring)
    if ring.is_field:
        return HomologyGroup(ring, dim - r_out - rank(d_in, ring))
    snf = smith_normal_form(d_in)
    r_in = sum(1 for x in snf if x)
    return HomologyGroup(ring, dim - r_out - r_in, tuple(x for x in snf if x > 1))


def homology(c: ChainComplex, n: int) -> HomologyGroup:
    """H_n(C): free rank and invariant factors over Z, dimension over F_p."""
    if c.rank(n) == 0:
        return HomologyGroup(c.ring)
    _check_square(c, n)
    return _group(c.ring, c.rank(n), c.diff(n), c.diff(n + 1))


def homology_table(c: ChainComplex) -> dict[int, HomologyGroup]:
    """Homology in every degree of the complex."""
    if not validate_complex(c):
        raise MalformedComplexError("d∘d != 0")
    return {n: homology(c, n) for n in c.degrees}


def is_acyclic(c: ChainComplex, degrees: Iterable[int] | None = None) -> bool:
    degrees = c.degrees if degrees is None else degrees
    return all(homology(c, n).is_zero for n in degrees)


def complex_to_dict(c: ChainComplex) -> ComplexOut:
    """Debug dump: {"degrees": [lo, hi], "terms": {n: rank}, "diffs": {n: rows}}."""
    return {
        "ring": str(c.ring),
        "degrees": [c.lo, c.hi],
        "terms": {str(n): c.rank(n) for n in c.degrees},
        "diffs": {str(n): c.diff(n).to_rows() for n in sorted(c.diffs)},
    }


@dataclass(frozen=True)
class ChainMap:
    """
    Degree-s map f: source -> target with blocks(n): source_n -> target_{n+s},
    subject to target.d ∘ f = (-1)^s f ∘ source.d.
    """

    source: ChainComplex
    target: ChainComplex
    shift: int
    blocks: Mapping[int, IntegerMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for n, m in self.blocks.items():
            if m.shape != (self.target.rank(n + self.shift), self.source.rank(n)):
                raise ShapeMismatchError(
                    f"block({n}) has shape {m.shape}, expected "
                    f"{(self.target.rank(n + self.shift), self.source.rank(n))}"
                )

    @property
    def ring(self) -> Ring:
        return self.target.ring

    def block(self, n: int) -> IntegerMatrix:
        m = self.blocks.get(n)
        if m is None:
            return IntegerMatrix.zeros(self.target.rank(n + self.shift), self.source.rank(n))
        return m

    def violations(self) -> list[str]:
        """Degrees where the chain map identity fails over the target ring."""
        sign = -1 if self.shift % 2 else 1
        bad = []
        lo = min(self.source.lo, self.target.lo - self.shift)
        hi = max(self.source.hi, self.target.hi - self.shift)
        for n in range(lo, hi + 2):
            lhs = self.target.diff(n + self.shift) @ self.block(n)
            rhs = self.block(n - 1) @ self.source.diff(n)
            if not (lhs - rhs * sign).is_zero(self.ring):
                bad.append(f"chain map identity fails at degree {n}")
        return bad

    def is_chain_map(self) -> bool:
        return not self.violations()


def identity_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, 0, {n: IntegerMatrix.identity(c.rank(n)) for n in c.degrees})


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g∘f, of degree f.shift + g.shift."""
    blocks = {n: g.block(n + f.shift) @ f.block(n) for n in f.source.degrees}
    return ChainMap(f.source, g.target, f.shift + g.shift, blocks)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """
    Cone_n = source_{n-1} ⊕ target_{n+s} with d(c, y) = (-d c, f c + (-1)^s d y).

    f is a quasi-isomorphism exactly when the cone is acyclic.
    """
    violations = f.violations()
    if violations:
        raise ShapeMismatchError("mapping cone of a non-chain map: " + "; ".join(violations))
    s = f.shift
    sign = -1 if s % 2 else 1
    src, tgt = f.source, f.target
    lo = min(src.lo + 1, tgt.lo - s)
    hi = max(src.hi + 1, tgt.hi - s)
    labels = {
        n: tuple(("src", x) for x in src.term(n - 1)) + tuple(("tgt", y) for y in tgt.term(n + s))
        for n in range(lo, hi + 1)
    }
    diffs = {}
    for n in range(lo + 1, hi + 1):
        entries: dict[tuple[int, int], int] = {}
        rows_src = src.rank(n - 2)
        cols_src = src.rank(n - 1)
        place(entries, src.diff(n - 1), 0, 0, -1)
        place(entries, f.block(n - 1), rows_src, 0)
        place(entries, tgt.diff(n + s), rows_src, cols_src, sign)
        diffs[n] = IntegerMatrix(len(labels[n - 1]), len(labels[n]), entries)
    return ChainComplex(f.ring, lo, hi, labels, diffs)
