"""
Generating functions for Ext dimensions between hooks and two-row shapes.

    A(t,u)   = Π_{i≥1} (1 + t u^{p^i}) / (1 - t² u^{p^i})
    E_k(t,u) = Σ_{i≥0, k_i≠p-1} (u^{k̄(i-1)} + t u^{k̄(i)}) · A(t, u^{p^i})

All series are truncated to t^0..t^{t_max} and u^0..u^{u_max}.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache

from schurext.combinat import Partition, kbar, p_digits, p_valuation
from schurext.config import get_settings
from schurext.errors import InvariantError, PreconditionError, ShapeMismatchError
from schurext.exactlin import Ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BiPoly:
    """Truncated power series in t and u with nonnegative integer coefficients."""

    t_max: int
    u_max: int
    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), c in self.coeffs.items():
            if c < 0:
                raise InvariantError(f"negative coefficient {c} at t^{i} u^{j}")
            if c and 0 <= i <= self.t_max and 0 <= j <= self.u_max:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def one(cls, t_max: int, u_max: int) -> BiPoly:
        return cls(t_max, u_max, {(0, 0): 1})

    @classmethod
    def monomial(cls, t_max: int, u_max: int, i: int, j: int, c: int = 1) -> BiPoly:
        return cls(t_max, u_max, {(i, j): c})

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def u_coefficient(self, j: int) -> list[int]:
        """Coefficients of u^j as a polynomial in t, constant term first, trailing zeros dropped."""
        out = [self.coefficient(i, j) for i in range(self.t_max + 1)]
        while out and not out[-1]:
            out.pop()
        return out

    def __add__(self, other: BiPoly) -> BiPoly:
        t_max, u_max = min(self.t_max, other.t_max), min(self.u_max, other.u_max)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(t_max, u_max, out)

    def __mul__(self, other: BiPoly) -> BiPoly:
        t_max, u_max = min(self.t_max, other.t_max), min(self.u_max, other.u_max)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= t_max and j <= u_max:
                    out[(i, j)] = out.get((i, j), 0) + c1 * c2
        return BiPoly(t_max, u_max, out)

    def shift(self, i: int, j: int) -> BiPoly:
        """Multiply by t^i u^j."""
        return BiPoly(self.t_max, self.u_max, {(a + i, b + j): c for (a, b), c in self.coeffs.items()})

    def substitute_u(self, q: int) -> BiPoly:
        """u ↦ u^q; the result keeps this series' window."""
        return BiPoly(self.t_max, self.u_max, {(a, b * q): c for (a, b), c in self.coeffs.items()})

    def restrict(self, t_max: int, u_max: int) -> BiPoly:
        return BiPoly(min(t_max, self.t_max), min(u_max, self.u_max), self.coeffs)

    def terms(self) -> list[tuple[int, int, int]]:
        """(i, j, c) sorted by u-degree, then t-degree."""
        return sorted(((i, j, c) for (i, j), c in self.coeffs.items()), key=lambda x: (x[1], x[0]))

    def to_dict(self) -> dict:
        return {"tmax": self.t_max, "umax": self.u_max, "coeffs": [list(x) for x in self.terms()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> BiPoly:
        return cls(data["tmax"], data["umax"], {(i, j): c for i, j, c in data["coeffs"]})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c} * t^{i} * u^{j}" for i, j, c in self.terms())


def _window(t_max: int | None, u_max: int | None) -> tuple[int, int]:
    settings = get_settings()
    t_max = settings.t_max if t_max is None else t_max
    u_max = settings.u_max if u_max is None else u_max
    if t_max < 0 or u_max < 0:
        raise PreconditionError("truncation bounds must be nonnegative")
    return t_max, u_max


def _check_prime(p: int) -> None:
    Ring(p)


@lru_cache(maxsize=1024)
def _a_scaled(p: int, scale: int, t_max: int, u_max: int) -> BiPoly:
    """A(t, u^scale)."""
    result = BiPoly.one(t_max, u_max)
    q = scale * p
    while q <= u_max:
        geometric = {(2 * j, j * q): 1 for j in range(u_max // q + 1)}
        factor = BiPoly(t_max, u_max, {(0, 0): 1, (1, q): 1}) * BiPoly(t_max, u_max, geometric)
        result = result * factor
        q *= p
    return result


def a_series(p: int, t_max: int | None = None, u_max: int | None = None) -> BiPoly:
    """
    A(t,u) truncated to the window.

    >>> a_series(2, 1, 8).terms()
    [(0, 0, 1), (1, 2, 1), (1, 4, 1), (1, 8, 1)]
    """
    _check_prime(p)
    t_max, u_max = _window(t_max, u_max)
    return _a_scaled(p, 1, t_max, u_max)


def _e_closed(k: int, p: int, t_max: int, u_max: int) -> BiPoly:
    total = BiPoly(t_max, u_max)
    digits_k = len(p_digits(k, p))
    i = 0
    while True:
        low = kbar(k, i - 1, p)
        if i >= digits_k and low > u_max:
            break
        if p_digits(k, p, i + 1)[i] != p - 1:
            head = BiPoly(t_max, u_max, {(0, low): 1, (1, kbar(k, i, p)): 1})
            total = total + head * _a_scaled(p, p**i, t_max, u_max)
        i += 1
    return total


@lru_cache(maxsize=4096)
def _e_recursive(k: int, p: int, t_max: int, u_max: int) -> BiPoly:
    l, k0 = divmod(k, p)
    inner = _e_recursive(l, p, t_max, u_max // p) if (l, u_max // p) != (k, u_max) else None
    if inner is None:
        # E_0 in the window u^0: the u^{p-1} part is truncated away
        return BiPoly.one(t_max, u_max)
    lifted = BiPoly(t_max, u_max, inner.coeffs).substitute_u(p)
    if k0 == p - 1:
        return lifted
    gap = p - 1 - k0
    correction = BiPoly(t_max, u_max, {(0, 0): 1, (1, gap): 1}) * _a_scaled(p, 1, t_max, u_max)
    return lifted.shift(0, gap) + correction


def e_series(
    k: int, p: int, t_max: int | None = None, u_max: int | None = None, method: str = "closed"
) -> BiPoly:
    """E_k(t,u) by the closed sum or by the p-adic recursion."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    _check_prime(p)
    t_max, u_max = _window(t_max, u_max)
    if method == "closed":
        return _e_closed(k, p, t_max, u_max)
    if method == "recursive":
        return _e_recursive(k, p, t_max, u_max)
    raise PreconditionError(f"unknown method {method!r}")


def e_polynomial(m: int, n: int, p: int, t_max: int | None = None) -> list[int]:
    """E_{m,n}(t) = [u^n] E_{m-n}(t,u), constant term first."""
    if not m >= n >= 0:
        raise PreconditionError("need m ≥ n ≥ 0")
    t_max, _ = _window(t_max, None)
    return e_series(m - n, p, t_max, n).u_coefficient(n)


def h_polynomial(a: int, b: int, p: int, t_max: int | None = None) -> list[int]:
    """
    H_{a,b}(t) = Σ_j dim H^j_st(S_{(a,1^b)}) t^j = t^{b+1} E_{a+b-1, a-1}(t).

    >>> h_polynomial(2, 0, 2)
    [0, 1, 1]
    """
    if a < 1 or b < 0:
        raise PreconditionError("need a ≥ 1 and b ≥ 0")
    t_max, _ = _window(t_max, None)
    e = e_series(b, p, max(t_max - b - 1, 0), a - 1).u_coefficient(a - 1)
    if not e:
        return []
    return [0] * (b + 1) + e


def n_series(b: int, p: int, t_max: int | None = None, u_max: int | None = None) -> BiPoly:
    """N_b(t,u) = Σ_{a≥1} H_{a,b}(t)/t^b · u^{a+b}."""
    t_max, u_max = _window(t_max, u_max)
    coeffs: dict[tuple[int, int], int] = {}
    for a in range(1, u_max - b + 1):
        for j, c in enumerate(h_polynomial(a, b, p, t_max + b)):
            if c:
                coeffs[(j - b, a + b)] = c
    return BiPoly(t_max, u_max, coeffs)


def ext_dim_formula(case: str, lam: Partition, mu: Partition, j: int, p: int) -> int:
    """dim Ext^j(S_λ, S_μ) over a field of characteristic p, read off E_k."""
    if lam.size != mu.size:
        raise ShapeMismatchError(f"|{lam}| != |{mu}|")
    if case == "two_row":
        if lam.length > 2 or mu.length > 2:
            raise ShapeMismatchError("two_row needs partitions with at most two rows")
        (A, B), (a, b) = lam.padded(2), mu.padded(2)
        return _two_row_dim(A, a, b, j, p)
    if case == "two_column":
        if lam[0] > 2 or mu[0] > 2:
            raise ShapeMismatchError("two_column needs partitions with at most two columns")
        (a, b), (A, B) = lam.conjugate().padded(2), mu.conjugate().padded(2)
        return _two_row_dim(A, a, b, j, p)
    if case == "hook":
        if not (lam.is_hook and mu.is_hook):
            raise ShapeMismatchError("hook case needs hook partitions")
        (A, B), (a, b) = lam.hook_params(), mu.hook_params()
        if A < a or A - a - j < 0:
            return 0
        return e_series(a + B - 1, p, A - a - j, A - a).coefficient(A - a - j, A - a)
    raise PreconditionError(f"unknown case {case!r}")


def _two_row_dim(A: int, a: int, b: int, j: int, p: int) -> int:
    if A < a or j < 0:
        return 0
    return e_series(a - b, p, j, A - a).coefficient(j, A - a)


def hook_nonvanishing(n: int, m: int, p: int) -> bool:
    """
    H_{n+1,m-n}(t) ≠ 0 iff pq | n or pq | m+1, with q the largest power of p dividing m-n+1.

    Agrees with the series for every m ≥ n ≥ 0, including m = n.
    """
    if not m >= n >= 0:
        raise PreconditionError("need m ≥ n ≥ 0")
    _check_prime(p)
    pq = p ** (p_valuation(m - n + 1, p) + 1)
    return n % pq == 0 or (m + 1) % pq == 0


def gl2_same_block(lam: Partition, mu: Partition, p: int) -> bool:
    """Whether (A,B) and (a,b) lie in one block of polynomial GL_2-representations."""
    if lam.size != mu.size:
        raise ShapeMismatchError(f"|{lam}| != |{mu}|")
    if lam.length > 2 or mu.length > 2:
        raise ShapeMismatchError("blocks are only decided for two-row partitions")
    _check_prime(p)
    (A, B), (a, b) = lam.padded(2), mu.padded(2)
    if A < a:
        raise PreconditionError(f"need λ_1 ≥ μ_1, got {A} < {a}")
    r = p_valuation(a - b + 1, p)
    if p_valuation(A - B + 1, p) != r:
        return False
    pq = p ** (r + 1)
    rows_agree = (A - a) % pq == 0 and (B - b) % pq == 0
    crossed = (A - 1 - (b - 2)) % pq == 0 and (B - 2 - (a - 1)) % pq == 0
    return rows_agree or crossed
