"""
Partitions, weights, horizontal strips, p-adic digits and ordered set
partitions: the indexing data shared by every other module.

Canonical orders are fixed here (weights lexicographically decreasing,
tableaux by row-reading word) so that all matrices built downstream are
reproducible entry by entry.
"""
from __future__ import annotations

import logging
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from sympy import multiplicity
from sympy.ntheory import digits
from sympy.utilities.iterables import partitions as _sympy_partitions

from schurext.config import get_settings
from schurext.errors import GuardExceededError, ParseError, PreconditionError

logger = logging.getLogger(__name__)

Weight = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def check_degree(what: str, degree: int, kind: str = "combinat") -> None:
    """Raise GuardExceededError when degree is above the configured guard."""
    settings = get_settings()
    limit = settings.complex_guard if kind == "complex" else settings.combinat_guard
    if degree > limit:
        raise GuardExceededError(what, degree, limit)


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros are stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """
        Parse "a_1,a_2,..." with optional exponents: "2^3,1^2" is (2,2,2,1,1).
        """
        body = text.strip().strip("()[]")
        if not body:
            raise ParseError(f"empty partition {text!r}")
        parts: list[int] = []
        for token in body.split(","):
            m = _TOKEN.match(token)
            if not m:
                raise ParseError(f"bad partition token {token!r} in {text!r}")
            value, exp = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([value] * exp)
        parts = [x for x in parts if x]
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"parts of {text!r} are not weakly decreasing")
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    @property
    def is_hook(self) -> bool:
        return self.length <= 1 or self.parts[1] == 1

    def hook_params(self) -> tuple[int, int]:
        """(a, b) for the hook (a, 1^b)."""
        if not self.is_hook or not self.parts:
            raise PreconditionError(f"{self} is not a hook")
        return self.parts[0], self.length - 1

    @property
    def r(self) -> int:
        """|μ| − μ_1."""
        return self.size - self[0]

    def bar(self) -> Partition:
        """First row removed."""
        return Partition(self.parts[1:])

    def padded(self, n: int) -> tuple[int, ...]:
        if n < self.length:
            raise PreconditionError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def compact(self) -> str:
        """Exponent notation, e.g. "5,1^3"."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            out.append(str(self.parts[i]) if j - i == 1 else f"{self.parts[i]}^{j - i}")
            i = j
        return ",".join(out)


def hook(a: int, b: int) -> Partition:
    return Partition((a,) + (1,) * b)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of d, lexicographically decreasing."""
    if d == 0:
        return [Partition()]
    out = []
    for p in _sympy_partitions(d):
        parts: list[int] = []
        for k in sorted(p, reverse=True):
            parts.extend([k] * p[k])
        out.append(Partition(tuple(parts)))
    return sorted(out, reverse=True)


def append_ones(mu: Partition, q: int) -> Partition:
    return Partition(mu.parts + (1,) * q)


def pieri_strips(a: int, nu: Partition) -> list[Partition]:
    """
    All γ ⊇ ν with |γ/ν| = a a horizontal strip, lexicographically decreasing.

    >>> [str(g) for g in pieri_strips(4, Partition.of(1, 1))]
    ['5,1', '4,1,1']
    """
    if a < 0:
        raise PreconditionError("a must be nonnegative")
    old = nu.parts + (0,)
    out: list[Partition] = []

    def extend(i: int, left: int, acc: list[int]) -> None:
        if i == len(old):
            if left == 0:
                out.append(Partition(tuple(acc)))
            return
        upper = old[i] + left if i == 0 else min(old[i - 1], old[i] + left)
        for g in range(upper, old[i] - 1, -1):
            extend(i + 1, left - (g - old[i]), acc + [g])

    extend(0, a, [])
    return sorted(out, reverse=True)


def p_digits(k: int, p: int, count: int | None = None) -> list[int]:
    """Base-p digits k_0, k_1, ... (least significant first), zero-padded to count."""
    ds = digits(k, p)[1:][::-1]
    if count is not None:
        ds = (ds + [0] * count)[:count] if count >= len(ds) else ds
    return ds


def p_valuation(x: int, p: int) -> int:
    if x == 0:
        raise PreconditionError("valuation of zero")
    return int(multiplicity(p, abs(x)))


def kbar(k: int, i: int, p: int) -> int:
    """
    k̄(i) = Σ_{j=0}^{i} (p−1−k_j)·p^j, with k̄(−1) = 0.

    >>> [kbar(3, i, 2) for i in (-1, 1, 2, 3)]
    [0, 0, 4, 12]
    """
    if i < -1:
        raise PreconditionError("i must be at least -1")
    ds = p_digits(k, p, i + 1)
    return sum((p - 1 - ds[j]) * p**j for j in range(i + 1))


def enumerate_weights(
    d: int,
    n: int,
    full_support: bool = True,
    min_first: int = 0,
    *,
    exact_first: int | None = None,
    last_positive: bool = False,
) -> list[Weight]:
    """
    Weights of size d and length n, lexicographically decreasing.

    full_support forces all entries positive; min_first bounds d_1 from
    below; exact_first pins d_1; last_positive forces d_n > 0.
    """
    if n <= 0:
        return [()] if d == 0 and n == 0 else []
    low = 1 if full_support else 0
    out: list[Weight] = []

    def fill(pos: int, left: int, acc: tuple[int, ...]) -> None:
        if pos == n - 1:
            if left >= low and (not last_positive or left > 0):
                if pos > 0 or (left >= min_first and (exact_first is None or left == exact_first)):
                    out.append(acc + (left,))
            return
        hi = left - low * (n - 1 - pos)
        lo = low
        if pos == 0:
            lo = max(lo, min_first)
            if exact_first is not None:
                lo, hi = max(lo, exact_first), min(hi, exact_first)
        for x in range(hi, lo - 1, -1):
            fill(pos + 1, left - x, acc + (x,))

    fill(0, d, ())
    return out


def support(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i, x in enumerate(w) if x)


def is_full_support(w: Sequence[int]) -> bool:
    return all(x > 0 for x in w)


def semistandard_tableaux(shape: Partition, content: Sequence[int]) -> list[Tableau]:
    """
    Semistandard tableaux of the given shape and content, ordered by their
    row-reading word (rows top to bottom).
    """
    if shape.size != sum(content):
        return []
    target = shape.parts
    found: list[Tableau] = []

    def place(value: int, cur: tuple[int, ...], rows: tuple[tuple[int, ...], ...]) -> None:
        if value > len(content):
            if cur == target:
                found.append(rows)
            return
        count = content[value - 1]
        for new in _strips_inside(cur, target, count):
            grown = tuple(
                rows[i] + (value,) * (new[i] - cur[i]) for i in range(len(target))
            )
            place(value + 1, new, grown)

    place(1, (0,) * len(target), tuple(() for _ in target))
    return sorted(found, key=lambda t: tuple(x for row in t for x in row))


def _strips_inside(cur: tuple[int, ...], bound: tuple[int, ...], count: int) -> Iterator[tuple[int, ...]]:
    """Horizontal strips of size count added to cur, staying inside bound."""

    def go(i: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(cur):
            if left == 0:
                yield acc
            return
        cap = bound[i] if i == 0 else min(bound[i], cur[i - 1])
        for g in range(cur[i], min(cap, cur[i] + left) + 1):
            yield from go(i + 1, left - (g - cur[i]), acc + (g,))

    yield from go(0, count, ())


@lru_cache(maxsize=4096)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    return len(semistandard_tableaux(Partition(shape), content))


def kostka_number(shape: Partition, w: Sequence[int]) -> int:
    """Number of semistandard tableaux of the shape with content w."""
    if shape.size != sum(w):
        raise PreconditionError(f"|{shape}| != |{tuple(w)}|")
    check_degree("kostka_number", shape.size)
    return _kostka(shape.parts, tuple(w))


@dataclass(frozen=True)
class OrderedSetPartition:
    """Blocks I_1, ..., I_n of [N], each stored sorted; ordered by minima."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        flat = sorted(x for b in blocks for x in b)
        if any(not b for b in blocks) or flat != list(range(1, len(flat) + 1)):
            raise PreconditionError(f"not an ordered set partition of [N]: {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def minima(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    def block_of(self, x: int) -> int:
        """0-based index of the block containing x."""
        for k, b in enumerate(self.blocks):
            if x in b:
                return k
        raise PreconditionError(f"{x} not in [{self.size}]")

    def fits(self, d: Sequence[int]) -> bool:
        """Membership in Par(d̄; N): minima increasing and |I_k| ≤ d_k."""
        mins = self.minima
        return (
            len(d) == len(self.blocks)
            and all(a < b for a, b in zip(mins, mins[1:]))
            and all(len(b) <= x for b, x in zip(self.blocks, d))
        )

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def ordered_partitions(d: Sequence[int], N: int) -> list[OrderedSetPartition]:
    """
    Par(d̄; N): ordered set partitions of [N] into len(d̄) blocks with
    increasing minima and |I_k| ≤ d_k.

    >>> [str(I) for I in ordered_partitions((3, 1), 4)]
    ['({1,3,4},{2})', '({1,2,4},{3})', '({1,2,3},{4})']
    """
    n = len(d)
    if any(x <= 0 for x in d):
        raise PreconditionError(f"weight {tuple(d)} must have positive entries")
    if N < n:
        raise PreconditionError(f"N={N} smaller than n={n}")
    out: list[OrderedSetPartition] = []

    def assign(x: int, blocks: list[list[int]]) -> None:
        if x > N:
            if len(blocks) == n:
                out.append(OrderedSetPartition(tuple(tuple(b) for b in blocks)))
            return
        if N - x + 1 < n - len(blocks):
            return
        if len(blocks) < n:
            assign(x + 1, blocks + [[x]])
        for k, b in enumerate(blocks):
            if len(b) < d[k]:
                assign(x + 1, blocks[:k] + [b + [x]] + blocks[k + 1:])

    assign(1, [])
    return out
