"""
Functor expressions: tensor products of D(a), L(a), S(a), W(λ) and formal
Schur(λ) atoms, with the CLI grammar "D(2)*L(3)", "W(2,2)".
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from schurext.combinat import Partition
from schurext.errors import ParseError, PreconditionError

KINDS = ("D", "L", "S", "W", "Schur")
_DUAL = {"D": "S", "S": "D", "L": "L", "W": "Schur", "Schur": "W"}
_ATOM = re.compile(r"^\s*(Schur|D|L|S|W)\s*\(\s*([^()]*)\s*\)\s*$")


@dataclass(frozen=True)
class Atom:
    """One tensor factor; D/L/S atoms carry the one-row shape (a)."""

    kind: str
    shape: Partition

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown atom kind {self.kind!r}")
        if self.kind in ("D", "L", "S") and self.shape.length > 1:
            raise PreconditionError(f"{self.kind} atoms take a single degree")

    @property
    def degree(self) -> int:
        return self.shape.size

    def __str__(self) -> str:
        arg = self.shape.compact() if self.shape.parts else "0"
        return f"{self.kind}({arg})"


@dataclass(frozen=True)
class FunctorExpr:
    """Ordered tensor product of atoms."""

    atoms: tuple[Atom, ...]

    @property
    def degree(self) -> int:
        return sum(a.degree for a in self.atoms)

    @property
    def has_schur(self) -> bool:
        return any(a.kind == "Schur" for a in self.atoms)

    def __mul__(self, other: FunctorExpr) -> FunctorExpr:
        return FunctorExpr(self.atoms + other.atoms)

    def __str__(self) -> str:
        return "*".join(map(str, self.atoms)) or "k"


def _single(kind: str, shape: Partition) -> FunctorExpr:
    return FunctorExpr((Atom(kind, shape),))


def Divided(a: int) -> FunctorExpr:
    return _single("D", Partition((a,)))


def Exterior(a: int) -> FunctorExpr:
    return _single("L", Partition((a,)))


def Symmetric(a: int) -> FunctorExpr:
    return _single("S", Partition((a,)))


def Weyl(shape: Partition) -> FunctorExpr:
    return _single("W", shape)


def Schur(shape: Partition) -> FunctorExpr:
    return _single("Schur", shape)


def tensor(*factors: FunctorExpr) -> FunctorExpr:
    atoms: tuple[Atom, ...] = ()
    for f in factors:
        atoms += f.atoms
    return FunctorExpr(atoms)


def parse_functor(text: str) -> FunctorExpr:
    """Parse "D(2)*L(3)" or "W(5,1^3)"."""
    atoms = []
    for chunk in text.split("*"):
        m = _ATOM.match(chunk)
        if not m:
            raise ParseError(f"bad functor atom {chunk!r} in {text!r}")
        kind, arg = m.group(1), m.group(2)
        shape = Partition() if arg.strip() == "0" else Partition.parse(arg)
        if kind in ("D", "L", "S") and shape.length > 1:
            raise ParseError(f"{kind} takes one degree, got {arg!r}")
        atoms.append(Atom(kind, shape))
    return FunctorExpr(tuple(atoms))


def kuhn_dual(f: FunctorExpr) -> FunctorExpr:
    """Atom-wise Kuhn dual: D ↔ S, W ↔ Schur, Λ self-dual."""
    return FunctorExpr(tuple(Atom(_DUAL[a.kind], a.shape) for a in f.atoms))
