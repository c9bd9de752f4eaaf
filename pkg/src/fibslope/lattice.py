"""Picard lattices of blow-ups of the projective plane and Hirzebruch surfaces.

The lattice of a surface obtained by blowing up points on P^2 (or on F_n) is
the orthogonal sum of the base lattice and one <-1> summand per exceptional
class.  The basis is always ordered

    [base classes..., simple-point classes p1..pl, node classes q1..qm]

so that classes can be written the way they appear in hand computations,
e.g. the fiber of a nodal plane pencil is ``[d, -1, ..., -1, -2, ..., -2]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import as_fraction, format_rational

ORIGINS = ("simple", "node", "synthetic")


class SurfaceMismatchError(ValueError):
    """Raised when classes living on different surfaces are combined."""


@dataclass(frozen=True)
class BaseSurface:
    """Either the projective plane or the Hirzebruch surface F_n.

    F_n uses the basis (G0, F) with G0^2 = -n, F^2 = 0 and G0.F = 1.  For
    n = 0 this is the bidegree basis of P^1 x P^1, where a class (a, b)
    pairs with (c, d) to ad + bc.
    """

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("P2", "F"):
            raise ValueError(f"unknown base surface kind {self.kind!r}")
        if self.kind == "F" and self.n < 0:
            raise ValueError("Hirzebruch index must be nonnegative")
        if self.kind == "P2" and self.n != 0:
            raise ValueError("the projective plane takes no index")

    @classmethod
    def plane(cls) -> BaseSurface:
        return cls("P2")

    @classmethod
    def hirzebruch(cls, n: int) -> BaseSurface:
        return cls("F", n)

    @property
    def name(self) -> str:
        return "P2" if self.kind == "P2" else f"F{self.n}"

    @property
    def rank(self) -> int:
        return 1 if self.kind == "P2" else 2

    @property
    def labels(self) -> tuple[str, ...]:
        return ("H",) if self.kind == "P2" else ("G0", "F")

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == "P2":
            return ((1,),)
        return ((-self.n, 1), (1, 0))

    @property
    def canonical(self) -> tuple[int, ...]:
        if self.kind == "P2":
            return (-3,)
        return (-2, -(self.n + 2))

    @property
    def canonical_square(self) -> int:
        return 9 if self.kind == "P2" else 8


@dataclass(frozen=True)
class ExceptionalLabel:
    name: str
    origin: str

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise ValueError(f"unknown exceptional origin {self.origin!r}")


@dataclass(frozen=True)
class SurfaceModel:
    base: BaseSurface
    exceptional: tuple[ExceptionalLabel, ...] = ()

    def __post_init__(self):
        # simple-point classes come before node classes; synthetic ones last
        order = [ORIGINS.index(e.origin) for e in self.exceptional]
        if order != sorted(order):
            raise ValueError("exceptional classes must be ordered simple, node, synthetic")
        names = [e.name for e in self.exceptional]
        if len(set(names)) != len(names):
            raise ValueError("duplicate exceptional labels")

    @property
    def rank(self) -> int:
        return self.base.rank + len(self.exceptional)

    @property
    def basis(self) -> tuple[str, ...]:
        return self.base.labels + tuple(e.name for e in self.exceptional)

    def count(self, origin: str) -> int:
        return sum(1 for e in self.exceptional if e.origin == origin)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def gram_matrix(self) -> list[list[int]]:
        n, r = self.rank, self.base.rank
        g = [[0] * n for _ in range(n)]
        for i in range(r):
            for j in range(r):
                g[i][j] = self.base.gram[i][j]
        for i in range(r, n):
            g[i][i] = -1
        return g

    def divisor(self, coefficients: Iterable) -> DivisorClass:
        return DivisorClass(self, tuple(as_fraction(c) for c in coefficients))

    def zero(self) -> DivisorClass:
        return self.divisor([0] * self.rank)

    def basis_class(self, label: str) -> DivisorClass:
        coeffs = [0] * self.rank
        coeffs[self.index(label)] = 1
        return self.divisor(coeffs)

    def to_json(self) -> dict:
        return {
            "base": self.base.name,
            "rank": self.rank,
            "basis": list(self.basis),
            "origins": [e.origin for e in self.exceptional],
        }


def build_surface(base: BaseSurface, simple_count: int, node_count: int) -> SurfaceModel:
    """Blow up ``simple_count`` simple base points and ``node_count`` nodes."""
    if simple_count < 0 or node_count < 0:
        raise ValueError("blow-up counts must be nonnegative")
    labels = [ExceptionalLabel(f"p{i}", "simple") for i in range(1, simple_count + 1)]
    labels += [ExceptionalLabel(f"q{j}", "node") for j in range(1, node_count + 1)]
    return SurfaceModel(base, tuple(labels))


@dataclass(frozen=True, eq=False)
class DivisorClass:
    """An exact rational class in the ordered basis of ``surface``."""

    surface: SurfaceModel
    coefficients: tuple[Fraction, ...]
    _support: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.coefficients) != self.surface.rank:
            raise SurfaceMismatchError(
                f"class has {len(self.coefficients)} coefficients, surface rank is {self.surface.rank}"
            )
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "_support", tuple(i for i, c in enumerate(coeffs) if c))

    def _check(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected a DivisorClass, got {type(other).__name__}")
        if other.surface is not self.surface and other.surface != self.surface:
            raise SurfaceMismatchError("classes belong to different surfaces")

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.surface == other.surface and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.surface, self.coefficients))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

    def __mul__(self, scalar) -> DivisorClass:
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        s = as_fraction(scalar)
        return DivisorClass(self.surface, tuple(s * a for a in self.coefficients))

    __rmul__ = __mul__

    def __getitem__(self, label: str | int) -> Fraction:
        if isinstance(label, str):
            label = self.surface.index(label)
        return self.coefficients[label]

    def dot(self, other: DivisorClass) -> Fraction:
        return pair(self, other)

    def square(self) -> Fraction:
        return pair(self, self)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    @property
    def support(self) -> tuple[int, ...]:
        return self._support

    def nonnegative_in_basis(self) -> bool:
        """True when every coefficient is >= 0.

        Every basis element is effective (a line or a ruling, and total
        transforms of exceptional curves), so such a class is effective.
        """
        return all(c >= 0 for c in self.coefficients)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coefficients)
        return f"DivisorClass([{body}])"


def pair(d1: DivisorClass, d2: DivisorClass) -> Fraction:
    """Intersection number of two classes on the same surface."""
    d1._check(d2)
    base_rank = d1.surface.base.rank
    a, b = d1.coefficients, d2.coefficients
    gram = d1.surface.base.gram
    total = Fraction(0)
    for i in range(base_rank):
        if a[i]:
            for j in range(base_rank):
                if gram[i][j] and b[j]:
                    total += gram[i][j] * a[i] * b[j]
    small, other = (d1, b) if len(d1.support) <= len(d2.support) else (d2, a)
    for i in small.support:
        if i >= base_rank and other[i]:
            total -= small.coefficients[i] * other[i]
    return total


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    """K_S: the base canonical class plus each exceptional class once."""
    coeffs = list(surface.base.canonical) + [1] * len(surface.exceptional)
    return surface.divisor(coeffs)


def arithmetic_genus(d: DivisorClass) -> Fraction:
    """1 + (D^2 + D.K)/2.  A non-integer value means D is not a curve class."""
    k = canonical_class(d.surface)
    return 1 + (d.square() + pair(d, k)) / 2


def chi(d: DivisorClass) -> Fraction:
    """Riemann-Roch on a rational surface: chi(O(D)) = 1 + D.(D - K)/2."""
    k = canonical_class(d.surface)
    return 1 + pair(d, d - k) / 2


def combination(surface: SurfaceModel, terms: Sequence[tuple[Fraction | int, DivisorClass]]) -> DivisorClass:
    """Sum of ``coefficient * class`` over ``terms``."""
    total = [Fraction(0)] * surface.rank
    for coeff, cls in terms:
        if cls.surface != surface:
            raise SurfaceMismatchError("term lives on another surface")
        c = as_fraction(coeff)
        for i in cls.support:
            total[i] += c * cls.coefficients[i]
    return surface.divisor(total)
