"""Numerical invariants of a fibration f: S -> P^1 on a rational surface.

Notation: a = K_f^2 with K_f = K_S + 2C, b = g - 1.  All values are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .exact import format_rational
from .lattice import DivisorClass, pair
from .pencil import FibrationModel


def relative_canonical(model: FibrationModel) -> DivisorClass:
    return model.canonical + 2 * model.fiber


@dataclass(frozen=True)
class InvariantReport:
    a: int
    b: int
    g: int
    slope: Fraction
    l: int
    l_prime: int
    m: int
    K_T_squared: int
    sigma_lower_bound: Fraction
    six_b_margin: int
    semistable: bool = False
    non_isotrivial: bool = True

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = format_rational(value) if isinstance(value, Fraction) else value
        out["sigma_bound_conditional"] = not (self.semistable and self.non_isotrivial)
        return out


def numbers(a: int, b: int, l: int, l_prime: int = 0, m: int = 0, *, semistable: bool = False, non_isotrivial: bool = True) -> InvariantReport:
    """An InvariantReport from raw numbers, for models without a lattice."""
    if b < 1:
        raise ValueError("slope analysis needs g >= 2")
    g = b + 1
    return InvariantReport(
        a=a,
        b=b,
        g=g,
        slope=Fraction(a, g),
        l=l,
        l_prime=l_prime,
        m=m,
        K_T_squared=a - 8 * b + l,
        sigma_lower_bound=Fraction(a, 2 * b) + 2,
        six_b_margin=a - 6 * b,
        semistable=semistable,
        non_isotrivial=non_isotrivial,
    )


class IdentityError(AssertionError):
    pass


def invariants(model: FibrationModel) -> InvariantReport:
    """All invariants, with C^2 = 0, C.K_f = 2b and K_S^2 = a - 8b checked
    on the lattice."""
    g = model.genus
    if g < 2:
        raise ValueError(f"slope analysis needs g >= 2, fiber has genus {g}")
    kf = relative_canonical(model)
    a = kf.square()
    b = g - 1
    if model.fiber.square() != 0:
        raise IdentityError("C^2 != 0")
    if pair(model.fiber, kf) != 2 * b:
        raise IdentityError("C.K_f != 2b")
    if model.canonical.square() != a - 8 * b:
        raise IdentityError("K_S^2 != a - 8b")
    return numbers(
        int(a), b, model.l, model.l_prime, model.m,
        semistable=model.semistable, non_isotrivial=model.non_isotrivial,
    )


def closed_form_a(model: FibrationModel) -> int:
    """K_f^2 from the pencil numbers alone: 3d^2 - 12d + 9 - 5m on P^2 and
    8(a-1)(b-1) - l - 9m on P^1 x P^1, counting blown-up points."""
    pencil = model.pencil
    if pencil is None:
        raise ValueError("model has no pencil data")
    spec = pencil.spec
    l, m = spec.simple_points, spec.nodes
    if spec.base == "P2":
        d = spec.degree
        return 3 * d * d - 12 * d + 9 - 5 * m
    al, be = spec.degree
    return 8 * (al - 1) * (be - 1) - l - 9 * m


def h0_n_relative_canonical(report: InvariantReport, n: int) -> tuple[int, int]:
    """h^0(n K_f) = (n(n-1)a + 2bn)/2 + 1 and the rank b(2n-1) of f_* nK_f.

    Valid when K_f is big and nef.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b = report.a, report.b
    twice = n * (n - 1) * a + 2 * b * n
    return twice // 2 + 1, b * (2 * n - 1)


def sigma_lower_bound(report: InvariantReport) -> Fraction:
    """a/(2g - 2) + 2; the number of singular fibers of a semistable
    non-isotrivial fibration is strictly larger."""
    return report.sigma_lower_bound


def sigma_minimum(report: InvariantReport) -> int:
    """Smallest integer strictly above the bound."""
    bound = report.sigma_lower_bound
    return bound.numerator // bound.denominator + 1
