"""Slope inequalities for fibrations on rational surfaces, with their gates.

Each check returns a VerdictReport: whether the hypotheses are met, the exact
value of the quantity that the inequality says is nonnegative, and whether
it is.  A check whose hypotheses are met but whose inequality fails means the
input contradicts its own hypotheses (typically an asserted gonality bound
that is too optimistic); such reports carry a note saying so.

Items, identified by what they bound:

    a_ge_5b             a - 5b >= 0                   b >= 6, gonality >= 4
    adjoint2_square     4a - 24b + l >= 0             C + 2K effective
    adjoint2_chi        3a - 19b + l + 1 >= 0         g >= 11, gonality >= 5
    section_bound       5b/2 + 14 - l >= 0            g >= 11, gonality >= 5
    uniform_slope       a - (11b/2 - 5) >= 0          g >= 11, gonality >= 5
    adjoint3_nonempty   chi(C + 3K - N1) > 0          b >= 22, gonality >= 6
    adjoint3_square     9a - 60b + 4l + l' + m >= 0   C + 3K - N1 effective
    slope_polynomial    q(n) > 0 for integers n       semistable, non-isotrivial
    sqrt_genus_bound    a >= 6b + 4 - 4 sqrt(g)       11 <= g <= 49, gonality >= 5, K_T^2 < 0
    six_b_margin        a - 6b >= 0                   one of the sufficient conditions fires
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import format_rational
from .invariants import InvariantReport
from .pencil import GonalityBounds

MET = "Met"
NOT_MET = "NotMet"
CONDITIONAL = "ConditionalOnGonality"

ITEMS = (
    "a_ge_5b",
    "adjoint2_square",
    "adjoint2_chi",
    "section_bound",
    "uniform_slope",
    "adjoint3_nonempty",
    "adjoint3_square",
    "slope_polynomial",
    "sqrt_genus_bound",
    "six_b_margin",
)

POLY_RANGE = range(-10, 11)


def _json_value(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


@dataclass
class VerdictReport:
    item: str
    hypothesis_status: str
    evaluated_value: Fraction | None
    holds: bool | None
    formula_text: str
    details: dict = field(default_factory=dict)

    @property
    def gated(self) -> bool:
        return self.hypothesis_status in (MET, CONDITIONAL)

    @property
    def gated_failure(self) -> bool:
        return self.gated and self.holds is False

    def to_json(self) -> dict:
        return {
            "item": self.item,
            "hypothesis_status": self.hypothesis_status,
            "evaluated_value": None if self.evaluated_value is None else format_rational(self.evaluated_value),
            "holds": self.holds,
            "formula_text": self.formula_text,
            "details": _json_value(self.details),
        }


@dataclass
class SlopeContext:
    """Everything the checks need besides the invariants themselves.

    ``*_effective_by`` records how effectivity of C + 2K and C + 3K - N1 was
    granted when it was not derived from genus and gonality: either
    ``"explicit class"`` (nonnegative coefficients in the basis) or
    ``"user assertion"``.
    """

    invariants: InvariantReport
    gonality: GonalityBounds
    relatively_minimal: bool = True
    adjoint2_effective_by: str | None = None
    adjoint3_effective_by: str | None = None
    adjoint3_chi: Fraction | None = None


def _status(ctx: SlopeContext, conditions: list[tuple[str, bool]], gonality_needed: int | None) -> tuple[str, list[str]]:
    reasons = []
    conditions = [("relatively minimal", ctx.relatively_minimal)] + conditions
    failed = [name for name, ok in conditions if not ok]
    if failed:
        return NOT_MET, [f"fails: {name}" for name in failed]
    reasons.extend(f"ok: {name}" for name, _ in conditions)
    if gonality_needed is None:
        return MET, reasons
    lower = ctx.gonality.lower
    if lower is None or lower < gonality_needed:
        return NOT_MET, reasons + [f"fails: gonality >= {gonality_needed} (lower bound {lower})"]
    if ctx.gonality.conditional:
        return CONDITIONAL, reasons + [f"asserted: gonality >= {gonality_needed}"]
    return MET, reasons + [f"ok: gonality >= {gonality_needed}"]


def _report(item, status, reasons, value, holds, formula, **details) -> VerdictReport:
    details = {"gate": reasons, **details}
    if status in (MET, CONDITIONAL) and holds is False:
        details["note"] = "inconsistent with hypotheses"
    return VerdictReport(item, status, value, holds, formula, details)


def hypothesis_gate(ctx: SlopeContext) -> dict[str, str]:
    return {r.item: r.hypothesis_status for r in evaluate_all(ctx)}


def check_a_ge_5b(ctx: SlopeContext) -> VerdictReport:
    inv = ctx.invariants
    status, reasons = _status(ctx, [("b >= 6", inv.b >= 6)], 4)
    value = Fraction(inv.a - 5 * inv.b)
    return _report("a_ge_5b", status, reasons, value, value >= 0, "a - 5b >= 0")


def _effectivity_gate(ctx, granted_by, conditions, gonality_needed):
    """Genus and gonality first; an explicit class or an assertion only
    steps in when that route is closed."""
    status, reasons = _status(ctx, conditions, gonality_needed)
    if status != NOT_MET:
        return status, reasons, "genus and gonality"
    if granted_by is not None:
        fallback, base_reasons = _status(ctx, [], None)
        if fallback == MET:
            return MET, base_reasons + [f"effective by {granted_by}"], granted_by
    return status, reasons, None


def check_adjoint2_square(ctx: SlopeContext, p_squared: Fraction | None = None) -> VerdictReport:
    inv = ctx.invariants
    status, reasons, granted = _effectivity_gate(ctx, ctx.adjoint2_effective_by, [("g >= 7", inv.g >= 7)], 4)
    value = Fraction(4 * inv.a - 24 * inv.b + inv.l)
    details = dict(effectivity_granted_by=granted, lattice_P_squared=p_squared)
    if p_squared is not None:
        details["matches_lattice"] = p_squared == value
    return _report("adjoint2_square", status, reasons, value, value >= 0, "4a - 24b + l >= 0", **details)


def check_adjoint2_chi(ctx: SlopeContext) -> VerdictReport:
    inv = ctx.invariants
    status, reasons = _status(ctx, [("g >= 11", inv.g >= 11)], 5)
    value = Fraction(3 * inv.a - 19 * inv.b + inv.l + 1)
    corollary = inv.l + 1 <= inv.b
    return _report(
        "adjoint2_chi", status, reasons, value, value >= 0, "3a - 19b + l + 1 >= 0",
        corollary_applies=corollary,
        corollary_text="l + 1 <= b implies a >= 6b",
    )


def check_section_bound(ctx: SlopeContext) -> VerdictReport:
    inv = ctx.invariants
    status, reasons = _status(ctx, [("g >= 11", inv.g >= 11)], 5)
    value = Fraction(5 * inv.b, 2) + 14 - inv.l
    return _report("section_bound", status, reasons, value, value >= 0, "5b/2 + 14 - l >= 0")


def check_uniform_slope(ctx: SlopeContext) -> VerdictReport:
    inv = ctx.invariants
    status, reasons = _status(ctx, [("g >= 11", inv.g >= 11)], 5)
    value = inv.a - (Fraction(11 * inv.b, 2) - 5)
    return _report("uniform_slope", status, reasons, value, value >= 0, "a - (11b/2 - 5) >= 0")


def check_adjoint3_nonempty(ctx: SlopeContext) -> VerdictReport:
    inv = ctx.invariants
    status, reasons = _status(ctx, [("b >= 22", inv.b >= 22)], 6)
    formula_value = Fraction(3 * inv.a - 19 * inv.b + inv.l + 1)
    value = ctx.adjoint3_chi if ctx.adjoint3_chi is not None else formula_value
    return _report(
        "adjoint3_nonempty", status, reasons, value, value > 0, "chi(C + 3K - N1) > 0",
        closed_form_value=formula_value,
        lattice_value=ctx.adjoint3_chi,
    )


def check_adjoint3_square(ctx: SlopeContext, p_squared: Fraction | None = None) -> VerdictReport:
    """The nef part of C + 3K has square 9a - 60b + 4l + l' + m.

    ``p_squared`` is the square of the positive part computed on the lattice;
    it is reported next to the closed form and flagged when they differ.
    """
    inv = ctx.invariants
    status, reasons, granted = _effectivity_gate(
        ctx, ctx.adjoint3_effective_by, [("g >= 23", inv.g >= 23)], 6
    )
    value = Fraction(9 * inv.a - 60 * inv.b + 4 * inv.l + inv.l_prime + inv.m)
    remark = 4 * inv.l + inv.l_prime + inv.m <= 6 * inv.b
    details = dict(
        effectivity_granted_by=granted,
        lattice_P_squared=p_squared,
        remark_applies=remark,
        remark_text="4l + l' + m <= 6b implies a >= 6b",
    )
    if p_squared is not None:
        details["matches_lattice"] = p_squared == value
    return _report("adjoint3_square", status, reasons, value, value >= 0, "9a - 60b + 4l + l' + m >= 0", **details)


# slope polynomial -----------------------------------------------------------


@dataclass(frozen=True)
class SlopePolynomial:
    """q(x) = (a - 4b) x^2 - (a - 2b) x + 2b + 2."""

    A: int
    B: int
    C0: int

    @classmethod
    def from_numbers(cls, a: int, b: int) -> SlopePolynomial:
        return cls(a - 4 * b, a - 2 * b, 2 * b + 2)

    def __call__(self, x) -> Fraction:
        return self.A * x * x - self.B * x + self.C0

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C0

    @property
    def vertex(self) -> Fraction | None:
        return Fraction(self.B, 2 * self.A) if self.A else None

    @property
    def printed_critical_value(self) -> Fraction | None:
        """2(a - 4b)/(a - 2b), the other expression for the critical point."""
        return Fraction(2 * self.A, self.B) if self.B else None

    def to_json(self) -> dict:
        return {
            "A": self.A,
            "B": self.B,
            "C0": self.C0,
            "discriminant": self.discriminant,
            "vertex": None if self.vertex is None else format_rational(self.vertex),
            "printed_critical_value": None if self.printed_critical_value is None else format_rational(self.printed_critical_value),
        }


def sqrt_genus_bound_holds(a: int, b: int) -> bool:
    """6b + 4 - 4 sqrt(b + 1) <= a, decided by squaring integers."""
    t = 6 * b + 4 - a
    if t <= 0:
        return True
    return t * t <= 16 * (b + 1)


def slope_polynomial(ctx: SlopeContext) -> tuple[SlopePolynomial, VerdictReport]:
    inv = ctx.invariants
    q = SlopePolynomial.from_numbers(inv.a, inv.b)
    status, reasons = _status(
        ctx, [("semistable", inv.semistable), ("non-isotrivial", inv.non_isotrivial)], None
    )
    discriminant = Fraction(q.discriminant)
    if q.A == 0:
        report = _report(
            "slope_polynomial", status, reasons, discriminant, None, "q(n) > 0 for all integers n",
            polynomial=q.to_json(), note="degenerate polynomial (a = 4b), no verdict",
        )
        return q, report
    values = {n: q(n) for n in POLY_RANGE}
    positive = all(v > 0 for v in values.values())
    vertex = q.vertex
    roots_ok = q.discriminant < 0 or (q.A > 0 and q(0) > 0 and q(2) > 0 and 0 < vertex < 2 and q(1) != 0)
    details = dict(
        polynomial=q.to_json(),
        q_at_0=q(0),
        q_at_1=q(1),
        min_over_range=min(values.values()),
        real_roots_in_0_2=roots_ok,
    )
    if q.discriminant <= 0:
        details["sqrt_genus_bound_from_discriminant"] = sqrt_genus_bound_holds(inv.a, inv.b)
    report = _report("slope_polynomial", status, reasons, discriminant, positive, "q(n) > 0 for all integers n", **details)
    return q, report


def check_sqrt_genus_bound(ctx: SlopeContext) -> VerdictReport:
    """a >= 6b + 4 - 4 sqrt(g) for 11 <= g <= 49 when K_T^2 < 0.

    The intermediate steps of the argument are reported one by one:
    2l <= 5b + 1 + 3 K_T^2, then l + 1 <= 5b/2, then 11b/2 <= a, then the
    discriminant bound b(b - 48)/4 (only needed when a <= 6b).
    """
    inv = ctx.invariants
    a, b, l, kt2 = inv.a, inv.b, inv.l, inv.K_T_squared
    status, reasons = _status(
        ctx,
        [("11 <= g", inv.g >= 11), ("g <= 49", inv.g <= 49), ("K_T^2 < 0", kt2 < 0)],
        5,
    )
    q = SlopePolynomial.from_numbers(a, b)
    steps = [
        {"step": "2l <= 5b + 1 + 3K_T^2", "lhs": 2 * l, "rhs": 5 * b + 1 + 3 * kt2, "holds": 2 * l <= 5 * b + 1 + 3 * kt2},
        {"step": "l + 1 <= 5b/2", "lhs": l + 1, "rhs": Fraction(5 * b, 2), "holds": l + 1 <= Fraction(5 * b, 2)},
        {"step": "11b/2 <= a", "lhs": Fraction(11 * b, 2), "rhs": a, "holds": Fraction(11 * b, 2) <= a},
        {
            "step": "discriminant <= b(b - 48)/4",
            "lhs": q.discriminant,
            "rhs": Fraction(b * (b - 48), 4),
            "holds": q.discriminant <= Fraction(b * (b - 48), 4),
            "needed": a <= 6 * b,
        },
    ]
    holds = sqrt_genus_bound_holds(a, b)
    t = 6 * b + 4 - a
    steps.append({"step": "(6b + 4 - a)^2 <= 16g or 6b + 4 - a <= 0", "lhs": t * t if t > 0 else t, "rhs": 16 * inv.g if t > 0 else 0, "holds": holds})
    return _report(
        "sqrt_genus_bound", status, reasons, Fraction(a - 6 * b - 4), holds,
        "a - 6b - 4 >= -4 sqrt(g)", steps=steps,
    )


def check_six_b_margin(ctx: SlopeContext, adjoint2_chi: VerdictReport, adjoint3_square: VerdictReport) -> VerdictReport:
    inv = ctx.invariants
    paths = []
    if adjoint2_chi.gated and adjoint2_chi.details.get("corollary_applies"):
        paths.append(("l + 1 <= b with 3a - 19b + l + 1 >= 0", adjoint2_chi.hypothesis_status))
    if adjoint3_square.gated and adjoint3_square.details.get("remark_applies"):
        paths.append(("4l + l' + m <= 6b with 9a - 60b + 4l + l' + m >= 0", adjoint3_square.hypothesis_status))
    statuses = [s for _, s in paths]
    if MET in statuses:
        status = MET
    elif CONDITIONAL in statuses:
        status = CONDITIONAL
    else:
        status = NOT_MET
    value = Fraction(inv.six_b_margin)
    reasons = [f"{s}: {text}" for text, s in paths] or ["no sufficient condition applies"]
    return _report("six_b_margin", status, reasons, value, value >= 0, "a - 6b >= 0")


def evaluate_all(
    ctx: SlopeContext,
    adjoint2_p_squared: Fraction | None = None,
    adjoint3_p_squared: Fraction | None = None,
) -> list[VerdictReport]:
    """Every check, in a fixed order."""
    chi2 = check_adjoint2_chi(ctx)
    sq3 = check_adjoint3_square(ctx, adjoint3_p_squared)
    _, poly = slope_polynomial(ctx)
    return [
        check_a_ge_5b(ctx),
        check_adjoint2_square(ctx, adjoint2_p_squared),
        chi2,
        check_section_bound(ctx),
        check_uniform_slope(ctx),
        check_adjoint3_nonempty(ctx),
        sq3,
        poly,
        check_sqrt_genus_bound(ctx),
        check_six_b_margin(ctx, chi2, sq3),
    ]
