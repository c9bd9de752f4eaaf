"""End-to-end analysis of a pencil: validate, build, decompose, check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rational
from .inequalities import SlopeContext, VerdictReport, evaluate_all
from .invariants import InvariantReport, closed_form_a, invariants, relative_canonical
from .lattice import chi, combination
from .pencil import (
    FibrationModel,
    GonalityBounds,
    MinimalityCertificate,
    PencilSpec,
    base_arithmetic_genus,
    build_fibration,
    gonality_bounds,
    relative_minimality_check,
    validate_pencil,
)
from .zariski import (
    ClosedFormPart,
    ZariskiDecomposition,
    closed_form_n1,
    closed_form_n1_prime,
    closed_form_n2,
    compare_negative_parts,
    predicted_negative_part_cubic,
    verify_decomposition,
    zariski_fujita,
)


@dataclass
class AnalysisReport:
    model: FibrationModel
    invariants: InvariantReport
    gonality: GonalityBounds
    minimality: MinimalityCertificate
    adjoint2: ZariskiDecomposition
    adjoint3: ZariskiDecomposition
    n1: ClosedFormPart
    n1_prime: ClosedFormPart
    n2: ClosedFormPart
    adjoint3_discrepancies: list[str]
    adjoint2_discrepancies: list[str]
    cross_checks: dict
    verdicts: list[VerdictReport]

    @property
    def exit_code(self) -> int:
        return 2 if any(v.gated_failure for v in self.verdicts) else 0

    def verdict(self, item: str) -> VerdictReport:
        return next(v for v in self.verdicts if v.item == item)

    def to_json(self) -> dict:
        model = self.model
        kf = relative_canonical(model)
        catalog = model.catalog
        return {
            "spec": model.pencil.spec.to_json() if model.pencil else None,
            "surface": model.surface.to_json(),
            "classes": {
                "C": model.fiber.to_json(),
                "K_S": model.canonical.to_json(),
                "K_f": kf.to_json(),
            },
            "invariants": self.invariants.to_json(),
            "cross_checks": self.cross_checks,
            "gonality": self.gonality.to_json(),
            "minimality": self.minimality.to_json(),
            "decompositions": {
                "C+2K": {
                    **self.adjoint2.to_json(),
                    "verification": verify_decomposition(self.adjoint2, catalog).to_json(),
                    "closed_form_discrepancies": self.adjoint2_discrepancies,
                },
                "C+3K": {
                    **self.adjoint3.to_json(),
                    "verification": verify_decomposition(self.adjoint3, catalog).to_json(),
                    "closed_form_discrepancies": self.adjoint3_discrepancies,
                },
            },
            "closed_forms": {
                "N1": self.n1.to_json(),
                "N1'": self.n1_prime.to_json(),
                "N2": self.n2.to_json(),
            },
            "verdicts": [v.to_json() for v in self.verdicts],
            "exit_code": self.exit_code,
        }


def _effectivity(model: FibrationModel, key: str, cls) -> str | None:
    if key in model.assume_effective:
        return "user assertion"
    if cls.nonnegative_in_basis():
        return "explicit class"
    return None


def analyze_model(model: FibrationModel) -> AnalysisReport:
    inv = invariants(model)
    pencil = model.pencil
    gon = gonality_bounds(pencil)
    cert = relative_minimality_check(pencil)
    catalog = model.catalog

    d2 = model.fiber + 2 * model.canonical
    d3 = model.fiber + 3 * model.canonical
    dec2 = zariski_fujita(d2, catalog)
    dec3 = zariski_fujita(d3, catalog)

    n1 = closed_form_n1(catalog)
    n1p = closed_form_n1_prime(catalog)
    n2 = closed_form_n2(catalog)
    disc2 = compare_negative_parts(dec2.negative, n1.multiplicities)
    disc3 = compare_negative_parts(dec3.negative, predicted_negative_part_cubic(catalog))

    n1_class = combination(model.surface, [(x, catalog.curve(e).cls) for e, x in n1.multiplicities.items()])
    d3_minus_n1 = d3 - n1_class
    ctx = SlopeContext(
        invariants=inv,
        gonality=gon,
        relatively_minimal=cert.certified,
        adjoint2_effective_by=_effectivity(model, "C+2K", d2),
        adjoint3_effective_by=_effectivity(model, "C+3K-N1", d3_minus_n1),
        adjoint3_chi=chi(d3_minus_n1),
    )
    verdicts = evaluate_all(ctx, dec2.p_squared, dec3.p_squared)

    g_a = base_arithmetic_genus(pencil)
    cross = {
        "a_closed_form": closed_form_a(model),
        "a_lattice": inv.a,
        "base_arithmetic_genus": format_rational(g_a),
        "genus_plus_node_classes": inv.g + pencil.spec.nodes,
        "C.K_f": format_rational(model.fiber.dot(relative_canonical(model))),
        "K_S^2": format_rational(model.canonical.square()),
        "a-8b": inv.a - 8 * inv.b,
        "chi(C+K_S)": format_rational(chi(model.fiber + model.canonical)),
        "chi(C+3K_S-N1)": format_rational(chi(d3_minus_n1)),
        "N1'^2_lattice": format_rational(n1p.square),
        "N1'^2_predicted": n1p.predicted_square,
    }
    return AnalysisReport(model, inv, gon, cert, dec2, dec3, n1, n1p, n2, disc3, disc2, cross, verdicts)


def analyze(spec: PencilSpec) -> AnalysisReport:
    return analyze_model(build_fibration(validate_pencil(spec)))


def adjoint_class(model: FibrationModel, name: str):
    """``"C+2K"``, ``"C+3K"`` or ``"C+nK"`` for a small integer n."""
    compact = name.replace(" ", "").upper()
    if not (compact.startswith("C+") and compact.endswith("K")):
        raise ValueError(f"unknown adjoint divisor {name!r}")
    factor = compact[2:-1] or "1"
    try:
        n = int(factor)
    except ValueError:
        raise ValueError(f"unknown adjoint divisor {name!r}") from None
    return model.fiber + n * model.canonical


def decompose(model: FibrationModel, divisor) -> ZariskiDecomposition:
    if isinstance(divisor, str):
        divisor = adjoint_class(model, divisor)
    return zariski_fujita(divisor, model.catalog)

