"""Zariski-Fujita decomposition relative to a tracked catalog of curves.

Nefness here always means *catalog-nef*: the positive part pairs
nonnegatively with every curve in the catalog.  The catalog lists the
(-1)-sections, the vertical (-2)-chains hanging off them, horizontal
(-2)-chains, the (-1)-bisecants and their vertical chains; these are the only
curves that can meet the adjoint divisors C + 2K and C + 3K negatively.

A catalog is either *embedded* (every curve carries a DivisorClass and all
pairings come from the Gram form) or *abstract* (pairings are given
directly).  The decomposition works the same way on both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import (
    SingularMatrixError,
    as_fraction,
    format_rational,
    is_negative_definite_by_minors,
    ldl_pivots,
    leading_principal_minors,
    solve,
)
from .lattice import DivisorClass, combination, pair

# kind -> (E^2, K.E, C.E)
KIND_NUMBERS = {
    "section": (-1, -1, 1),
    "chain": (-2, 0, 0),
    "horizontal": (-2, 0, 1),
    "bisecant": (-1, -1, 2),
}


class CatalogError(ValueError):
    pass


class MalformedChainError(CatalogError):
    pass


class DecompositionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CatalogCurve:
    label: str
    kind: str
    carrier: str | None = None
    position: int = 0
    cls: DivisorClass | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KIND_NUMBERS:
            raise CatalogError(f"unknown curve kind {self.kind!r}")
        if self.kind in ("chain", "horizontal") and (self.carrier is None or self.position < 1):
            raise CatalogError(f"chain curve {self.label} needs a carrier and a position >= 1")


@dataclass(frozen=True)
class PairingDivisor:
    """A divisor known only through its pairings with catalog curves."""

    pairings: Mapping[str, Fraction]
    square: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "pairings": {k: format_rational(v) for k, v in self.pairings.items()},
            "square": None if self.square is None else format_rational(self.square),
        }


class CurveCatalog:
    """Curves plus their pairing data.

    ``pairings`` maps unordered label pairs (and ``(E, E)`` for squares) to
    intersection numbers; missing off-diagonal pairs are 0.
    """

    def __init__(
        self,
        curves: Sequence[CatalogCurve],
        pairings: Mapping[tuple[str, str], Fraction | int],
        k_dot: Mapping[str, Fraction | int],
        c_dot: Mapping[str, Fraction | int],
    ):
        self.curves = tuple(curves)
        self.labels = tuple(c.label for c in self.curves)
        if len(set(self.labels)) != len(self.labels):
            raise CatalogError("duplicate curve labels")
        self._by_label = {c.label: c for c in self.curves}
        self._order = {label: i for i, label in enumerate(self.labels)}
        self._neighbours: dict[str, dict[str, Fraction]] = {label: {} for label in self.labels}
        for (e, f), value in pairings.items():
            value = as_fraction(value)
            if e not in self._by_label or f not in self._by_label:
                raise CatalogError(f"pairing refers to unknown curve ({e}, {f})")
            if value == 0 and e != f:
                continue
            self._neighbours[e][f] = value
            self._neighbours[f][e] = value
        self.k_dot = {label: as_fraction(k_dot[label]) for label in self.labels}
        self.c_dot = {label: as_fraction(c_dot[label]) for label in self.labels}
        self.check_kinds()

    # construction -------------------------------------------------------

    @classmethod
    def from_classes(
        cls, curves: Sequence[CatalogCurve], fiber: DivisorClass, canonical: DivisorClass
    ) -> CurveCatalog:
        """Embedded catalog: every pairing is read off the Gram form."""
        by_index: dict[int, list[CatalogCurve]] = {}
        base_rank = fiber.surface.base.rank
        touches_base = []
        for curve in curves:
            if curve.cls is None:
                raise CatalogError(f"curve {curve.label} has no class")
            for i in curve.cls.support:
                if i < base_rank:
                    touches_base.append(curve)
                    break
            for i in curve.cls.support:
                if i >= base_rank:
                    by_index.setdefault(i, []).append(curve)
        candidates: set[tuple[str, str]] = set()
        for group in list(by_index.values()) + [touches_base]:
            for a in group:
                for b in group:
                    candidates.add((a.label, b.label))
        for curve in curves:
            candidates.add((curve.label, curve.label))
        lookup = {c.label: c for c in curves}
        pairings = {}
        for e, f in candidates:
            if (f, e) in pairings:
                continue
            value = pair(lookup[e].cls, lookup[f].cls)
            if value or e == f:
                pairings[(e, f)] = value
        k_dot = {c.label: pair(c.cls, canonical) for c in curves}
        c_dot = {c.label: pair(c.cls, fiber) for c in curves}
        catalog = cls(curves, pairings, k_dot, c_dot)
        catalog.fiber = fiber
        catalog.canonical = canonical
        return catalog

    @classmethod
    def from_configuration(
        cls,
        sections: Sequence[int] = (),
        horizontal: Sequence[int] = (),
        bisecants: Sequence[int] = (),
    ) -> CurveCatalog:
        """Abstract catalog for sections with vertical chains of the given
        lengths, optional horizontal chains on the same sections, and
        bisecants with vertical chains."""
        horizontal = list(horizontal) + [0] * (len(sections) - len(horizontal))
        if len(horizontal) != len(sections):
            raise CatalogError("more horizontal chains than sections")
        if any(n < 0 for n in list(sections) + horizontal + list(bisecants)):
            raise CatalogError("chain lengths must be nonnegative")
        curves: list[CatalogCurve] = []
        pairings: dict[tuple[str, str], int] = {}

        def add_chain(carrier: str, kind: str, prefix: str, length: int) -> None:
            previous = carrier
            for j in range(1, length + 1):
                label = f"{prefix}{j}"
                curves.append(CatalogCurve(label, kind, carrier, j))
                pairings[(label, label)] = -2
                pairings[(previous, label)] = 1
                previous = label

        for i, (v, h) in enumerate(zip(sections, horizontal), start=1):
            g = f"Gamma{i}"
            curves.append(CatalogCurve(g, "section"))
            pairings[(g, g)] = -1
            add_chain(g, "chain", f"E{i}_", v)
            add_chain(g, "horizontal", f"Eh{i}_", h)
        for j, f_len in enumerate(bisecants, start=1):
            d = f"Delta{j}"
            curves.append(CatalogCurve(d, "bisecant"))
            pairings[(d, d)] = -1
            add_chain(d, "chain", f"F{j}_", f_len)
        k_dot = {c.label: KIND_NUMBERS[c.kind][1] for c in curves}
        c_dot = {c.label: KIND_NUMBERS[c.kind][2] for c in curves}
        catalog = cls(curves, pairings, k_dot, c_dot)
        catalog.fiber = None
        catalog.canonical = None
        return catalog

    fiber: DivisorClass | None = None
    canonical: DivisorClass | None = None

    # access -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def __contains__(self, label: str) -> bool:
        return label in self._by_label

    def curve(self, label: str) -> CatalogCurve:
        return self._by_label[label]

    @property
    def embedded(self) -> bool:
        return all(c.cls is not None for c in self.curves) and self.fiber is not None

    def gram(self, e: str, f: str) -> Fraction:
        return self._neighbours[e].get(f, Fraction(0))

    def neighbours(self, label: str) -> Mapping[str, Fraction]:
        return self._neighbours[label]

    def gram_matrix(self, labels: Sequence[str]) -> list[list[Fraction]]:
        return [[self.gram(e, f) for f in labels] for e in labels]

    def of_kind(self, kind: str) -> list[CatalogCurve]:
        return [c for c in self.curves if c.kind == kind]

    def chain(self, carrier: str, kind: str = "chain") -> list[CatalogCurve]:
        members = [c for c in self.curves if c.carrier == carrier and c.kind == kind]
        return sorted(members, key=lambda c: c.position)

    def sort_labels(self, labels: Iterable[str]) -> list[str]:
        return sorted(labels, key=self._order.__getitem__)

    # checks -------------------------------------------------------------

    def check_kinds(self) -> None:
        for c in self.curves:
            expected = KIND_NUMBERS[c.kind]
            found = (self.gram(c.label, c.label), self.k_dot[c.label], self.c_dot[c.label])
            if tuple(found) != expected:
                raise CatalogError(
                    f"curve {c.label} of kind {c.kind}: (E^2, K.E, C.E) = "
                    f"({', '.join(str(x) for x in found)}), expected {expected}"
                )

    def check_chain(self, carrier: str, kind: str = "chain") -> list[CatalogCurve]:
        """Return the chain on ``carrier`` after checking it is a path
        starting at the carrier."""
        members = self.chain(carrier, kind)
        positions = [c.position for c in members]
        if positions != list(range(1, len(members) + 1)):
            raise MalformedChainError(f"chain on {carrier} has positions {positions}")
        labels = [carrier] + [c.label for c in members]
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                want = 1 if b - a == 1 else 0
                got = self.gram(labels[a], labels[b])
                if got != want:
                    raise MalformedChainError(
                        f"{labels[a]}.{labels[b]} = {got}, a path needs {want}"
                    )
        return members

    def check_against_classes(self) -> list[str]:
        """Compare the stored pairing data with the Gram form of the classes."""
        problems = []
        if not self.embedded:
            return problems
        for i, e in enumerate(self.curves):
            for f in self.curves[i:]:
                want = pair(e.cls, f.cls)
                if self.gram(e.label, f.label) != want:
                    problems.append(f"{e.label}.{f.label}: stored {self.gram(e.label, f.label)}, Gram {want}")
        return problems

    def with_corrupted_pairing(self, e: str, f: str, value) -> CurveCatalog:
        """Copy of the catalog with one pairing overwritten (fault injection)."""
        clone = object.__new__(CurveCatalog)
        clone.__dict__.update(self.__dict__)
        clone._neighbours = {k: dict(v) for k, v in self._neighbours.items()}
        clone._neighbours[e][f] = as_fraction(value)
        clone._neighbours[f][e] = as_fraction(value)
        return clone


# divisor data ---------------------------------------------------------


def pairings_with_catalog(divisor, catalog: CurveCatalog) -> dict[str, Fraction]:
    if isinstance(divisor, DivisorClass):
        missing = [c.label for c in catalog if c.cls is None]
        if missing:
            raise CatalogError("an explicit class needs an embedded catalog")
        return {c.label: pair(divisor, c.cls) for c in catalog}
    if isinstance(divisor, PairingDivisor):
        try:
            return {label: as_fraction(divisor.pairings[label]) for label in catalog.labels}
        except KeyError as exc:
            raise CatalogError(f"divisor has no pairing with {exc.args[0]}") from None
    raise TypeError(f"unsupported divisor data {type(divisor).__name__}")


def divisor_square(divisor) -> Fraction | None:
    if isinstance(divisor, DivisorClass):
        return divisor.square()
    return divisor.square


def adjoint(catalog: CurveCatalog, n: int, fiber_square=0, canonical_square=None, fiber_dot_canonical=None):
    """The class C + nK, or its pairing data on an abstract catalog.

    On an abstract catalog the square is only known when K^2 and C.K are
    supplied.
    """
    if catalog.embedded:
        return catalog.fiber + n * catalog.canonical
    pairings = {label: catalog.c_dot[label] + n * catalog.k_dot[label] for label in catalog.labels}
    square = None
    if canonical_square is not None and fiber_dot_canonical is not None:
        square = as_fraction(fiber_square) + 2 * n * as_fraction(fiber_dot_canonical) + n * n * as_fraction(canonical_square)
    return PairingDivisor(pairings, square)


# decomposition --------------------------------------------------------


@dataclass
class ZariskiDecomposition:
    divisor: object
    negative: dict[str, Fraction]
    positive: object
    p_squared: Fraction | None
    gram_minors: list[Fraction]
    iterations: int = 0

    @property
    def support(self) -> list[str]:
        return list(self.negative)

    def negative_square(self, catalog: CurveCatalog) -> Fraction:
        return quadratic_form(self.negative, catalog)

    def to_json(self) -> dict:
        positive = self.positive.to_json()
        return {
            "negative": [{"label": k, "multiplicity": format_rational(v)} for k, v in self.negative.items()],
            "P": positive,
            "P_squared": None if self.p_squared is None else format_rational(self.p_squared),
            "gram_minors": [format_rational(m) for m in self.gram_minors],
            "iterations": self.iterations,
        }

    @classmethod
    def from_negative_part(cls, divisor, multiplicities: Mapping[str, Fraction | int], catalog: CurveCatalog):
        """Assemble D = P + N from a proposed N without any checking."""
        negative = {
            label: as_fraction(multiplicities[label])
            for label in catalog.sort_labels(multiplicities)
            if multiplicities[label] != 0
        }
        positive = _positive_part(divisor, negative, catalog)
        square = divisor_square(divisor)
        if isinstance(positive, DivisorClass):
            p_squared = positive.square()
        elif square is not None:
            p_squared = square - 2 * _pair_with_divisor(divisor, negative, catalog) + quadratic_form(negative, catalog)
        else:
            p_squared = None
        minors = block_minors(catalog, list(negative))
        return cls(divisor, negative, positive, p_squared, minors)


def quadratic_form(multiplicities: Mapping[str, Fraction], catalog: CurveCatalog) -> Fraction:
    total = Fraction(0)
    for e, x in multiplicities.items():
        for f, g in catalog.neighbours(e).items():
            if f in multiplicities:
                total += x * multiplicities[f] * g
    return total


def _pair_with_divisor(divisor, multiplicities, catalog) -> Fraction:
    dots = pairings_with_catalog(divisor, catalog)
    return sum((x * dots[e] for e, x in multiplicities.items()), Fraction(0))


def _residual(d_dot: Mapping[str, Fraction], mult: Mapping[str, Fraction], catalog: CurveCatalog) -> dict[str, Fraction]:
    residual = dict(d_dot)
    for e, x in mult.items():
        for f, g in catalog.neighbours(e).items():
            residual[f] -= x * g
    return residual


def _positive_part(divisor, negative, catalog):
    if isinstance(divisor, DivisorClass):
        return divisor - combination(divisor.surface, [(x, catalog.curve(e).cls) for e, x in negative.items()])
    d_dot = pairings_with_catalog(divisor, catalog)
    residual = _residual(d_dot, negative, catalog)
    square = divisor.square
    if square is not None:
        square = square - 2 * sum((x * d_dot[e] for e, x in negative.items()), Fraction(0)) + quadratic_form(negative, catalog)
    return PairingDivisor(residual, square)


def components(labels: Sequence[str], catalog: CurveCatalog) -> list[list[str]]:
    """Connected components of the intersection graph restricted to labels."""
    inside = set(labels)
    seen: set[str] = set()
    result = []
    for start in catalog.sort_labels(labels):
        if start in seen:
            continue
        stack, block = [start], []
        seen.add(start)
        while stack:
            e = stack.pop()
            block.append(e)
            for f in catalog.neighbours(e):
                if f in inside and f not in seen and f != e:
                    seen.add(f)
                    stack.append(f)
        result.append(catalog.sort_labels(block))
    return result


def block_minors(catalog: CurveCatalog, labels: Sequence[str]) -> list[Fraction]:
    """Leading principal minors of the Gram matrix of ``labels``, with the
    labels grouped by connected component (the matrix is block diagonal)."""
    minors: list[Fraction] = []
    scale = Fraction(1)
    for block in components(labels, catalog):
        block_m = leading_principal_minors(catalog.gram_matrix(block))
        minors.extend(scale * m for m in block_m)
        if len(block_m) < len(block):
            break
        scale *= block_m[-1]
    return minors


def zariski_fujita(divisor, catalog: CurveCatalog) -> ZariskiDecomposition:
    """Fujita's iteration: grow the support by the curves the current
    residual meets negatively and re-solve P.E = 0 on the support."""
    d_dot = pairings_with_catalog(divisor, catalog)
    support: list[str] = []
    mult: dict[str, Fraction] = {}
    iterations = 0
    while True:
        residual = _residual(d_dot, mult, catalog)
        negatives = [e for e in catalog.labels if residual[e] < 0]
        if not negatives:
            break
        iterations += 1
        if iterations > len(catalog):
            raise DecompositionError("Zariski iteration did not terminate within the catalog size")
        support = catalog.sort_labels(set(support) | set(negatives))
        mult = {}
        for block in components(support, catalog):
            gram = catalog.gram_matrix(block)
            if not is_negative_definite_by_minors(leading_principal_minors(gram), len(block)):
                raise DecompositionError(
                    "catalog inconsistent with a Zariski negative part: Gram matrix of "
                    f"{{{', '.join(block)}}} is not negative definite"
                )
            try:
                solution = solve(gram, [d_dot[e] for e in block])
            except SingularMatrixError as exc:
                raise DecompositionError(f"singular Gram matrix on {block}") from exc
            for e, x in zip(block, solution):
                if x < 0:
                    raise DecompositionError(f"negative multiplicity {x} on curve {e}")
                mult[e] = x

    negative = {e: mult[e] for e in catalog.sort_labels(mult) if mult[e] != 0}
    dec = ZariskiDecomposition.from_negative_part(divisor, negative, catalog)
    dec.iterations = iterations

    # defining properties, asserted on every run
    final = _residual(d_dot, negative, catalog)
    if any(final[e] < 0 for e in catalog.labels):
        raise DecompositionError("positive part is not catalog-nef")
    if any(final[e] != 0 for e in negative):
        raise DecompositionError("positive part is not orthogonal to the negative part")
    square = divisor_square(divisor)
    if square is not None and dec.p_squared != square - quadratic_form(negative, catalog):
        raise DecompositionError("P^2 differs from D^2 - N^2")
    return dec


@dataclass
class VerificationReport:
    orthogonal: bool
    catalog_nef: bool
    negative_definite: bool
    nonnegative: bool
    p_squared: Fraction | None
    failures: list[str]

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.catalog_nef and self.negative_definite and self.nonnegative

    def to_json(self) -> dict:
        return {
            "orthogonal": self.orthogonal,
            "catalog_nef": self.catalog_nef,
            "negative_definite": self.negative_definite,
            "nonnegative": self.nonnegative,
            "P_squared": None if self.p_squared is None else format_rational(self.p_squared),
            "failures": list(self.failures),
        }


def verify_decomposition(dec: ZariskiDecomposition, catalog: CurveCatalog) -> VerificationReport:
    """Re-check a decomposition from scratch.

    On an embedded catalog the positive part is rebuilt from the classes and
    every pairing goes through the Gram form of the surface, so the stored
    catalog pairings are not trusted.  Negative definiteness is checked with
    an LDL^T factorization rather than minors.
    """
    failures: list[str] = []
    negative = dec.negative
    nonnegative = True
    for e, x in negative.items():
        if x < 0:
            nonnegative = False
            failures.append(f"negative multiplicity {x} on {e}")

    if catalog.embedded and isinstance(dec.divisor, DivisorClass):
        p = dec.divisor - combination(dec.divisor.surface, [(x, catalog.curve(e).cls) for e, x in negative.items()])
        dots = {c.label: pair(p, c.cls) for c in catalog}
        gram = [[pair(catalog.curve(e).cls, catalog.curve(f).cls) for f in negative] for e in negative]
        p_squared = p.square()
    else:
        d_dot = pairings_with_catalog(dec.divisor, catalog)
        dots = {}
        for c in catalog:
            dots[c.label] = d_dot[c.label] - sum((x * catalog.gram(e, c.label) for e, x in negative.items()), Fraction(0))
        gram = catalog.gram_matrix(list(negative))
        square = divisor_square(dec.divisor)
        p_squared = None
        if square is not None:
            p_squared = square - 2 * sum((x * d_dot[e] for e, x in negative.items()), Fraction(0)) + quadratic_form(negative, catalog)

    orthogonal = True
    for e in negative:
        if dots[e] != 0:
            orthogonal = False
            failures.append(f"P.{e} = {dots[e]}, expected 0")
    catalog_nef = True
    for label in catalog.labels:
        if dots[label] < 0:
            catalog_nef = False
            failures.append(f"P.{label} = {dots[label]} < 0")

    negative_definite = True
    if gram:
        try:
            pivots = ldl_pivots(gram)
            negative_definite = all(d < 0 for d in pivots)
        except SingularMatrixError:
            negative_definite = False
        if not negative_definite:
            failures.append("Gram matrix of the negative support is not negative definite")
    return VerificationReport(orthogonal, catalog_nef, negative_definite, nonnegative, p_squared, failures)


# closed forms ---------------------------------------------------------


@dataclass
class ClosedFormPart:
    """A negative part written down from the chain data, with its square
    computed on the lattice next to the value the chain count predicts."""

    name: str
    multiplicities: dict[str, Fraction]
    count: int
    square: Fraction
    predicted_square: int

    @property
    def matches(self) -> bool:
        return self.square == self.predicted_square

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "multiplicities": {k: format_rational(v) for k, v in self.multiplicities.items()},
            "count": self.count,
            "square": format_rational(self.square),
            "predicted_square": self.predicted_square,
            "matches": self.matches,
        }


def _carrier_part(catalog: CurveCatalog, carrier_kind: str, name: str) -> ClosedFormPart:
    mult: dict[str, Fraction] = {}
    count = 0
    for carrier in catalog.of_kind(carrier_kind):
        chain = catalog.check_chain(carrier.label, "chain")
        length = len(chain)
        mult[carrier.label] = Fraction(length + 1)
        for j, curve in enumerate(chain, start=1):
            mult[curve.label] = Fraction(length - j + 1)
        count += length + 1
    mult = {k: mult[k] for k in catalog.sort_labels(mult)}
    return ClosedFormPart(name, mult, count, quadratic_form(mult, catalog), -count)


def closed_form_n1(catalog: CurveCatalog) -> ClosedFormPart:
    """(l_i + 1) on each (-1)-section and l_i - j + 1 on the j-th curve of
    its vertical chain; the count is l = sum of (l_i + 1).

    Raises DecompositionError if the lattice square is not -l.
    """
    part = _carrier_part(catalog, "section", "N1")
    if not part.matches:
        raise DecompositionError(f"N1^2 = {part.square} but -l = {part.predicted_square}")
    return part


def closed_form_n2(catalog: CurveCatalog) -> ClosedFormPart:
    part = _carrier_part(catalog, "bisecant", "N2")
    if not part.matches:
        raise DecompositionError(f"N2^2 = {part.square} but -m = {part.predicted_square}")
    return part


def closed_form_n1_prime(catalog: CurveCatalog) -> ClosedFormPart:
    """Horizontal chains only, coefficient h - j + 1 on the j-th curve.

    The count l' sums h + 1 over the nonempty chains.  Its prediction -l'
    disagrees with the lattice square -h(h + 1) of such a chain; both are
    kept and ``matches`` is False whenever a horizontal chain is present.
    """
    mult: dict[str, Fraction] = {}
    count = 0
    for section in catalog.of_kind("section"):
        chain = catalog.check_chain(section.label, "horizontal")
        h = len(chain)
        for j, curve in enumerate(chain, start=1):
            mult[curve.label] = Fraction(h - j + 1)
        if h:
            count += h + 1
    mult = {k: mult[k] for k in catalog.sort_labels(mult)}
    return ClosedFormPart("N1'", mult, count, quadratic_form(mult, catalog), -count)


def closed_form_n2_and_n1_prime(catalog: CurveCatalog) -> tuple[ClosedFormPart, ClosedFormPart]:
    return closed_form_n1_prime(catalog), closed_form_n2(catalog)


def predicted_negative_part_cubic(catalog: CurveCatalog) -> dict[str, Fraction]:
    """2 N1 + N1' + N2, the negative part of C + 3K read off the chains."""
    total: dict[str, Fraction] = {}
    for part, weight in (
        (closed_form_n1(catalog), 2),
        (closed_form_n1_prime(catalog), 1),
        (closed_form_n2(catalog), 1),
    ):
        for k, v in part.multiplicities.items():
            total[k] = total.get(k, Fraction(0)) + weight * v
    return {k: total[k] for k in catalog.sort_labels(total) if total[k]}


def compare_negative_parts(a: Mapping[str, Fraction], b: Mapping[str, Fraction]) -> list[str]:
    """Labels whose multiplicities differ, as readable lines."""
    lines = []
    for label in sorted(set(a) | set(b)):
        x, y = a.get(label, Fraction(0)), b.get(label, Fraction(0))
        if x != y:
            lines.append(f"{label}: {format_rational(x)} vs {format_rational(y)}")
    return lines
