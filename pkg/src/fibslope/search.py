"""Enumerate pencil parameters and keep those satisfying a constraint set.

For every tuple the number of simple base points is l = C0^2 - 4m, so the
fiber class always has square zero; ``Balance`` keeps the tuples where this
l is a genuine count (l >= 0).  Invariants come from the closed forms

    P^2:     g = (d-1)(d-2)/2 - m,   a = 3d^2 - 12d + 9 - 5m
    P1xP1:   g = (x-1)(y-1) - m,     a = 8(x-1)(y-1) - l - 9m

which agree with the lattice computation (see the invariants tests).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .pencil import PencilSpec, ValidatedPencil, relative_minimality_check

FAMILIES = ("PlaneNodal", "F0Nodal", "PlaneSmooth")
CONSTRAINTS = ("Balance", "Mobility", "RelMin", "FourLPlusM_le_6b", "Equality_a_eq_6b", "L_eq_2m")
MAX_DEGREE = 64


class SearchRangeError(ValueError):
    pass


@dataclass(frozen=True)
class SearchRequest:
    family: str
    ranges: dict[str, tuple[int, int]]
    constraints: tuple[str, ...] = ("Balance",)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        unknown = [c for c in self.constraints if c not in CONSTRAINTS]
        if unknown:
            raise ValueError(f"unknown constraints {unknown}; choose from {', '.join(CONSTRAINTS)}")
        allowed = {"PlaneNodal": {"d", "m"}, "PlaneSmooth": {"d"}, "F0Nodal": {"alpha", "beta", "m"}}[self.family]
        extra = set(self.ranges) - allowed
        if extra:
            raise ValueError(f"family {self.family} has no parameters {sorted(extra)}")
        required = allowed - {"m"}
        missing = required - set(self.ranges)
        if missing:
            raise ValueError(f"missing ranges for {sorted(missing)}")
        for name, (lo, hi) in self.ranges.items():
            if lo > hi:
                raise SearchRangeError(f"empty range for {name}: {lo}..{hi}")
            if lo < (0 if name == "m" else 1):
                raise SearchRangeError(f"range for {name} starts below the allowed minimum")
            if name != "m" and hi > MAX_DEGREE:
                raise SearchRangeError(f"range for {name} exceeds {MAX_DEGREE}")


@dataclass(frozen=True)
class SearchRow:
    params: tuple[tuple[str, int], ...]
    g: int
    a: int
    b: int
    l: int
    m: int
    margin: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "margin", self.a - 6 * self.b)

    def to_json(self) -> dict:
        out = dict(self.params)
        out.update(g=self.g, a=self.a, b=self.b, l=self.l, m=self.m, margin=self.margin)
        return out


def _tuples(request: SearchRequest):
    r = request.ranges
    if request.family == "F0Nodal":
        for x, y in product(range(r["alpha"][0], r["alpha"][1] + 1), range(r["beta"][0], r["beta"][1] + 1)):
            lo, hi = r.get("m", (0, x * y // 2))
            for m in range(lo, hi + 1):
                yield (("alpha", x), ("beta", y), ("m", m))
        return
    for d in range(r["d"][0], r["d"][1] + 1):
        if request.family == "PlaneSmooth":
            yield (("d", d), ("m", 0))
            continue
        lo, hi = r.get("m", (0, d * d // 4))
        for m in range(lo, hi + 1):
            yield (("d", d), ("m", m))


def _evaluate(family: str, params: dict) -> tuple[PencilSpec, int, int, int, int]:
    m = params["m"]
    if family == "F0Nodal":
        x, y = params["alpha"], params["beta"]
        l = 2 * x * y - 4 * m
        g = (x - 1) * (y - 1) - m
        a = 8 * (x - 1) * (y - 1) - l - 9 * m
        mobility = x * y + x + y - 3 * m
        spec = PencilSpec("F0", (x, y), max(l, 0), m)
    else:
        d = params["d"]
        l = d * d - 4 * m
        g = (d - 1) * (d - 2) // 2 - m
        a = 3 * d * d - 12 * d + 9 - 5 * m
        mobility = d * (d + 3) // 2 - 3 * m
        spec = PencilSpec("P2", d, max(l, 0), m)
    return spec, l, g, a, mobility


def _accept(request: SearchRequest, params) -> SearchRow | None:
    values = dict(params)
    spec, l, g, a, mobility = _evaluate(request.family, values)
    m = values["m"]
    b = g - 1
    if g < 2:
        return None
    for c in request.constraints:
        if c == "Balance":
            ok = l >= 0
        elif c == "Mobility":
            ok = mobility > 0
        elif c == "FourLPlusM_le_6b":
            ok = 4 * l + m <= 6 * b
        elif c == "Equality_a_eq_6b":
            ok = a == 6 * b
        elif c == "L_eq_2m":
            ok = l == 2 * m
        else:  # RelMin
            ok = l >= 0 and relative_minimality_check(ValidatedPencil(spec, l + 4 * m, mobility)).certified
        if not ok:
            return None
    return SearchRow(params, g, a, b, l, m)


def _run_chunk(request: SearchRequest, chunk: list) -> list[SearchRow]:
    return [row for row in (_accept(request, p) for p in chunk) if row is not None]


def search(request: SearchRequest, jobs: int = 1) -> list[SearchRow]:
    """Rows in lexicographic parameter order.  Tuples with g < 2 are skipped.

    With ``jobs > 1`` the tuples are split across worker processes; the
    merged rows are sorted, so the result does not depend on ``jobs``.
    """
    tuples = list(_tuples(request))
    if jobs <= 1 or len(tuples) < 2:
        rows = _run_chunk(request, tuples)
    else:
        chunks = [tuples[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, [request] * jobs, chunks))
        rows = [row for part in parts for row in part]
    return sorted(rows, key=lambda r: tuple(v for _, v in r.params))
