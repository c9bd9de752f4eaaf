"""Command-line front end.

    fibslope analyze SPEC.json [--format json|md|csv]
    fibslope search --family F0Nodal --range alpha=8:8 --range beta=8:8 --range m=20:30 --constraints Balance,RelMin
    fibslope decompose --divisor C+3K SPEC.json
    fibslope selftest [--inject-fault gram]

Exit codes: 0 success, 1 input error, 2 a gated verdict (or self-test check) failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import selftest
from .analysis import adjoint_class, analyze_model
from .exact import format_rational
from .lattice import DivisorClass
from .pencil import ChainSpec, ChainSpecError, PencilSpec, PencilValidationError, fibration_from_spec
from .report import analysis_markdown, dumps, markdown_table, verdicts_csv, write_csv
from .search import CONSTRAINTS, FAMILIES, SearchRequest, search
from .zariski import CatalogError, DecompositionError, verify_decomposition, zariski_fujita

EXIT_OK, EXIT_INPUT, EXIT_VERDICT = 0, 1, 2

SPEC_FIELDS = {
    "base", "degree", "simple_points", "nodes", "chains", "assumed_gonality",
    "semistable", "non_isotrivial", "assume_effective",
}
REQUIRED_FIELDS = ("base", "degree", "simple_points", "nodes")
CHAIN_FIELDS = ("sections", "horizontal", "bisecants")
EFFECTIVITY_KEYS = ("C+2K", "C+3K-N1")


class SpecSchemaError(ValueError):
    pass


def _int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecSchemaError(f"{name} must be an integer, got {json.dumps(value)}")
    if value < minimum:
        raise SpecSchemaError(f"{name} must be at least {minimum}, got {value}")
    return value


def _bool(value, name: str) -> bool:
    if not isinstance(value, bool):
        raise SpecSchemaError(f"{name} must be true or false, got {json.dumps(value)}")
    return value


def parse_spec(data) -> PencilSpec:
    """Strict conversion of decoded JSON to a PencilSpec; unknown keys are errors."""
    if not isinstance(data, dict):
        raise SpecSchemaError("a pencil spec must be a JSON object")
    unknown = sorted(set(data) - SPEC_FIELDS)
    if unknown:
        raise SpecSchemaError(f"unknown field(s): {', '.join(unknown)}")
    missing = [k for k in REQUIRED_FIELDS if k not in data]
    if missing:
        raise SpecSchemaError(f"missing field(s): {', '.join(missing)}")
    base = data["base"]
    if base not in ("P2", "F0"):
        raise SpecSchemaError(f'base must be "P2" or "F0", got {json.dumps(base)}')
    if base == "P2":
        degree = _int(data["degree"], "degree", 1)
    else:
        deg = data["degree"]
        if not (isinstance(deg, list) and len(deg) == 2):
            raise SpecSchemaError("degree on F0 must be a list [alpha, beta]")
        degree = (_int(deg[0], "degree[0]", 1), _int(deg[1], "degree[1]", 1))
    chains = None
    if data.get("chains") is not None:
        raw = data["chains"]
        if not isinstance(raw, dict):
            raise SpecSchemaError("chains must be an object")
        extra = sorted(set(raw) - set(CHAIN_FIELDS))
        if extra:
            raise SpecSchemaError(f"unknown field(s) in chains: {', '.join(extra)}")
        lists = {}
        for key in CHAIN_FIELDS:
            values = raw.get(key, [])
            if not isinstance(values, list):
                raise SpecSchemaError(f"chains.{key} must be a list of integers")
            lists[key] = tuple(_int(v, f"chains.{key}[{i}]") for i, v in enumerate(values))
        chains = ChainSpec(**lists)
    gonality = data.get("assumed_gonality")
    if gonality is not None:
        gonality = _int(gonality, "assumed_gonality", 2)
    effective = data.get("assume_effective", [])
    if not isinstance(effective, list) or any(e not in EFFECTIVITY_KEYS for e in effective):
        raise SpecSchemaError(f"assume_effective must be a list drawn from {list(EFFECTIVITY_KEYS)}")
    return PencilSpec(
        base=base,
        degree=degree,
        simple_points=_int(data["simple_points"], "simple_points"),
        nodes=_int(data["nodes"], "nodes"),
        chains=chains,
        assumed_gonality=gonality,
        semistable=_bool(data.get("semistable", False), "semistable"),
        non_isotrivial=_bool(data.get("non_isotrivial", True), "non_isotrivial"),
        assume_effective=tuple(effective),
    )


def load_spec(path: str) -> PencilSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecSchemaError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSchemaError(f"{path} is not valid JSON: {exc}") from None
    return parse_spec(data)


def _apply_flags(spec: PencilSpec, args) -> PencilSpec:
    changes = {}
    if args.semistable:
        changes["semistable"] = True
    if args.isotrivial:
        changes["non_isotrivial"] = False
    if args.assumed_gonality is not None:
        changes["assumed_gonality"] = args.assumed_gonality
    return replace(spec, **changes) if changes else spec


def _write(text: str) -> None:
    sys.stdout.write(text)


def cmd_analyze(args) -> int:
    spec = _apply_flags(load_spec(args.spec), args)
    report = analyze_model(fibration_from_spec(spec))
    if args.format == "json":
        _write(dumps(report.to_json()))
    elif args.format == "md":
        _write(analysis_markdown(report))
    else:
        _write(verdicts_csv(report.verdicts))
    return report.exit_code


def parse_range(text: str) -> tuple[str, tuple[int, int]]:
    try:
        name, bounds = text.split("=", 1)
        lo, _, hi = bounds.partition(":")
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise SpecSchemaError(f"range {text!r} is not of the form name=lo:hi") from None
    return name.strip(), (lo_i, hi_i)


def cmd_search(args) -> int:
    ranges = dict(parse_range(r) for r in args.range)
    constraints = tuple(c.strip() for c in args.constraints.split(",") if c.strip()) if args.constraints else ()
    request = SearchRequest(args.family, ranges, constraints)
    rows = search(request, jobs=args.jobs)
    if args.format == "json":
        _write(dumps({
            "family": request.family,
            "ranges": {k: list(v) for k, v in sorted(ranges.items())},
            "constraints": list(constraints),
            "rows": [r.to_json() for r in rows],
        }))
        return EXIT_OK
    header = [k for k, _ in rows[0].params] if rows else sorted(ranges)
    header = list(dict.fromkeys(header + ["m"]))
    columns = header + ["g", "a", "b", "l", "margin"]
    table = [[str(r.to_json()[c]) for c in columns] for r in rows]
    _write(markdown_table(columns, table) if args.format == "md" else write_csv(columns, table))
    return EXIT_OK


def parse_divisor(text: str, model) -> DivisorClass:
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            values = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SpecSchemaError(f"divisor is not a JSON array: {exc}") from None
        if not isinstance(values, list) or len(values) != model.surface.rank:
            raise SpecSchemaError(f"an explicit class needs {model.surface.rank} coefficients")
        try:
            return model.surface.divisor(values)
        except (TypeError, ValueError) as exc:
            raise SpecSchemaError(f"bad coefficient in divisor: {exc}") from None
    try:
        return adjoint_class(model, stripped)
    except ValueError as exc:
        raise SpecSchemaError(str(exc)) from None


def cmd_decompose(args) -> int:
    model = fibration_from_spec(load_spec(args.spec))
    divisor = parse_divisor(args.divisor, model)
    dec = zariski_fujita(divisor, model.catalog)
    check = verify_decomposition(dec, model.catalog)
    out = {
        "divisor": args.divisor,
        "class": divisor.to_json(),
        "D_squared": format_rational(divisor.square()),
        **dec.to_json(),
        "verification": check.to_json(),
    }
    _write(dumps(out))
    return EXIT_OK if check.passed else EXIT_VERDICT


def cmd_selftest(args) -> int:
    checks = selftest.run(fault=args.inject_fault)
    _write(selftest.render(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERDICT


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1, keeping 2 for failed verdicts."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibslope", description="Slope invariants of fibrations from plane and quadric pencils.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full report for a pencil spec")
    p.add_argument("spec")
    p.add_argument("--format", choices=("json", "md", "csv"), default="json")
    p.add_argument("--semistable", action="store_true", help="treat the fibration as semistable")
    p.add_argument("--isotrivial", action="store_true", help="treat the fibration as isotrivial")
    p.add_argument("--assumed-gonality", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="enumerate pencil parameters")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--range", action="append", default=[], metavar="NAME=LO:HI")
    p.add_argument("--constraints", default="Balance", help=f"comma separated, from {', '.join(CONSTRAINTS)}")
    p.add_argument("--format", choices=("json", "md", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("decompose", help="Zariski decomposition of an adjoint or explicit class")
    p.add_argument("--divisor", required=True, help='"C+2K", "C+3K" or a JSON array of coefficients')
    p.add_argument("spec")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("selftest", help="run the golden checks")
    p.add_argument("--inject-fault", choices=("gram",), default=None)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PencilValidationError as exc:
        for v in exc.violations:
            print(f"error: {v}", file=sys.stderr)
        return EXIT_INPUT
    except (SpecSchemaError, ChainSpecError, CatalogError, DecompositionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
