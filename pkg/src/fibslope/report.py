"""Deterministic JSON, markdown and CSV emitters.

Rationals are always written as ``"num/den"`` strings, keys are sorted and
the layout is fixed, so re-serializing a parsed report gives the same bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .inequalities import VerdictReport


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def roundtrip(text: str) -> str:
    return dumps(json.loads(text))


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def verdict_rows(verdicts: list[VerdictReport]) -> list[list[str]]:
    rows = []
    for v in verdicts:
        value = v.to_json()["evaluated_value"]
        rows.append([v.item, v.hypothesis_status, _cell(value), _cell(v.holds), v.formula_text])
    return rows


def markdown_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def verdicts_markdown(verdicts: list[VerdictReport]) -> str:
    return markdown_table(["item", "gate", "value", "holds", "inequality"], verdict_rows(verdicts))


def analysis_markdown(report) -> str:
    data = report.to_json()
    inv = data["invariants"]
    out = ["# Fibration analysis", ""]
    spec = data["spec"]
    out.append(f"base {spec['base']}, degree {spec['degree']}, l = {spec['simple_points']}, m = {spec['nodes']}")
    out.append("")
    out.append("## Invariants")
    out.append("")
    out.append(markdown_table(["name", "value"], [[k, _cell(inv[k])] for k in sorted(inv)]))
    out.append("## Cross checks")
    out.append("")
    checks = data["cross_checks"]
    out.append(markdown_table(["name", "value"], [[k, _cell(checks[k])] for k in sorted(checks)]))
    out.append("## Decompositions")
    out.append("")
    rows = []
    for name, dec in data["decompositions"].items():
        rows.append([
            name,
            str(len(dec["negative"])),
            _cell(dec["P_squared"]),
            _cell(dec["verification"]["orthogonal"] and dec["verification"]["catalog_nef"] and dec["verification"]["negative_definite"]),
            _cell(len(dec["closed_form_discrepancies"])),
        ])
    out.append(markdown_table(["divisor", "curves in N", "P^2", "verified", "closed-form discrepancies"], rows))
    out.append(f"relative minimality: {data['minimality']['verdict']}")
    out.append("")
    out.append("## Verdicts")
    out.append("")
    out.append(verdicts_markdown(report.verdicts))
    return "\n".join(out)


def write_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def verdicts_csv(verdicts: list[VerdictReport]) -> str:
    return write_csv(["item", "hypothesis_status", "evaluated_value", "holds", "formula_text"], verdict_rows(verdicts))
