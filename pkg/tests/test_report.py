from __future__ import annotations

import json

from fibslope.report import analysis_markdown, dumps, roundtrip, verdicts_csv


def test_json_roundtrip_is_byte_identical(plane18, quadric26):
    for report in (plane18, quadric26):
        text = dumps(report.to_json())
        assert roundtrip(text) == text
        assert text.endswith("\n") and "\r" not in text


def test_json_has_both_closed_forms_and_lattice_values(plane18):
    data = plane18.to_json()
    assert data["cross_checks"]["a_closed_form"] == data["cross_checks"]["a_lattice"] == 495
    assert data["decompositions"]["C+3K"]["P_squared"] == "81/1"
    assert data["decompositions"]["C+3K"]["closed_form_discrepancies"] == []
    assert data["closed_forms"]["N1"]["square"] == "-108/1"
    assert data["minimality"]["verdict"] == "Certified"
    assert json.loads(dumps(data)) == data


def test_markdown_and_csv(quadric24):
    md = analysis_markdown(quadric24)
    assert "| six_b_margin |" in md
    csv_text = verdicts_csv(quadric24.verdicts)
    lines = csv_text.splitlines()
    assert lines[0] == "item,hypothesis_status,evaluated_value,holds,formula_text"
    assert len(lines) == 11
