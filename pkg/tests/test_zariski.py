from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fibslope.lattice import pair
from fibslope.pencil import ChainSpec, PencilSpec, fibration_from_spec
from fibslope.zariski import (
    CatalogCurve,
    CatalogError,
    CurveCatalog,
    DecompositionError,
    MalformedChainError,
    PairingDivisor,
    ZariskiDecomposition,
    adjoint,
    closed_form_n1,
    closed_form_n1_prime,
    closed_form_n2,
    predicted_negative_part_cubic,
    verify_decomposition,
    zariski_fujita,
)

chain_lengths = st.lists(st.integers(0, 4), min_size=1, max_size=6)
bisecant_lengths = st.lists(st.integers(0, 3), max_size=6)


def sympy_negative_part(divisor, catalog, support):
    """Oracle: solve Gram(S) x = (D.E)_E with sympy, one connected block at a time."""
    result = {}
    remaining = list(support)
    while remaining:
        block = [remaining.pop(0)]
        grew = True
        while grew:
            grew = False
            for e in list(remaining):
                if any(catalog.gram(e, f) for f in block):
                    block.append(e)
                    remaining.remove(e)
                    grew = True
        gram = sympy.Matrix([[int(catalog.gram(e, f)) for f in block] for e in block])
        assert gram.is_negative_definite
        rhs = sympy.Matrix([int(pair(divisor, catalog.curve(e).cls)) for e in block])
        for e, v in zip(block, gram.LUsolve(rhs)):
            num, den = sympy.fraction(v)
            result[e] = Fraction(int(num), int(den))
    return result


def test_plane18_adjoint3(plane18_model):
    m = plane18_model
    dec = zariski_fujita(m.fiber + 3 * m.canonical, m.catalog)
    sections = [c.label for c in m.catalog.of_kind("section")]
    bisecants = [c.label for c in m.catalog.of_kind("bisecant")]
    assert {dec.negative[e] for e in sections} == {2} and len(sections) == 108
    assert {dec.negative[e] for e in bisecants} == {1} and len(bisecants) == 54
    assert dec.positive.coefficients == tuple([9] + [0] * 162)
    assert dec.p_squared == 81
    assert dec.p_squared == 9 * 495 - 60 * 81 + 4 * 108 + 54
    assert verify_decomposition(dec, m.catalog).passed


def test_plane18_adjoint2(plane18_model):
    m = plane18_model
    dec = zariski_fujita(m.fiber + 2 * m.canonical, m.catalog)
    assert dec.p_squared == 144
    assert set(dec.negative.values()) == {1} and len(dec.negative) == 108


def test_nef_input_gives_empty_negative_part(plane18_model):
    m = plane18_model
    dec = zariski_fujita(m.fiber, m.catalog)
    assert dec.negative == {} and dec.p_squared == 0


@settings(max_examples=25)
@given(chain_lengths, bisecant_lengths)
def test_embedded_configurations_match_closed_forms_and_sympy(sections, bisecants):
    used_l = sum(v + 1 for v in sections)
    m = sum(f + 1 for f in bisecants)
    d = 12
    pad = d * d - 4 * m - used_l
    spec = PencilSpec("P2", d, used_l + pad, m, chains=ChainSpec(sections=tuple(sections) + (0,) * pad, bisecants=tuple(bisecants)))
    model = fibration_from_spec(spec)
    cat = model.catalog
    d2 = model.fiber + 2 * model.canonical
    dec2 = zariski_fujita(d2, cat)
    n1 = closed_form_n1(cat)
    assert dec2.negative == n1.multiplicities
    assert n1.square == -model.l
    assert dec2.negative == sympy_negative_part(d2, cat, list(dec2.negative))
    d3 = model.fiber + 3 * model.canonical
    dec3 = zariski_fujita(d3, cat)
    assert dec3.negative == predicted_negative_part_cubic(cat)
    assert closed_form_n2(cat).square == -m
    assert verify_decomposition(dec3, cat).passed


@settings(max_examples=60)
@given(chain_lengths, bisecant_lengths)
def test_abstract_configurations(sections, bisecants):
    cat = CurveCatalog.from_configuration(sections, (), bisecants)
    dec = zariski_fujita(adjoint(cat, 2), cat)
    n1 = closed_form_n1(cat)
    assert dec.negative == n1.multiplicities
    assert n1.square == -sum(v + 1 for v in sections)
    n2 = closed_form_n2(cat)
    assert n2.square == -sum(f + 1 for f in bisecants)
    report = verify_decomposition(dec, cat)
    assert report.orthogonal and report.catalog_nef and report.negative_definite


@settings(max_examples=30)
@given(chain_lengths, bisecant_lengths, st.randoms(use_true_random=False))
def test_decomposition_independent_of_catalog_order(sections, bisecants, rnd):
    cat = CurveCatalog.from_configuration(sections, (), bisecants)
    pairings = {}
    for e in cat.labels:
        for f, v in cat.neighbours(e).items():
            pairings[(e, f)] = v
    curves = list(cat.curves)
    rnd.shuffle(curves)
    shuffled = CurveCatalog(curves, pairings, cat.k_dot, cat.c_dot)
    a = zariski_fujita(adjoint(cat, 3), cat)
    b = zariski_fujita(adjoint(shuffled, 3), shuffled)
    assert dict(a.negative) == dict(b.negative)


def test_horizontal_chain_square_discrepancy_is_reported():
    cat = CurveCatalog.from_configuration([0], [2], [])
    part = closed_form_n1_prime(cat)
    assert part.count == 3
    assert part.square == -6 and part.predicted_square == -3
    assert not part.matches


def test_horizontal_chain_decomposition_is_valid():
    cat = CurveCatalog.from_configuration([1, 0], [0, 2], [1])
    dec = zariski_fujita(adjoint(cat, 3), cat)
    assert verify_decomposition(dec, cat).passed
    assert "Eh2_1" in dec.negative


def test_non_negative_definite_catalog_rejected():
    cat = CurveCatalog.from_configuration([0, 0], (), [])
    bad = cat.with_corrupted_pairing("Gamma1", "Gamma2", 1)
    with pytest.raises(DecompositionError, match="not negative definite"):
        zariski_fujita(adjoint(bad, 2), bad)


def test_corrupted_gram_gives_orthogonality_failures(plane18_model):
    m = plane18_model
    d3 = m.fiber + 3 * m.canonical
    dec = zariski_fujita(d3, m.catalog)
    bad = m.catalog.with_corrupted_pairing("Gamma1", "Gamma1", -2)
    data = PairingDivisor({c.label: pair(d3, c.cls) for c in m.catalog}, d3.square())
    from dataclasses import replace

    report = verify_decomposition(replace(dec, divisor=data), bad)
    assert not report.orthogonal
    assert any(f.startswith("P.Gamma1") for f in report.failures)


def test_proposed_negative_part_with_wrong_multiplicity_fails_verification():
    cat = CurveCatalog.from_configuration([2], (), [])
    wrong = ZariskiDecomposition.from_negative_part(adjoint(cat, 2), {"Gamma1": 3, "E1_1": 1, "E1_2": 1}, cat)
    report = verify_decomposition(wrong, cat)
    assert not report.passed


def test_malformed_chain():
    curves = [CatalogCurve("Gamma1", "section"), CatalogCurve("E1_1", "chain", "Gamma1", 1)]
    cat = CurveCatalog(curves, {("Gamma1", "Gamma1"): -1, ("E1_1", "E1_1"): -2}, {"Gamma1": -1, "E1_1": 0}, {"Gamma1": 1, "E1_1": 0})
    with pytest.raises(MalformedChainError):
        closed_form_n1(cat)


def test_kind_numbers_enforced():
    with pytest.raises(CatalogError):
        CurveCatalog([CatalogCurve("Gamma1", "section")], {("Gamma1", "Gamma1"): -2}, {"Gamma1": -1}, {"Gamma1": 1})


def test_embedded_catalog_agrees_with_classes(plane18_model):
    assert plane18_model.catalog.check_against_classes() == []


def test_to_json_shape(plane18_model):
    m = plane18_model
    data = zariski_fujita(m.fiber + 3 * m.canonical, m.catalog).to_json()
    assert data["P_squared"] == "81/1"
    assert data["negative"][0] == {"label": "Gamma1", "multiplicity": "2/1"}
    assert len(data["gram_minors"]) == 162


def test_random_seeded_configs_are_stable():
    rng = random.Random(5)
    for _ in range(20):
        sections = [rng.randint(0, 4) for _ in range(rng.randint(1, 6))]
        cat = CurveCatalog.from_configuration(sections)
        assert zariski_fujita(adjoint(cat, 2), cat).iterations >= 1
