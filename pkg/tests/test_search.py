from __future__ import annotations

from fractions import Fraction

import pytest

from fibslope.search import SearchRangeError, SearchRequest, search


def test_plane_l_equals_2m_family():
    rows = search(SearchRequest("PlaneNodal", {"d": (12, 24)}, ("L_eq_2m", "FourLPlusM_le_6b")))
    assert [dict(r.params)["d"] for r in rows] == [18, 24]
    first = rows[0]
    assert (first.g, first.a, first.b, first.l, first.m, first.margin) == (82, 495, 81, 108, 54, 9)


def test_plane_family_matches_3d_le_m():
    # oracle: with 6m = d^2, 4l + m <= 6b is equivalent to 3d <= m
    rows = search(SearchRequest("PlaneNodal", {"d": (6, 48)}, ("L_eq_2m", "FourLPlusM_le_6b")))
    expected = [d for d in range(6, 49) if d * d % 6 == 0 and 3 * d <= d * d // 6]
    assert [dict(r.params)["d"] for r in rows] == expected


def test_quadric_search():
    rows = search(SearchRequest(
        "F0Nodal", {"alpha": (8, 8), "beta": (8, 8), "m": (20, 30)},
        ("Balance", "Mobility", "RelMin", "FourLPlusM_le_6b"),
    ))
    assert [r.m for r in rows] == [25, 26]
    # oracle: 3m in [2/3 ab + 2a + 2b, ab + a + b)
    assert all(Fraction(2 * 64, 3) + 32 <= 3 * m < 80 for m in (25, 26))


def test_equality_search():
    rows = search(SearchRequest("F0Nodal", {"alpha": (8, 8), "beta": (8, 8)}, ("Balance", "Equality_a_eq_6b")))
    assert [r.m for r in rows] == [24]
    assert 2 * 8 + 2 * 8 == rows[0].m + 8


def test_equality_family_is_2a_plus_2b():
    rows = search(SearchRequest("F0Nodal", {"alpha": (3, 12), "beta": (3, 12)}, ("Balance", "Equality_a_eq_6b")))
    for r in rows:
        p = dict(r.params)
        assert 2 * p["alpha"] + 2 * p["beta"] == r.m + 8


def test_smooth_family_rows():
    rows = search(SearchRequest("PlaneSmooth", {"d": (4, 20)}, ()))
    assert [r.margin for r in rows] == [9 - 3 * d for d in range(4, 21)]


def test_parallel_search_is_identical():
    req = SearchRequest("F0Nodal", {"alpha": (8, 11), "beta": (8, 11)}, ("Balance", "Mobility", "RelMin"))
    assert search(req) == search(req, jobs=3)


def test_rows_are_sorted():
    rows = search(SearchRequest("PlaneNodal", {"d": (10, 14)}, ("Balance", "Mobility")))
    keys = [tuple(v for _, v in r.params) for r in rows]
    assert keys == sorted(keys)


def test_range_errors():
    with pytest.raises(SearchRangeError):
        SearchRequest("PlaneNodal", {"d": (12, 65)})
    with pytest.raises(SearchRangeError):
        SearchRequest("PlaneNodal", {"d": (20, 12)})
    with pytest.raises(ValueError):
        SearchRequest("PlaneNodal", {"alpha": (8, 8)})
    with pytest.raises(ValueError):
        SearchRequest("PlaneNodal", {"d": (8, 8)}, ("Bogus",))
