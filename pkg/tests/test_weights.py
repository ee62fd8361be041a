from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from superbranch import (
    SuperWeight,
    WeightError,
    atyp_form,
    format_weight,
    is_dominant,
    is_integral,
    parse_weight,
    rho,
    twist,
    weight_sum,
)
from superbranch.weights import atyp_form_expanded

from .conftest import dominant_weights, rationals

W = parse_weight


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (1, 1, "-1/2|1/2"),
        (2, 0, "1/2,-1/2|"),
        (2, 2, "-1/2,-3/2|3/2,1/2"),
    ],
)
def test_rho_examples(m, n, expected):
    assert rho(m, n) == W(expected)


def test_rho_rejects_m_zero():
    with pytest.raises(WeightError):
        rho(0, 2)


@given(st.integers(1, 6), st.integers(0, 6))
def test_two_rho_is_integral(m, n):
    r = rho(m, n)
    assert all((2 * x).denominator == 1 for x in r.entries)
    assert all(x.denominator in (1, 2) for x in r.entries)


def test_atyp_form_examples():
    assert atyp_form(W("1,0|0,0"), 2, 1) == 0
    assert atyp_form(W("0|0"), 1, 1) == 0
    assert atyp_form(W("1|0"), 1, 1) == 1
    w = W("5,2,-1|3,3")
    assert atyp_form(w, 3, 2) == w.lam[2] + w.omega[1] - 2 + 1


def test_atyp_form_index_errors():
    with pytest.raises(WeightError):
        atyp_form(W("1,0|0"), 3, 1)
    with pytest.raises(WeightError):
        atyp_form(W("1,0|0"), 1, 2)
    with pytest.raises(WeightError):
        atyp_form(W("1,0|"), 1, 1)


@given(dominant_weights())
def test_closed_form_matches_term_by_term(w):
    for i in range(1, w.m + 1):
        for mu in range(1, w.n + 1):
            assert atyp_form(w, i, mu) == atyp_form_expanded(w, i, mu)


@given(dominant_weights())
def test_positive_corner_implies_all_positive(w):
    if atyp_form(w, w.m, w.n) > 0:
        assert all(atyp_form(w, i, mu) > 0 for i in range(1, w.m + 1) for mu in range(1, w.n + 1))


def test_dominance_and_integrality():
    assert is_dominant(W("1,0|0,0"))
    assert not is_dominant(W("0,1|0,0"))
    assert is_dominant(W("1/2,-1/2|1/2"))
    assert not is_dominant(W("1/2,0|0"))
    assert not is_dominant(W("0|0,1"))
    assert is_integral(W("1,0|0,0"))
    assert not is_integral(W("1/2,-1/2|1/2"))
    assert is_integral(W("3,3|-3,-3"))


def test_twist_and_weight_sum():
    assert twist(W("1,0|0,0"), 0) == W("1,0|0,0")
    assert twist(W("0,0|-1,-1"), -1) == W("-1,-1|0,0")
    assert weight_sum(W("1,0|0,0")) == 1
    assert weight_sum(W("2,1|1")) == 4
    assert weight_sum(W("5/2,5/2|-5/2,-5/2")) == 0


@given(dominant_weights(), rationals)
def test_twist_properties(w, s):
    assert twist(twist(w, s), -s) == w
    assert is_dominant(twist(w, s))
    assert weight_sum(twist(w, s)) == weight_sum(w) + s * (w.m - w.n)


@given(dominant_weights(min_n=0))
def test_format_parse_roundtrip(w):
    assert parse_weight(format_weight(w)) == w


def test_parse_errors_name_location():
    with pytest.raises(WeightError, match="exactly one"):
        parse_weight("1,0")
    with pytest.raises(WeightError, match="odd part, entry 2"):
        parse_weight("1|0,q")
    with pytest.raises(WeightError, match="empty even part"):
        parse_weight("|1")
    with pytest.raises(WeightError, match="entry 1"):
        parse_weight("1/0|")


def test_no_floats():
    with pytest.raises(TypeError):
        SuperWeight([0.5], [0])
    assert SuperWeight([F(1, 2)], [0]).lam == (F(1, 2),)
