#!/usr/bin/env python3
"""
Tests for symmetric functions and bubble values
"""
# Standard libraries
from fractions import Fraction
# 3rd party libraries
from hypothesis import given, settings, strategies as st
import pytest
# Local libraries
import heiscat.coeffs
import heiscat.errors
import heiscat.symfunc
from heiscat.symfunc import Orientation, SymPoly


def small_sym():
    monomial = st.builds(
        lambda parts, coeff: SymPoly({tuple(parts): coeff}),
        st.lists(st.integers(1, 3), max_size=3),
        st.integers(-3, 3))
    return st.lists(monomial, max_size=4).map(
        lambda terms: sum(terms, SymPoly()))


def test_h_in_e_low_degrees():
    e1, e2 = SymPoly.e(1), SymPoly.e(2)
    assert heiscat.symfunc.h_in_e(1) == e1
    assert heiscat.symfunc.h_in_e(2) == e1*e1 - e2
    assert heiscat.symfunc.h_in_e(0) == 1
    assert heiscat.symfunc.h_in_e(-1).is_zero()


def test_generating_series_identity():
    assert heiscat.symfunc.series_identity_check(6)


def test_e_in_h_is_inverse_conversion():
    assert heiscat.symfunc.e_in_h(2) == {(1, 1): 1, (2,): -1}
    assert heiscat.symfunc.to_h_basis(SymPoly.e(1)) == {(1,): 1}


@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_bubble_thresholds(k):
    # lowest clockwise and counterclockwise real or fake bubbles
    assert heiscat.symfunc.bubble(Orientation.CW, k-1, k) == -1
    assert heiscat.symfunc.bubble(Orientation.CCW, -k-1, k) == 1
    assert heiscat.symfunc.bubble(Orientation.CW, k-2, k).is_zero()
    assert heiscat.symfunc.bubble(Orientation.CCW, -k-2, k).is_zero()


def test_bubble_values_at_minus_one():
    assert heiscat.symfunc.bubble(Orientation.CW, 0, -1) == -SymPoly.e(2)
    assert heiscat.symfunc.bubble(Orientation.CCW, 0, -1) == 1
    assert heiscat.symfunc.bubble(Orientation.CCW, 1, -1) == -SymPoly.e(1)
    symbol = heiscat.symfunc.BubbleSymbol(Orientation.CW, 1, 1)
    assert heiscat.symfunc.bubble_to_sym(symbol) == -SymPoly.e(1)


@pytest.mark.parametrize("k", [-2, 0, 3])
def test_bubble_series_are_inverse(k):
    for t in range(5):
        total = SymPoly()
        for a in range(t+1):
            total = total + heiscat.symfunc.bubble(Orientation.CCW, a-k-1, k) \
                * heiscat.symfunc.bubble(Orientation.CW, t-a+k-1, k)
        assert total == (-1 if t == 0 else 0)


def test_parse_and_str():
    p = SymPoly.parse("-2*e[1]^2*e[3] + e[2] - 1/2")
    assert p.terms == {(1, 1, 3): -2, (2,): 1, (): Fraction(-1, 2)}
    assert SymPoly.parse(str(p)) == p
    assert str(SymPoly()) == "0"
    with pytest.raises(heiscat.errors.ParseError):
        SymPoly.parse("e[0]")


def test_degree_cap():
    big = SymPoly.e(heiscat.symfunc.DEGREE_CAP)
    with pytest.raises(heiscat.errors.ResourceCapError):
        big * SymPoly.e(1)


def test_specialize_uses_inverse_series():
    delta = heiscat.coeffs.delta_series(heiscat.coeffs.Poly.parse("u+1"),
                                        heiscat.coeffs.Poly.parse("1"), 3)
    # delta = 1 - u^-1 + ..., its inverse is 1 + u^-1
    assert heiscat.symfunc.specialize(SymPoly.e(1), delta) == 1
    assert heiscat.symfunc.specialize(SymPoly.e(2), delta) == 0
    with pytest.raises(heiscat.errors.SeriesOrderError):
        heiscat.symfunc.specialize(SymPoly.e(5), delta)


def test_specialize_lowest():
    p = SymPoly.e(1)*SymPoly.e(2) - SymPoly.e(1)
    result = heiscat.symfunc.specialize_lowest(p, 3)
    assert result == SymPoly.e(2)*(-3) + 3


@settings(max_examples=30, deadline=None)
@given(small_sym())
def test_omega_is_an_involution(p):
    assert heiscat.symfunc.omega_sym(heiscat.symfunc.omega_sym(p)) == p


@settings(max_examples=30, deadline=None)
@given(small_sym(), small_sym(), small_sym())
def test_ring_laws(a, b, c):
    assert a*(b + c) == a*b + a*c
    assert (a*b)*c == a*(b*c)
    assert a + b == b + a


@pytest.mark.parametrize("text", ["u", "u^2+u+1", "u^3-2"])
def test_specialized_bubble_series(text):
    f = heiscat.coeffs.Poly.parse(text)
    one = heiscat.coeffs.Poly((1,))
    k = -f.degree
    order = 5
    delta = heiscat.coeffs.delta_series(f, one, order)
    ccw = heiscat.coeffs.DeltaSeries(tuple(
        heiscat.symfunc.specialize(
            heiscat.symfunc.bubble(Orientation.CCW, r-k-1, k), delta)
        for r in range(order+1)))
    cw = heiscat.coeffs.DeltaSeries(tuple(
        heiscat.symfunc.specialize(
            heiscat.symfunc.bubble(Orientation.CW, r+k-1, k), delta)
        for r in range(order+1)))
    assert ccw == delta
    assert cw == heiscat.coeffs.delta_prime_series(f, one, order)
    assert heiscat.coeffs.series_mul(ccw, cw) == \
        heiscat.coeffs.DeltaSeries((-1,) + (0,)*order)
