#!/usr/bin/env python3
"""
Tests for the rational polynomials and truncated series
"""
# Standard libraries
from fractions import Fraction
# 3rd party libraries
from hypothesis import given, settings, strategies as st
import pytest
# Local libraries
import heiscat.coeffs
import heiscat.errors
import heiscat.hecke
import heiscat.verify
from heiscat.coeffs import DeltaSeries, Poly


monic = st.lists(st.integers(-3, 3), max_size=3).map(
    lambda c: Poly(tuple(c) + (1,)))


def test_parse_and_str():
    poly = Poly.parse("u^2 + 3*u - 1/2")
    assert poly.coeffs == (Fraction(-1, 2), 3, 1)
    assert str(Poly.parse("(u-1)(u-2)")) == "u^2 - 3*u + 2"
    assert str(Poly.parse("u")) == "u"
    assert poly.is_monic()


def test_parse_error_is_reported():
    with pytest.raises(heiscat.errors.ParseError):
        Poly.parse("u +* 2")


def test_from_roots_matches_product():
    assert Poly.from_roots([1, 2]) == Poly.parse("(u-1)(u-2)")
    assert Poly.from_roots([1, 2])(2) == 0


def test_divmod():
    quotient, remainder = heiscat.coeffs.poly_divmod(Poly.parse("u^3 + 1"),
                                                     Poly.parse("u + 1"))
    assert quotient == Poly.parse("u^2 - u + 1")
    assert remainder.is_zero()
    with pytest.raises(ValueError):
        heiscat.coeffs.poly_divmod(Poly.parse("u"), Poly.parse("2*u"))


def test_delta_series_alternates():
    series = heiscat.coeffs.delta_series(Poly.parse("u+1"), Poly.parse("1"), 3)
    assert series.coefficients == (1, -1, 1, -1)
    assert str(series) == "1, -1, 1, -1"


def test_delta_series_needs_monic():
    with pytest.raises(ValueError):
        heiscat.coeffs.delta_series(Poly.parse("2*u"), Poly.parse("1"), 3)


def test_series_index_beyond_order():
    series = DeltaSeries((1, 2, 3))
    assert series[-1] == 0
    assert series[2] == 3
    with pytest.raises(heiscat.errors.SeriesOrderError):
        series[3]


@settings(max_examples=40, deadline=None)
@given(monic, monic)
def test_delta_times_dual_is_minus_one(f, fprime):
    order = 6
    product = heiscat.coeffs.series_mul(
        heiscat.coeffs.delta_series(f, fprime, order),
        heiscat.coeffs.delta_prime_series(f, fprime, order))
    assert product == DeltaSeries((-1,) + (0,)*order)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5),
                min_size=1, max_size=6).filter(lambda c: c[0] != 0))
def test_series_inverse(coefficients):
    series = DeltaSeries(tuple(coefficients))
    one = heiscat.coeffs.series_mul(series, heiscat.coeffs.series_inv(series))
    assert one == DeltaSeries((1,) + (0,)*series.order)


def test_delta_of_cyclotomic_polynomial():
    delta = heiscat.coeffs.delta_series(Poly.parse("u^2+u+1"), Poly((1,)), 6)
    assert delta.coefficients == (1, -1, 0, 1, -1, 0, 1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_z_times_delta_vanishes(coefficients):
    data = heiscat.hecke.CyclotomicData(Poly(tuple(coefficients) + (1,)))
    residues = heiscat.verify.cyclotomic_residues(data, 8)
    assert len(residues) == 8
    assert not any(residues)
