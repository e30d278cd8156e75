#!/usr/bin/env python3
"""
Module containing the exact scalar layer: one-variable polynomials in u
and truncated power series in u^-1

All arithmetic runs over fractions.Fraction, so nothing downstream ever
sees a floating point number.
"""
# Standard libraries
from dataclasses import dataclass
from fractions import Fraction
import logging
from tokenize import TokenError
# 3rd party libraries
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
# Local libraries
import heiscat.errors


logger = logging.getLogger('heiscat')

_U = sympy.Symbol("u")
_TRANSFORMATIONS = standard_transformations + (
    implicit_multiplication_application,
    convert_xor,
)


def to_fraction(value):
    """
    Convert an int, Fraction, string or sympy Rational into a Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ValueError("Invalid rational value: {}".format(value))
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def format_fraction(value):
    return str(to_fraction(value))


@dataclass(frozen=True)
class Poly:
    """
    Dense polynomial in the variable u

    coeffs[i] is the coefficient of u^i; trailing zeros are trimmed, so
    the zero polynomial has an empty tuple.
    """
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [to_fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def parse(cls, text):
        """
        Parse expressions such as 'u^2 + 3*u - 1/2' or '(u-1)(u-2)'
        """
        try:
            expr = parse_expr(text,
                              local_dict={"u": _U},
                              transformations=_TRANSFORMATIONS,
                              evaluate=True)
            poly = sympy.Poly(expr, _U)
        except (SyntaxError, TypeError, ValueError, TokenError,
                sympy.SympifyError, sympy.PolynomialError) as err:
            raise heiscat.errors.ParseError(
                "Invalid polynomial ({})".format(err), text, 0)
        coeffs = poly.all_coeffs()
        if not all(c.is_Rational for c in coeffs):
            raise heiscat.errors.ParseError(
                "Polynomial coefficients must be rational", text, 0)
        return cls(tuple(to_fraction(c) for c in reversed(coeffs)))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,)*degree + (coeff,))

    @classmethod
    def from_roots(cls, roots):
        result = cls((1,))
        for root in roots:
            result = result * cls((-to_fraction(root), 1))
        return result

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,)*(size-len(self.coeffs))
        b = other.coeffs + (0,)*(size-len(other.coeffs))
        return Poly(tuple(x+y for x, y in zip(a, b)))

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(tuple(c*to_fraction(other) for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly()
        result = [Fraction(0)] * (len(self.coeffs)+len(other.coeffs)-1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                result[i+j] += a*b
        return Poly(tuple(result))

    __rmul__ = __mul__

    def __call__(self, value):
        value = to_fraction(value)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result*value + c
        return result

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for degree in range(self.degree, -1, -1):
            coeff = self.coeffs[degree]
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if degree == 0:
                body = str(mag)
            else:
                var = "u" if degree == 1 else "u^{}".format(degree)
                body = var if mag == 1 else "{}*{}".format(mag, var)
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += " {} {}".format(sign, body)
        return text


def poly_divmod(a, b):
    """
    Long division of a by the monic polynomial b

    Returns the tuple (quotient, remainder) with deg(remainder) < deg(b)
    """
    if not b.is_monic():
        raise ValueError("Invalid divisor, it must be monic: {}".format(b))
    remainder = list(a.coeffs)
    quotient = [Fraction(0)] * max(len(remainder)-b.degree, 0)
    for shift in range(len(remainder)-1-b.degree, -1, -1):
        lead = remainder[shift+b.degree]
        if lead == 0:
            continue
        quotient[shift] = lead
        for i, c in enumerate(b.coeffs):
            remainder[shift+i] -= lead*c
    return Poly(tuple(quotient)), Poly(tuple(remainder[:b.degree]))


@dataclass(frozen=True)
class DeltaSeries:
    """
    Power series in u^-1 truncated after u^-order

    coefficients has exactly order+1 entries.
    """
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(to_fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("Invalid series: at least one coefficient needed")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, r):
        if r < 0:
            return Fraction(0)
        if r > self.order:
            raise heiscat.errors.SeriesOrderError(
                "Series of order {} has no coefficient {}".format(self.order, r))
        return self.coefficients[r]

    def truncate(self, order):
        return DeltaSeries(self.coefficients[:order+1])

    def __str__(self):
        return ", ".join(format_fraction(c) for c in self.coefficients)


def _reversed_coefficients(poly, order):
    """
    Coefficients of u^-deg(poly) * poly(u) as a series in u^-1
    """
    coeffs = list(reversed(poly.coeffs))[:order+1]
    return DeltaSeries(tuple(coeffs) + (0,)*(order+1-len(coeffs)))


def series_mul(a, b):
    """
    Truncated Cauchy product at the smaller of the two orders
    """
    order = min(a.order, b.order)
    result = [Fraction(0)] * (order+1)
    for i in range(order+1):
        for j in range(order+1-i):
            result[i+j] += a.coefficients[i]*b.coefficients[j]
    return DeltaSeries(tuple(result))


def series_inv(a):
    """
    Multiplicative inverse of a series with invertible constant term
    """
    lead = a.coefficients[0]
    if lead == 0:
        raise ValueError("Invalid series, non-invertible leading coefficient")
    result = [1/lead]
    for n in range(1, a.order+1):
        acc = sum((a.coefficients[i]*result[n-i] for i in range(1, n+1)),
                  Fraction(0))
        result.append(-acc/lead)
    return DeltaSeries(tuple(result))


def series_scale(a, scalar):
    return DeltaSeries(tuple(c*to_fraction(scalar) for c in a.coefficients))


def delta_series(f, fprime, order):
    """
    Expand u^-k f'(u) / f(u) in powers of u^-1, with k = deg f' - deg f

    Both polynomials must be monic, so the constant term is always 1.
    """
    if not (f.is_monic() and fprime.is_monic()):
        raise ValueError("Invalid cyclotomic data, f and f' must be monic")
    if order < 0:
        raise ValueError("Invalid series order: {}".format(order))
    numerator = _reversed_coefficients(fprime, order)
    denominator = _reversed_coefficients(f, order)
    return series_mul(numerator, series_inv(denominator))


def delta_prime_series(f, fprime, order):
    """
    The dual series -u^k f(u) / f'(u), which is -delta^-1
    """
    return series_scale(delta_series(fprime, f, order), -1)
