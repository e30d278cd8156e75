#!/usr/bin/env python3
"""
Module containing the ring Sym of symmetric functions in the e-basis

Bubbles are named by symmetric functions here, and this is the only place
where the sign conventions for dotted bubbles (including negative dot
counts) live. Orientation names are geometric: a bubble whose right side
points upwards is counterclockwise.
"""
# Standard libraries
from dataclasses import dataclass
import enum
from fractions import Fraction
import functools
import logging
import re
# Local libraries
import heiscat.coeffs
import heiscat.errors


logger = logging.getLogger('heiscat')

# Maximum degree a SymPoly may reach; startup overrides it from the config
DEGREE_CAP = 32

_TERM_RE = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^e\[(\d+)\](?:\^(\d+))?$")


class SymPoly:
    """
    Element of Sym with exact rational coefficients in the e-basis

    terms maps a sorted tuple of positive parts (each part r standing for
    a factor e_r) to its coefficient. The empty tuple is the unit.
    """
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for parts, coeff in (terms or {}).items():
            coeff = heiscat.coeffs.to_fraction(coeff)
            if coeff == 0:
                continue
            if any(p <= 0 for p in parts):
                raise ValueError("Invalid e-monomial: {}".format(parts))
            key = tuple(sorted(parts))
            clean[key] = clean.get(key, 0) + coeff
            if clean[key] == 0:
                del clean[key]
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def constant(cls, value):
        return cls({(): value})

    @classmethod
    def e(cls, r):
        """
        The elementary symmetric function e_r (0 for r < 0, 1 for r = 0)
        """
        if r < 0:
            return cls()
        if r == 0:
            return cls.one()
        return cls({(r,): 1})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, SymPoly):
            return value
        return cls.constant(value)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(parts == () for parts in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    @property
    def degree(self):
        if not self.terms:
            return -1
        return max(sum(parts) for parts in self.terms)

    @property
    def max_part(self):
        return max((max(parts, default=0) for parts in self.terms), default=0)

    def is_homogeneous(self):
        return len({sum(parts) for parts in self.terms}) <= 1

    def __add__(self, other):
        other = SymPoly.coerce(other)
        terms = dict(self.terms)
        for parts, coeff in other.terms.items():
            terms[parts] = terms.get(parts, 0) + coeff
        return SymPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({parts: -c for parts, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-SymPoly.coerce(other))

    def __rsub__(self, other):
        return SymPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            scalar = heiscat.coeffs.to_fraction(other)
            return SymPoly({p: c*scalar for p, c in self.terms.items()})
        if self.degree + other.degree > DEGREE_CAP:
            raise heiscat.errors.ResourceCapError("SymPoly degree",
                                                  DEGREE_CAP)
        terms = {}
        for pa, ca in self.terms.items():
            for pb, cb in other.terms.items():
                key = tuple(sorted(pa + pb))
                terms[key] = terms.get(key, 0) + ca*cb
        return SymPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            try:
                other = SymPoly.constant(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self):
        """
        Terms ordered by decreasing degree, then lexicographically on parts
        """
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        text = ""
        for parts, coeff in self.sorted_terms():
            factors = []
            for part in sorted(set(parts)):
                power = parts.count(part)
                factor = "e[{}]".format(part)
                factors.append(factor if power == 1
                               else "{}^{}".format(factor, power))
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not text:
                text = ("-" if coeff < 0 else "") + body
            else:
                text += " {} {}".format("-" if coeff < 0 else "+", body)
        return text

    def __repr__(self):
        return "SymPoly({!r})".format(str(self))

    @classmethod
    def parse(cls, text):
        """
        Parse the text form produced by str(), e.g. '-2*e[1]^2*e[3] + e[2]'
        """
        stripped = text.strip()
        if stripped in ("", "0"):
            return cls()
        result = cls()
        pos = 0
        compact = stripped.replace(" ", "")
        while pos < len(compact):
            match = _TERM_RE.match(compact, pos)
            if match is None or not match.group(2):
                raise heiscat.errors.ParseError("Invalid Sym term", text, pos)
            sign = -1 if match.group(1) == "-" else 1
            coeff = Fraction(sign)
            parts = []
            for factor in match.group(2).split("*"):
                fmatch = _FACTOR_RE.match(factor)
                if fmatch:
                    power = int(fmatch.group(2) or 1)
                    parts += [int(fmatch.group(1))]*power
                    continue
                try:
                    coeff *= Fraction(factor)
                except ValueError:
                    raise heiscat.errors.ParseError(
                        "Invalid Sym factor {!r}".format(factor), text, pos)
            if any(p == 0 for p in parts):
                raise heiscat.errors.ParseError("e[0] is not a part", text, pos)
            result = result + cls({tuple(parts): coeff})
            pos = match.end()
        return result


def sym_add(a, b):
    return SymPoly.coerce(a) + b


def sym_mul(a, b):
    return SymPoly.coerce(a) * b


def sym_scale(a, scalar):
    return SymPoly.coerce(a) * heiscat.coeffs.to_fraction(scalar)


@functools.lru_cache(maxsize=None)
def h_in_e(r):
    """
    Complete symmetric function h_r in the e-basis

    Uses the recursion h_r = sum_i (-1)^(i-1) e_i h_(r-i), which is the
    cofactor expansion of det(e_(i-j+1)) along its first column.
    """
    if r < 0:
        return SymPoly()
    if r == 0:
        return SymPoly.one()
    result = SymPoly()
    for i in range(1, r+1):
        result = result + SymPoly.e(i) * h_in_e(r-i) * (-1)**(i-1)
    return result


def _hmono_mul(a, b):
    terms = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            key = tuple(sorted(pa + pb))
            terms[key] = terms.get(key, 0) + ca*cb
    return {p: c for p, c in terms.items() if c != 0}


@functools.lru_cache(maxsize=None)
def _e_in_h(r):
    if r == 0:
        return ((), Fraction(1)),
    acc = {}
    for i in range(1, r+1):
        for parts, coeff in _e_in_h(r-i):
            key = tuple(sorted(parts + (i,)))
            acc[key] = acc.get(key, 0) + coeff*(-1)**(i-1)
    return tuple((p, c) for p, c in sorted(acc.items()) if c != 0)


def e_in_h(r):
    """
    Elementary symmetric function e_r as a dict over h-monomials
    """
    if r < 0:
        return {}
    return dict(_e_in_h(r))


def to_h_basis(p):
    """
    Rewrite a SymPoly as a dict {sorted h-parts: coefficient}
    """
    result = {}
    for parts, coeff in SymPoly.coerce(p).terms.items():
        term = {(): coeff}
        for part in parts:
            term = _hmono_mul(term, e_in_h(part))
        for key, value in term.items():
            result[key] = result.get(key, 0) + value
    return {p: c for p, c in result.items() if c != 0}


def series_identity_check(order):
    """
    Check e(u) h(-u) = 1 coefficientwise up to the given order
    """
    for t in range(order+1):
        total = SymPoly()
        for r in range(t+1):
            total = total + SymPoly.e(r) * h_in_e(t-r) * (-1)**(t-r)
        expected = SymPoly.one() if t == 0 else SymPoly()
        if total != expected:
            logger.debug("Series identity fails at degree {}".format(t))
            return False
    return True


class Orientation(enum.Enum):
    CW = "cw"
    CCW = "ccw"

    def reverse(self):
        return Orientation.CCW if self is Orientation.CW else Orientation.CW


@dataclass(frozen=True)
class BubbleSymbol:
    """
    A closed dotted loop; dots may be negative (fake bubbles)
    """
    orientation: Orientation
    dots: int
    k: int


@functools.lru_cache(maxsize=None)
def _bubble_value(orientation, dots, k):
    if orientation is Orientation.CW:
        # clockwise with r+k-1 dots is -e_r
        return -SymPoly.e(dots-k+1)
    # counterclockwise with r-k-1 dots is (-1)^r h_r
    r = dots+k+1
    return h_in_e(r) * (-1)**r if r >= 0 else SymPoly()


def bubble_to_sym(bubble):
    """
    Value of a dotted bubble as a symmetric function

    Below the vanishing threshold the result is 0, except at the single
    dot count where the bubble is the scalar -1 (clockwise, k-1 dots) or
    +1 (counterclockwise, -k-1 dots).
    """
    return _bubble_value(Orientation(bubble.orientation), bubble.dots,
                         bubble.k)


def bubble(orientation, dots, k):
    return _bubble_value(Orientation(orientation), dots, k)


def specialize(p, d, k=None):
    """
    Evaluate p at h_r = (-1)^r delta_r, equivalently e_r = (delta^-1)_r

    @param p: SymPoly to evaluate
    @param d: DeltaSeries with order at least the largest part of p
    @param k: central charge, only used for the log message
    """
    p = SymPoly.coerce(p)
    if p.max_part > d.order:
        raise heiscat.errors.SeriesOrderError(
            "Series order {} too small for part {} (k={})".format(
                d.order, p.max_part, k))
    inverse = heiscat.coeffs.series_inv(d)
    result = Fraction(0)
    for parts, coeff in p.terms.items():
        value = coeff
        for part in parts:
            value *= inverse[part]
        result += value
    return result


def specialize_lowest(p, delta):
    """
    Pass to the quotient where the central bubble -e_1 equals delta
    """
    p = SymPoly.coerce(p)
    image = SymPoly.constant(-heiscat.coeffs.to_fraction(delta))
    result = SymPoly()
    for parts, coeff in p.terms.items():
        term = SymPoly.constant(coeff)
        for part in parts:
            term = term * (image if part == 1 else SymPoly.e(part))
        result = result + term
    return result


def omega_sym(p):
    """
    The involution e_j -> (-1)^j h_j of Sym
    """
    p = SymPoly.coerce(p)
    result = SymPoly()
    for parts, coeff in p.terms.items():
        term = SymPoly.constant(coeff)
        for part in parts:
            term = term * h_in_e(part) * (-1)**part
        result = result + term
    return result
