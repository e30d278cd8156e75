#!/usr/bin/env python3
"""
Module containing degenerate affine Hecke algebras and their cyclotomic
quotients in PBW form

An element is a linear combination of monomials x^a w with the polynomial
part on the left. Permutations are tuples in one-line notation with
values 1..n, and products of permutations compose right to left.
"""
# Standard libraries
from dataclasses import dataclass, field
from fractions import Fraction
import functools
import itertools
import logging
import math
# Local libraries
import heiscat.coeffs
import heiscat.errors


logger = logging.getLogger('heiscat')


def identity_perm(n):
    return tuple(range(1, n+1))


def perm_compose(u, v):
    """
    Product u*v, i.e. first v then u
    """
    return tuple(u[i-1] for i in v)


def simple_perm(n, j):
    """
    The simple transposition s_j = (j, j+1) of S_n
    """
    if not 1 <= j < n:
        raise ValueError("Invalid simple transposition s_{} in S_{}".format(j, n))
    perm = list(range(1, n+1))
    perm[j-1], perm[j] = perm[j], perm[j-1]
    return tuple(perm)


def left_times_simple(j, w):
    """
    s_j * w: swap the values j and j+1 in the one-line notation of w
    """
    return tuple(j+1 if v == j else j if v == j+1 else v for v in w)


def left_descent(w):
    """
    Smallest j with w = s_j w' and w' shorter, or None for the identity
    """
    position = {v: i for i, v in enumerate(w)}
    for j in range(1, len(w)):
        if position[j+1] < position[j]:
            return j
    return None


def reduced_word(w):
    """
    Indices j1..jr with w = s_j1 ... s_jr
    """
    word = []
    while True:
        j = left_descent(w)
        if j is None:
            return word
        word.append(j)
        w = left_times_simple(j, w)


def _divided_difference(exps, j):
    """
    (x^c - s_j(x^c)) / (x_j - x_(j+1)) as a dict {exponents: coefficient}
    """
    p, q = exps[j-1], exps[j]
    if p == q:
        return {}
    sign = 1 if p > q else -1
    low, high = min(p, q), max(p, q)
    result = {}
    for i in range(high-low):
        new = list(exps)
        new[j-1] = low + high-low-1-i
        new[j] = low + i
        result[tuple(new)] = Fraction(sign)
    return result


@functools.lru_cache(maxsize=None)
def _perm_times_mono(u, b):
    """
    Straighten w * x^b into a sum of PBW monomials x^c w'

    Returns a tuple of ((c, w'), coefficient) pairs.
    """
    j = left_descent(u)
    if j is None:
        return (((b, u), Fraction(1)),)
    shorter = left_times_simple(j, u)
    result = {}
    for (c, w), coeff in _perm_times_mono(shorter, b):
        # s_j x^c = x^(s_j c) s_j - d_j(x^c)
        swapped = list(c)
        swapped[j-1], swapped[j] = swapped[j], swapped[j-1]
        key = (tuple(swapped), left_times_simple(j, w))
        result[key] = result.get(key, 0) + coeff
        for mono, dcoeff in _divided_difference(c, j).items():
            key = (mono, w)
            result[key] = result.get(key, 0) - coeff*dcoeff
    return tuple((k, c) for k, c in result.items() if c != 0)


class HeckeElem:
    """
    Element of H_n (or of H_n^f once reduced) in PBW form

    terms maps (permutation, exponent vector) to a Fraction and stands for
    the sum of coefficient * x^exponents * permutation.
    """
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for key, coeff in (terms or {}).items():
            perm, exps = key
            if len(perm) != n or len(exps) != n:
                raise ValueError("Invalid PBW monomial for n={}: {}".format(
                    n, key))
            coeff = heiscat.coeffs.to_fraction(coeff)
            if coeff != 0:
                self.terms[(tuple(perm), tuple(exps))] = coeff

    @classmethod
    def one(cls, n):
        return cls(n, {(identity_perm(n), (0,)*n): 1})

    @classmethod
    def x(cls, n, i, power=1):
        if not 1 <= i <= n:
            raise ValueError("Invalid generator x_{} in H_{}".format(i, n))
        exps = [0]*n
        exps[i-1] = power
        return cls(n, {(identity_perm(n), tuple(exps)): 1})

    @classmethod
    def s(cls, n, j):
        return cls(n, {(simple_perm(n, j), (0,)*n): 1})

    @classmethod
    def from_perm(cls, perm, exps=None):
        n = len(perm)
        return cls(n, {(tuple(perm), tuple(exps or (0,)*n)): 1})

    def is_zero(self):
        return not self.terms

    def embed(self, extra=1):
        """
        Image under H_n -> H_(n+extra), fixing the new strands
        """
        n = self.n + extra
        return HeckeElem(n, {
            (perm + tuple(range(self.n+1, n+1)), exps + (0,)*extra): c
            for (perm, exps), c in self.terms.items()
        })

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return HeckeElem(self.n, terms)

    def __neg__(self):
        return HeckeElem(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return haff_mul(self, other)
        scalar = heiscat.coeffs.to_fraction(other)
        return HeckeElem(self.n, {k: c*scalar for k, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (perm, exps), coeff in sorted(self.terms.items()):
            factors = ["x{}^{}".format(i+1, a) for i, a in enumerate(exps) if a]
            factors.append("[{}]".format(",".join(str(v) for v in perm)))
            if coeff != 1:
                factors.insert(0, str(coeff))
            pieces.append("*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return "HeckeElem({}, {!r})".format(self.n, str(self))


def haff_mul(a, b):
    """
    PBW-straightened product in the affine algebra H_n
    """
    if a.n != b.n:
        raise ValueError("Invalid product of H_{} and H_{}".format(a.n, b.n))
    terms = {}
    for (u, ea), ca in a.terms.items():
        for (v, eb), cb in b.terms.items():
            for (c, w), coeff in _perm_times_mono(u, eb):
                key = (perm_compose(w, v), tuple(x+y for x, y in zip(ea, c)))
                terms[key] = terms.get(key, 0) + ca*cb*coeff
    return HeckeElem(a.n, terms)


@dataclass(frozen=True)
class CyclotomicData:
    """
    Monic polynomial f(u) = u^l + z_1 u^(l-1) + ... + z_l with l >= 1

    The associated central charge is k = -l.
    """
    f: heiscat.coeffs.Poly
    ell: int = field(init=False)
    z: tuple = field(init=False)

    def __post_init__(self):
        if not self.f.is_monic() or self.f.degree < 1:
            raise ValueError("Invalid cyclotomic polynomial: {}".format(self.f))
        ell = self.f.degree
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "z", tuple(self.f.coeffs[ell-r]
                                            for r in range(1, ell+1)))

    @classmethod
    def parse(cls, text):
        return cls(heiscat.coeffs.Poly.parse(text))

    @property
    def k(self):
        return -self.ell

    def __str__(self):
        return str(self.f)


class CyclotomicReducer():
    """
    Reduction of PBW monomials modulo the ideal generated by f(x_1)

    High powers are funnelled to x_1 through
    x_i^A = s x_(i-1)^A s + sum_(b+c=A-1) x_i^b x_(i-1)^c s  (s = s_(i-1)),
    where x_1^l is replaced by -(z_1 x_1^(l-1) + ... + z_l).
    """
    def __init__(self, data, max_steps=200000):
        self.data = data
        self.max_steps = max_steps
        self.steps = 0
        self.cache = {}

    def __call__(self, elem):
        return self.run(elem)

    def run(self, elem):
        # The step cap applies to each call
        self.steps = 0
        terms = {}
        for (perm, exps), coeff in elem.terms.items():
            for key, value in self.reduce_monomial(exps, perm).items():
                terms[key] = terms.get(key, 0) + coeff*value
        return HeckeElem(elem.n, terms)

    def _accumulate(self, target, exps, perm, scale):
        for key, value in self.reduce_monomial(exps, perm).items():
            target[key] = target.get(key, 0) + scale*value

    def reduce_monomial(self, exps, perm):
        key = (exps, perm)
        if key in self.cache:
            return self.cache[key]
        self.steps += 1
        if self.steps > self.max_steps:
            raise heiscat.errors.ResourceCapError("Hecke reduction steps",
                                                  self.max_steps)
        ell = self.data.ell
        high = [i for i, a in enumerate(exps) if a >= ell]
        result = {}
        if not high:
            result[(perm, exps)] = Fraction(1)
        elif high[0] == 0:
            for r, z_r in enumerate(self.data.z, start=1):
                if z_r == 0:
                    continue
                lowered = (exps[0]-r,) + exps[1:]
                self._accumulate(result, lowered, perm, -z_r)
        else:
            pos = high[0]
            power = exps[pos]
            rest = list(exps)
            rest[pos] = 0
            # s = s_j swaps the positions pos-1 and pos
            j = pos
            swapped_perm = left_times_simple(j, perm)
            # Terms x_i^b x_(i-1)^c s w with b+c = power-1
            for b in range(power):
                new = list(rest)
                new[pos] += b
                new[pos-1] += power-1-b
                self._accumulate(result, tuple(new), swapped_perm, 1)
            # -d_j(x^rest) x_(i-1)^power s w
            for mono, dcoeff in _divided_difference(tuple(rest), j).items():
                new = list(mono)
                new[pos-1] += power
                self._accumulate(result, tuple(new), swapped_perm, -dcoeff)
            # s * [x^(s rest) x_(i-1)^power s w]
            inner = list(rest)
            inner[pos-1], inner[pos] = inner[pos], inner[pos-1]
            inner[pos-1] += power
            reduced = HeckeElem(len(exps), self.reduce_monomial(tuple(inner),
                                                                swapped_perm))
            moved = haff_mul(HeckeElem.s(len(exps), j), reduced)
            for term_key, value in moved.terms.items():
                result[term_key] = result.get(term_key, 0) + value
        result = {k: v for k, v in result.items() if v != 0}
        self.cache[key] = result
        return result


REDUCTION_STEPS = 200000
_REDUCERS = {}


def get_reducer(data):
    if data not in _REDUCERS:
        _REDUCERS[data] = CyclotomicReducer(data, REDUCTION_STEPS)
    return _REDUCERS[data]


def cyc_reduce(elem, data):
    """
    Canonical form of elem in H_n^f, every exponent below l
    """
    return get_reducer(data).run(elem)


def cyc_mul(a, b, data):
    return cyc_reduce(haff_mul(a, b), data)


def pbw_basis(n, data):
    """
    Labels (permutation, exponents) of the PBW basis of H_n^f
    """
    return [(perm, exps)
            for perm in itertools.permutations(range(1, n+1))
            for exps in itertools.product(range(data.ell), repeat=n)]


def dim(n, data):
    return data.ell**n * math.factorial(n)


def coset_labels(m, data):
    """
    Labels (a, j) of the basis of H_(m+1)^f as a right H_m^f-module
    """
    return [(a, j) for a in range(data.ell) for j in range(1, m+2)]


@functools.lru_cache(maxsize=None)
def _coset_element(m, a, j, data):
    n = m+1
    perm = identity_perm(n)
    for i in range(m, j-1, -1):
        perm = left_times_simple(i, perm)
    elem = haff_mul(HeckeElem.from_perm(perm), HeckeElem.x(n, n, a))
    return cyc_reduce(elem, data)


def coset_element(m, label, data):
    """
    The element s_j s_(j+1) ... s_m x_(m+1)^a of H_(m+1)^f
    """
    a, j = label
    return _coset_element(m, a, j, data)


def coordinates(elem, data):
    """
    Coordinate vector of a reduced element along pbw_basis(n, data)
    """
    index = _basis_index(elem.n, data)
    vector = [Fraction(0)] * len(index)
    for key, coeff in elem.terms.items():
        if key not in index:
            raise ValueError("Invalid element, not reduced: {}".format(elem))
        vector[index[key]] += coeff
    return vector


@functools.lru_cache(maxsize=None)
def _basis_index(n, data):
    return {label: i for i, label in enumerate(pbw_basis(n, data))}


def regular_matrix(elem, data):
    """
    Matrix of left multiplication by elem on H_n^f in the PBW basis
    """
    columns = []
    for perm, exps in pbw_basis(elem.n, data):
        basis_elem = HeckeElem(elem.n, {(perm, exps): 1})
        columns.append(coordinates(cyc_mul(elem, basis_elem, data), data))
    return [list(row) for row in zip(*columns)] if columns else []
