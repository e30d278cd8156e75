#!/usr/bin/env python3
"""
Tests for the cyclotomic evaluation functor
"""
# Standard libraries
from fractions import Fraction
# 3rd party libraries
import pytest
# Local libraries
import heiscat.diagram
import heiscat.functor
import heiscat.hecke
from heiscat.diagram import UP, DOWN
from heiscat.normalform.engine import normalize
from heiscat.symfunc import SymPoly


def evaluate(text, data):
    return heiscat.functor.eval_term(heiscat.diagram.parse(text), data).matrix


def test_dot_on_first_strand(f_shifted):
    mat = evaluate("up | dot@0", f_shifted)
    assert heiscat.functor.matrix_to_text(mat) == "[[-2]]"


def test_identity_on_up(f_u2):
    mat = evaluate("up | ", f_u2)
    assert heiscat.functor.matrix_equal(mat, heiscat.functor.eye(2))


def test_down_on_the_unit_is_zero(f_u):
    mat = evaluate("down | ", f_u)
    assert mat.shape == (0, 0)
    assert heiscat.functor.matrix_to_text(mat) == "[] (0x0)"


def test_space_dimensions(f_u2):
    assert heiscat.functor.build_space((UP, UP), f_u2).dim == 8
    assert heiscat.functor.build_space((DOWN, UP), f_u2).dim == 2
    assert heiscat.functor.build_space((UP, DOWN), f_u2).dim == 0


def test_counterclockwise_bubble_is_one(f_u):
    mat = heiscat.functor.eval_term(heiscat.diagram.ccw_bubble(0), f_u).matrix
    assert mat.shape == (1, 1)
    assert mat[0, 0] == 1


def test_crossing_squares_to_identity(f_u2):
    mat = evaluate("up up | s@0 ; s@0", f_u2)
    assert heiscat.functor.matrix_equal(mat, heiscat.functor.eye(8))


def test_mackey_matrix_is_invertible(f_u2):
    for n in range(3):
        mat = heiscat.functor.mackey_map(n, f_u2)
        inv = heiscat.functor.mackey_inverse(n, f_u2)
        size = mat.shape[0]
        assert mat.shape == (size, size)
        assert heiscat.functor.matrix_equal(mat.dot(inv),
                                            heiscat.functor.eye(size))


def test_scalar_tokens_use_the_series(f_shifted):
    # e_1 specializes to the first coefficient of f(u)/u^l = 1 + 2u^-1
    term = heiscat.diagram.identity(())
    decorated = heiscat.diagram.decorate(term, 3, [(0, 0, SymPoly.e(1))])
    mat = heiscat.functor.eval_decorated(decorated, f_shifted).matrix
    assert mat[0, 0] == 6


def test_interior_token_matches_scalar(f_u2):
    # e_2 left of an up strand is e_2 on its right minus the identity
    up = heiscat.diagram.identity((UP,))
    left = heiscat.diagram.decorate(up, tokens=[(0, 0, SymPoly.e(2))])
    right = heiscat.diagram.decorate(up, tokens=[(0, 1, SymPoly.e(2))])
    dotless = heiscat.functor.eval_decorated(right, f_u2).matrix
    correction = heiscat.functor.eval_term(up, f_u2).matrix
    total = heiscat.functor.eval_decorated(left, f_u2).matrix
    e0 = heiscat.functor.get_functor(f_u2).specialize(SymPoly.one())
    assert heiscat.functor.matrix_equal(total, dotless - correction * e0)


def test_first_elementary_token_slides_freely(f_shifted):
    # e_1 specializes to 2 for f = u+2, on either side of the strand
    up = heiscat.diagram.identity((UP,))
    left = heiscat.diagram.decorate(up, tokens=[(0, 0, SymPoly.e(1))])
    right = heiscat.diagram.decorate(up, tokens=[(0, 1, SymPoly.e(1))])
    assert heiscat.functor.matrix_to_text(
        heiscat.functor.eval_decorated(left, f_shifted).matrix) == "[[2]]"
    assert heiscat.functor.eval_decorated(left, f_shifted) == \
        heiscat.functor.eval_decorated(right, f_shifted)


@pytest.mark.parametrize("direct,composite", [
    ("up down up | t@0", "up down up | cup_r@0 ; s@1 ; cap_r@2"),
    ("down up up | dot'@0", "down up up | cup_r@0 ; dot@1 ; cap_r@1"),
    ("down up up | x'@0^2", "down up up | cup_r@0 ; x@1^2 ; cap_r@1"),
    ("down down up up | s'@0",
     "down down up up | cup_r@0 ; cup_r@1 ; s@2 ; cap_r@3 ; cap_r@2"),
])
def test_direct_slices_match_their_definition(f_u2, direct, composite):
    assert heiscat.functor.matrix_equal(evaluate(direct, f_u2),
                                        evaluate(composite, f_u2))


@pytest.mark.slow
def test_mackey_matrix_on_three_strands(f_u2):
    mat = heiscat.functor.mackey_map(3, f_u2)
    assert mat.shape == (384, 384)
    assert heiscat.functor.rank(mat) == 384


def test_normal_form_evaluates_like_the_term(f_u2):
    term = heiscat.diagram.parse("up up | s@0 ; dot@0 ; s@0")
    normal = normalize(term, f_u2.k)
    functor = heiscat.functor.get_functor(f_u2)
    assert functor.eval_morphism(normal) == functor.eval_term(term)
    assert heiscat.functor.matrix_equal(functor.zero_map((UP, UP), (UP, UP)),
                                        heiscat.functor.zeros(8, 8))


def test_linmap_json(f_u):
    image = heiscat.functor.eval_term(heiscat.diagram.parse("up | dot@0"), f_u)
    assert image.to_json() == {"source": "up", "target": "up",
                               "matrix": [["0"]]}
    assert image.scaled(3) == image
    assert image + image == image


def test_phi_then_psi(f_u2):
    for label in heiscat.hecke.pbw_basis(2, f_u2):
        elem = heiscat.hecke.HeckeElem(2, {label: 1})
        image = heiscat.hecke.HeckeElem(2, {})
        for coeff, term in heiscat.functor.phi(elem):
            image = image + heiscat.functor.psi(term, 2, f_u2) * Fraction(coeff)
        assert image == elem
