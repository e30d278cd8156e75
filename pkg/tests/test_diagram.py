#!/usr/bin/env python3
"""
Tests for the term grammar and the operations on diagram terms
"""
# 3rd party libraries
from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
# Local libraries
import heiscat.diagram
import heiscat.errors
import heiscat.verify
from heiscat.diagram import UP, DOWN, Cap, Cross, Cup, Dot, Kind


def test_parse_and_render():
    term = heiscat.diagram.parse("up down | t@0 ; x@1^2 ; t'@0")
    assert term.source == (UP, DOWN)
    assert term.target == (UP, DOWN)
    assert term.slices == (Cross(0, Kind.RIGHTWARD), Dot(1, UP, 2),
                           Cross(0, Kind.LEFTWARD))
    assert term.render() == "up down | t@0 ; x@1^2 ; t'@0"
    assert heiscat.diagram.parse(term.render()) == term


def test_unit_object():
    term = heiscat.diagram.parse(". | cup_r@0 ; cap_l@0")
    assert term.source == ()
    assert term.target == ()
    assert term == heiscat.diagram.ccw_bubble(0)


def test_type_error_reports_slice_index():
    with pytest.raises(heiscat.errors.TermTypeError) as info:
        heiscat.diagram.parse("up up | s@0 ; t@0")
    assert info.value.index == 1


def test_parse_error_reports_column():
    with pytest.raises(heiscat.errors.ParseError) as info:
        heiscat.diagram.parse("up | dot@0 ; wiggle@0")
    assert info.value.column > 0
    with pytest.raises(heiscat.errors.ParseError):
        heiscat.diagram.parse("up up s@0")
    with pytest.raises(heiscat.errors.ParseError):
        heiscat.diagram.parse("up | cup_s@0")


def test_compose_and_tensor():
    dot = heiscat.diagram.parse("up | dot@0")
    cross = heiscat.diagram.parse("up up | s@0")
    composite = heiscat.diagram.compose(cross,
                                        heiscat.diagram.tensor(dot, dot))
    assert composite.render() == "up up | dot@0 ; dot@1 ; s@0"
    assert heiscat.diagram.compose_all(cross, cross, cross).crossings() == 3
    with pytest.raises(heiscat.errors.TermTypeError):
        heiscat.diagram.compose(dot, cross)


def test_named_composites_are_well_typed():
    for dots in range(3):
        assert heiscat.diagram.right_curl(dots).target == (UP,)
        assert heiscat.diagram.left_curl(dots).target == (UP,)
        assert heiscat.diagram.cw_bubble(dots).target == ()
    term = heiscat.diagram.phi_monomial(3, (2, 1, 3), (1, 0, 2))
    assert term.source == (UP, UP, UP)
    assert term.crossings() == 1
    assert term.dots() == 3


def test_omega_sign_and_words():
    term = heiscat.diagram.parse("up down | t@0 ; cap_l@0")
    image, sign = heiscat.diagram.omega(term)
    assert image.source == ()
    assert image.target == (DOWN, UP)
    assert sign == 1
    image, sign = heiscat.diagram.omega(heiscat.diagram.parse("up up | s@0"))
    assert image.render() == "down down | s'@0"
    assert sign == -1


def test_rotation_rejects_decorated_slices():
    term = heiscat.diagram.DiagramTerm((DOWN, UP), (Cap(0, Kind.SPADE, 0),))
    with pytest.raises(ValueError):
        heiscat.diagram.rotate180(term)


def test_rotation_of_a_dot():
    image = heiscat.diagram.rotate180(heiscat.diagram.parse("up down | dot@0"))
    assert image.render() == "up down | dot'@1"


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32-1))
def test_reflection_and_rotation_are_involutions(seed):
    rng = np.random.default_rng(seed)
    term = heiscat.verify.random_term(rng, max_letters=4)
    image, sign = heiscat.diagram.omega(term)
    assert heiscat.diagram.omega(image) == (term, sign)
    twice = heiscat.diagram.rotate180(heiscat.diagram.rotate180(term))
    assert twice == term


def test_decorate_coerces_tokens():
    decorated = heiscat.diagram.decorate(heiscat.diagram.identity((UP,)), 2,
                                         [(0, 1, 3)])
    level, gap, value = decorated.tokens[0]
    assert (level, gap) == (0, 1)
    assert value.constant_value() == 3
    assert decorated.scaled(2).coeff == 4
