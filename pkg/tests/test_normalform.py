#!/usr/bin/env python3
"""
Tests for the normal form engine and the basis of reduced lifts
"""
# Standard libraries
import itertools
# 3rd party libraries
from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
# Local libraries
import heiscat.diagram
import heiscat.errors
import heiscat.normalform.basis
import heiscat.normalform.engine
import heiscat.normalform.planar
import heiscat.verify
from heiscat.diagram import UP, DOWN
from heiscat.normalform.basis import NormalDiagram, NormalMorphism
from heiscat.normalform.engine import CategoryParams, normalize
from heiscat.symfunc import SymPoly


IDENTITY_UP_UP = (((0, 0), (1, 0)), ((0, 1), (1, 1)))


def _charge(word):
    return sum(1 if letter is UP else -1 for letter in word)


# Every (source, target) with a nonzero Hom space and at most 4 endpoints
HOM_PAIRS = [(source, target)
             for size in range(5) for n in range(size+1)
             for source in itertools.product((UP, DOWN), repeat=n)
             for target in itertools.product((UP, DOWN), repeat=size-n)
             if _charge(source) == _charge(target)]


def norm(text, params):
    return normalize(heiscat.diagram.parse(text), params)


def test_crossing_squared_is_identity():
    result = norm("up up | s@0 ; s@0", -1)
    expected = NormalMorphism((UP, UP), (UP, UP),
                              {NormalDiagram(IDENTITY_UP_UP, (0, 0)): 1})
    assert result == expected
    assert result.render() == "(1) * [X0->Y0, X1->Y1]"


def test_unit_bubble_renders_as_scalar():
    assert norm(". | cup_r@0 ; cap_l@0", -1).render() == "1"


@pytest.mark.parametrize("k", [-1, 0, 1])
def test_single_crossing_is_a_basis_diagram(k):
    result = norm("up up | s@0", k)
    assert len(result.terms) == 1
    (diagram, coeff), = result.items()
    assert diagram.matching == (((0, 0), (1, 1)), ((0, 1), (1, 0)))
    assert coeff == SymPoly.one()


def test_antiparallel_double_crossings_without_charge():
    k = 0
    for word, text in (("up down", "t@0 ; t'@0"), ("down up", "t'@0 ; t@0")):
        assert norm("{} | {}".format(word, text), k) == \
            norm("{} | ".format(word), k)


def test_dot_slide(params):
    p = params(0)
    lhs = norm("up up | s@0 ; dot@0", p)
    rhs = norm("up up | dot@1 ; s@0", p) + norm("up up | ", p)
    assert lhs == rhs


def test_basis_counts():
    enumerate_basis = heiscat.normalform.basis.enumerate_basis
    assert len(enumerate_basis((UP, UP), (UP, UP), 2)) == 18
    assert len(enumerate_basis((UP, DOWN), (DOWN, UP), 0)) == 2
    assert len(enumerate_basis((), (), 3)) == 1
    assert enumerate_basis((UP,), (), 1) == []
    assert len(heiscat.normalform.basis.enumerate_matchings(
        (UP, DOWN, UP), (UP, DOWN, UP))) == 6
    with pytest.raises(ValueError):
        enumerate_basis((UP,), (UP,), -1)


def test_reduced_lift_of_a_swap():
    matching = (((0, 0), (1, 1)), ((0, 1), (1, 0)))
    lift = heiscat.normalform.basis.reduced_lift(matching, (UP, UP), (UP, UP))
    assert lift.render() == "up up | s@0"


def test_reduced_lift_rejects_bad_matching():
    with pytest.raises(ValueError):
        heiscat.normalform.basis.reduced_lift((((0, 0), (0, 1)),), (UP, UP),
                                              (UP, UP))


@pytest.mark.parametrize("k", [-1, 0, 1])
@pytest.mark.parametrize("source,target", HOM_PAIRS)
def test_basis_diagrams_are_normal(k, source, target):
    for diagram in heiscat.normalform.basis.enumerate_basis(source, target, 2):
        term = heiscat.normalform.basis.materialize(diagram, source, target)
        result = normalize(term, k)
        assert result.terms == {diagram: SymPoly.one()}, diagram.render()


@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_derived_relations_hold(k):
    report = heiscat.verify.CheckReport("derived")
    for relation in heiscat.verify.derived_relations(k):
        heiscat.verify.check_symbolic(report, relation, CategoryParams(k))
    assert report.passed, report.render()


def test_khovanov_relations_hold():
    report = heiscat.verify.CheckReport("khovanov")
    for relation in heiscat.verify.khovanov_relations():
        heiscat.verify.check_symbolic(report, relation, CategoryParams(-1))
    assert report.passed, report.render()


def test_step_cap(params):
    with pytest.raises(heiscat.errors.ResourceCapError) as info:
        norm("up up | s@0 ; s@0", params(-1, max_steps=1))
    assert info.value.limit == 1


def test_dot_cap(params):
    with pytest.raises(heiscat.errors.ResourceCapError):
        norm("up | x@0^5", params(0, max_dots=4))


def test_unreachable_flip_target(params):
    normalizer = heiscat.normalform.engine.Normalizer(params(0))
    diagram, = heiscat.normalform.planar.from_term(
        heiscat.diagram.parse("up up | s@0"), 0)
    with pytest.raises(heiscat.errors.SearchExhaustedError) as info:
        normalizer.search(diagram, "unreachable")
    assert isinstance(info.value, heiscat.errors.ResourceCapError)
    assert info.value.limit == 1
    assert "exhausted after 1 states" in str(info.value)


def test_params_validation():
    with pytest.raises(ValueError):
        CategoryParams(0, max_steps=0)
    params = CategoryParams.from_config("2", {"max_steps": 10, "delta": None},
                                        max_dots=None)
    assert params.k == 2
    assert params.max_steps == 10
    assert params.max_dots == 64
    assert params.delta is None


def test_lowest_bubble_specialized(params):
    term = heiscat.diagram.cw_bubble(1)
    assert normalize(term, params(1)).render() == "-e[1]"
    assert normalize(term, params(1, delta=3)).render() == "3"


def test_compose_and_tensor(params):
    p = params(-1)
    identity = norm("up | ", p)
    dot = norm("up | dot@0", p)
    assert heiscat.normalform.basis.mor_compose(dot, identity, p) == dot
    assert heiscat.normalform.basis.mor_compose(dot, dot, p) == \
        norm("up | dot@0^2", p)
    assert heiscat.normalform.basis.mor_tensor(dot, identity, p) == \
        norm("up up | dot@0", p)
    with pytest.raises(heiscat.errors.TermTypeError):
        heiscat.normalform.basis.mor_compose(norm("down | ", p), dot, p)


def test_morphism_arithmetic():
    a = norm("up | dot@0", 0)
    assert (a - a).is_zero()
    assert (a - a).render() == "0"
    assert (a * 2).coefficient(next(iter(a.terms))) == SymPoly.constant(2)
    with pytest.raises(heiscat.errors.TermTypeError):
        a + norm("down | ", 0)


@pytest.mark.parametrize("k", [-1, 0, 1])
def test_reflection_commutes_with_normalization(k):
    report = heiscat.verify.check_omega(charges=(k,))
    assert report.passed, report.render()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32-1))
def test_reflection_of_random_terms(seed):
    rng = np.random.default_rng(seed)
    term = heiscat.verify.random_term(rng, max_crossings=2, max_dots=2,
                                      max_letters=3, max_slices=6)
    report = heiscat.verify.check_omega([term])
    assert report.passed, report.render()


def test_omega_suite_draws_random_terms():
    report = heiscat.verify.check_omega(charges=(0,), seed=4, count=3)
    assert report.seed == 4
    assert len(report.cases) == len(heiscat.verify.omega_terms()) + 3
    assert report.passed, report.render()
