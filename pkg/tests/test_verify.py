#!/usr/bin/env python3
"""
Tests for the verification suites, including a check that a broken
functor is caught
"""
# 3rd party libraries
import numpy as np
import pytest
# Local libraries
import heiscat.diagram
import heiscat.functor
import heiscat.hecke
import heiscat.startup
import heiscat.verify
from heiscat.diagram import UP, DOWN
from heiscat.functor import CyclotomicFunctor


class CorruptedFunctor(CyclotomicFunctor):
    """
    Adds the identity to the image of every up crossing
    """
    def nat_cross(self, inner):
        mat = super().nat_cross(inner)
        return mat + heiscat.functor.eye(mat.shape[0])


def parse_pool(*texts):
    return [heiscat.hecke.CyclotomicData.parse(t) for t in texts]


def test_report_layout():
    report = heiscat.verify.CheckReport("demo", {"nmax": 1}, 7)
    assert report.add("first", True)
    assert not report.add("second", False, {"lhs": "1", "rhs": "2"})
    assert not report.passed
    assert [c["name"] for c in report.failures()] == ["second"]
    data = report.to_json()
    assert data["suite"] == "demo"
    assert data["seed"] == 7
    assert data["cases"][0] == {"name": "first", "status": "pass"}
    assert data["cases"][1]["witness"] == {"lhs": "1", "rhs": "2"}
    text = report.render()
    assert text.splitlines()[0] == "demo: 2 cases, 1 failed"
    assert "  [fail] second" in text


def test_contexts():
    assert heiscat.verify.contexts(1, 2) == [(), (UP,), (DOWN,)]
    assert heiscat.verify.contexts(3, 2) == [()]
    assert heiscat.verify.contexts(1, 3, downs=False) == [(), (UP,),
                                                          (UP, UP)]


@pytest.mark.parametrize("f", ["u", "u^2"])
def test_defining_relations_hold(f):
    data = heiscat.hecke.CyclotomicData.parse(f)
    report = heiscat.verify.check_defining(data, 2)
    assert report.passed, report.render()


def test_corrupted_functor_is_caught(f_u):
    report = heiscat.verify.check_defining(f_u, 2, CorruptedFunctor(f_u))
    assert not report.passed
    names = [case["name"] for case in report.failures()]
    assert any(name.startswith("braid on three up strands") for name in names)
    witness = next(case["witness"] for case in report.failures()
                   if case["name"].startswith("braid"))
    assert witness["lhs"] != witness["rhs"]


def test_defining_needs_strands(f_u):
    with pytest.raises(ValueError):
        heiscat.verify.check_defining(f_u, 0)


def test_khovanov_presentation():
    report = heiscat.verify.check_khovanov(nmax=2)
    assert report.passed, report.render()


def test_independence_of_dotted_strands():
    pool = parse_pool("u", "u+1", "u^2")
    report = heiscat.verify.check_independence((UP,), (UP,), 2, pool)
    assert report.passed, report.render()
    report = heiscat.verify.check_independence((), (), 2, pool)
    assert report.passed, report.render()


def test_independence_reports_the_deficit():
    pool = parse_pool("u", "u+1")
    report = heiscat.verify.check_independence((UP,), (UP,), 2, pool,
                                                extra=0)
    assert not report.passed
    witness = report.failures()[0]["witness"]
    assert witness == {"rank": 2, "basis": 3, "deficit": 1}


def test_contexts_raise_the_rank():
    pool = parse_pool("u", "u+1")
    report = heiscat.verify.check_independence((UP,), (UP,), 2, pool)
    assert report.passed, report.render()


def test_independence_needs_a_pool():
    with pytest.raises(ValueError):
        heiscat.verify.check_independence((UP,), (UP,), 1, parse_pool("u"))


def test_random_terms_are_well_typed():
    rng = np.random.default_rng(3)
    for _ in range(50):
        term = heiscat.verify.random_term(rng, max_letters=3)
        heiscat.diagram.validate(term)
        assert term.crossings() <= 4
        assert term.dots() <= 3
        assert all(len(word) <= 3 for word in term.words)


def test_shrink_keeps_a_failing_term():
    term = heiscat.diagram.parse("up down | t@0 ; dot@1 ; t'@0 ; dot@0")
    small = heiscat.verify.shrink(term, lambda t: len(t.slices) >= 1)
    assert len(small.slices) == 1


def test_fuzz_small_run(f_u, f_u2):
    report = heiscat.verify.fuzz_normalizer(1, 5, [f_u, f_u2], max_letters=3)
    assert report.seed == 1
    assert report.passed, report.render()


def test_hecke_suite(f_u, f_u2):
    report = heiscat.verify.check_hecke([f_u, f_u2], 2)
    assert report.passed, report.render()


def test_series_suite():
    report = heiscat.verify.check_series(seed=0, pairs=2, order=6,
                                         sym_order=4)
    assert report.passed, report.render()
    assert any(case["name"].startswith("z * delta") for case in report.cases)


def test_phi_psi_suite(f_u2):
    report = heiscat.verify.check_phi_psi([f_u2], 2)
    assert report.passed, report.render()


def test_unknown_suite():
    with pytest.raises(ValueError):
        heiscat.verify.run_suite("nope")


def test_run_suite_overrides():
    report = heiscat.verify.run_suite("hecke", {"pool": ["u^2"]}, f="u+1",
                                      nmax=1, seed=5)
    assert report.seed == 5
    assert report.passed, report.render()
    assert all("[f=u + 1]" in case["name"] for case in report.cases)


def test_derived_relations_as_matrices(f_u):
    functor = heiscat.functor.get_functor(f_u)
    report = heiscat.verify.CheckReport("derived")
    for relation in heiscat.verify.derived_relations(f_u.k):
        heiscat.verify.check_matrix(report, relation, functor)
    names = [case["name"] for case in report.cases]
    assert any(name.startswith("left curl") for name in names)
    assert any(name.startswith("e_2 slides") for name in names)
    assert report.passed, report.render()


@pytest.mark.slow
def test_derived_suite(f_u):
    report = heiscat.verify.check_derived(f_u, 2)
    assert report.passed, report.render()


@pytest.mark.slow
@pytest.mark.parametrize("suite", heiscat.verify.SUITES)
def test_acceptance_configuration(suite):
    config = heiscat.startup.load_config("config/acceptance.json")
    suite_config = dict(config["engine"], **config["suites"])
    report = heiscat.verify.run_suite(suite, suite_config)
    assert report.passed, report.render()
