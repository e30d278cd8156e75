#!/usr/bin/env python3
"""
Tests for the command line front end and its exit codes
"""
# Standard libraries
import json
# 3rd party libraries
import pytest
# Local libraries
import heiscat.startup


def run(capsys, *argv):
    code = heiscat.startup.main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip()


def test_normalize_crossing_squared(capsys):
    code, out = run(capsys, "normalize", "up up | s@0 ; s@0", "--charge", "-1")
    assert code == heiscat.startup.EXIT_OK
    assert out == "(1) * [X0->Y0, X1->Y1]"


def test_normalize_unit_bubble(capsys):
    code, out = run(capsys, "normalize", ". | cup_r@0 ; cap_l@0",
                    "--charge", "-1")
    assert code == 0
    assert out == "1"


def test_normalize_with_delta(capsys):
    code, out = run(capsys, "normalize", ". | cup_l@0 ; dot@0 ; cap_r@0",
                    "--charge", "1", "--delta", "3")
    assert code == 0
    assert out == "3"


def test_normalize_from_file(capsys, tmp_path):
    path = tmp_path / "term.txt"
    path.write_text("up up | s@0 ; s@0\n")
    code, out = run(capsys, "normalize", "@{}".format(path), "--charge", "2")
    assert code == 0
    assert out == "(1) * [X0->Y0, X1->Y1]"


def test_eval(capsys):
    code, out = run(capsys, "eval", "up | dot@0", "--f", "u+2")
    assert code == 0
    assert out == "[[-2]]"


def test_eval_json(capsys):
    code, out = run(capsys, "eval", "up | dot@0", "--f", "u", "--format",
                    "json")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [["0"]]
    assert data["source"] == "up"
    assert data["f"] == "u"


def test_series(capsys):
    code, out = run(capsys, "series", "--f", "u+1", "--fprime", "1",
                    "--order", "3")
    assert code == 0
    assert out == "1, -1, 1, -1"


def test_basis(capsys):
    code, out = run(capsys, "basis", "up", "up", "--max-dots", "1")
    assert code == 0
    assert out.splitlines() == ["X0->Y0", "X0->Y0^1"]
    code, out = run(capsys, "basis", "up", ".")
    assert code == 0
    assert out == "(empty)"


def test_rotate(capsys):
    code, out = run(capsys, "rotate", "up up | s@0")
    assert code == 0
    assert out == "down down | s'@0"


def test_omega(capsys):
    code, out = run(capsys, "omega", "up up | s@0")
    assert code == 0
    assert out.endswith("* (down down | s'@0)")


def test_check_passes(capsys):
    code, out = run(capsys, "check", "hecke", "--f", "u^2", "--nmax", "2")
    assert code == heiscat.startup.EXIT_OK
    assert out.splitlines()[0].endswith("0 failed")


def test_check_json(capsys):
    code, out = run(capsys, "check", "series", "--seed", "4", "--format",
                    "json")
    assert code == 0
    data = json.loads(out)
    assert data["suite"] == "series"
    assert data["seed"] == 4
    assert all(case["status"] == "pass" for case in data["cases"])


@pytest.mark.parametrize("argv", [
    ("normalize", "up | wiggle@0", "--charge", "0"),
    ("normalize", "up up | s@0 ; t@0", "--charge", "0"),
    ("eval", "up | dot@0", "--f", "2*u"),
    ("check", "nope"),
    ("normalize", "up | ", "--charge", "0", "-c", "missing.json"),
])
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == heiscat.startup.EXIT_USAGE


def test_resource_cap(capsys, tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps({"config": {"engine": {"max_steps": 1}}}))
    code, _ = run(capsys, "normalize", "up up | s@0 ; s@0", "--charge", "-1",
                  "-c", str(path))
    assert code == heiscat.startup.EXIT_RESOURCE


@pytest.mark.slow
def test_check_derived(capsys):
    code, out = run(capsys, "check", "derived", "--f", "u", "--nmax", "2")
    assert code == heiscat.startup.EXIT_OK, out


def test_check_derived_on_one_strand(capsys):
    code, out = run(capsys, "check", "derived", "--f", "u", "--nmax", "1")
    assert code == heiscat.startup.EXIT_OK, out
