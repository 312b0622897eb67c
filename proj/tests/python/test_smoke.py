"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import quadfunc


def frac(s):
    return Fraction(s)


def test_representations():
    assert quadfunc.representations(2, 27) == [(3, 3), (5, 1)]
    assert quadfunc.representations(2, 5) == []
    assert quadfunc.representations(3, 28) == [(1, 3), (4, 2), (5, 1)]


def test_collisions():
    ns = [n for n, reps in quadfunc.collisions(2, 60)]
    assert {27, 33, 54} <= set(ns)
    assert quadfunc.collisions(2, 10) == []


def test_abcd_instance():
    lhs, rhs, n = quadfunc.abcd_instance(3, 2, 1, 1, 2)
    assert lhs == (8, 1)
    assert rhs == (4, 5)
    assert n == 66
    with pytest.raises(ValueError):
        quadfunc.abcd_instance(1, 1, 1, 1, 2)


def test_derive_table():
    table = quadfunc.derive_table(2, 6)
    polys = {e["n"]: e["poly"] for e in table["expressions"]}
    assert polys[3] == "9*alpha^2"
    assert polys[6] == "36*alpha^2 - 4*alpha + beta"
    assert table["missing"] == []


def test_solve_base():
    report = quadfunc.solve_base(3)
    assert len(report["admissible"]) == 3
    assert len(report["rejected"]) == 1
    rejected = report["rejected"][0]
    assert frac(rejected["alpha"]) == Fraction(-25, 16)
    assert frac(rejected["beta"]) == Fraction(105, 16)
    assert frac(rejected["witness"]["value"]) != 0


def test_verify_family():
    result = quadfunc.verify_family("linear", 3, umax=80, policy="seeded", seed=7)
    assert result["pass"] is True
    mutated = quadfunc.verify_family("linear", 2, umax=80, mutations={7: "8"})
    assert mutated["pass"] is False
    failure = mutated["runs"][0]["first_failure"]
    assert (failure["u"], failure["v"]) == (1, 7)


def test_family_value():
    assert frac(quadfunc.family_value("reciprocal", 5, 9)) == Fraction(1, 6)
    assert frac(quadfunc.family_value("linear", 2, 5, policy="all-minus")) == -5


def test_threshold_and_recurrence():
    assert quadfunc.threshold_A(2) == 6
    assert quadfunc.threshold_A(9) == 18
    with pytest.raises(ValueError):
        quadfunc.threshold_A(1)
    inst = quadfunc.recurrence_for(3, 9)
    assert inst["args"] == (3, 5, 1)


def test_audit_and_certify():
    audit = quadfunc.audit_recurrences(12)
    assert audit["passed"] is True
    assert all(c["residual"] == "0" for c in audit["cases"])

    cert = quadfunc.certify(2)
    assert cert["verdict"] == "certified"
    families = sorted(b["family"] for b in cert["base"])
    assert families == ["linear", "reciprocal", "zero"]
