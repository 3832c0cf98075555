"""Proof-replay steps and the r = 7, 8, 9 suites."""

import pytest

from pp8.algebra.symring import VARS
from pp8.core.errors import ConstraintMismatchError, ProofStepFailed
from pp8.search import classify as classify_module
from pp8.search.proofs import (
    STEPS,
    a5_family,
    equation,
    hc_identity,
    not_pp,
    run_suite,
    t_family,
    verify,
)

a1, a2, a3, a4, a5, a6, a7 = VARS


def test_passing_suite():
    report = run_suite(4, [
        hc_identity(4, 3, (0, 1, a5, a4, a3, a2, a1), "a5^3 + a3"),
        equation("a3*(a3 + 1) = a3^2 + a3", lambda: a3 * (a3 + 1), "a3^2 + a3"),
        equation("a2^17 = a2^2 over F_16", lambda: a2 ** 17, "a2^2", q=16),
    ])
    assert report.passed
    assert [step.status for step in report.steps] == ['PASS'] * 3
    assert report.steps[0].kind == 'identity'
    assert report.steps[0].detail == "a5^3 + a3"
    assert report.verdict == "no non-exceptional degree-8 PP over F_{2^4}"


def test_failing_step_stops_the_suite():
    steps = [
        hc_identity(4, 3, (0, 1, a5, a4, a3, a2, a1), "a5^3 + a3"),
        hc_identity(4, 5, (0, 1, a5, a4, a3, a2, a1), "a3^5"),
        hc_identity(4, 3, (0, 0, a5, a4, a3, a2, a1), "a5^3"),
    ]
    with pytest.raises(ProofStepFailed) as info:
        run_suite(4, steps)
    report = info.value.report
    assert [step.status for step in report.steps] == ['PASS', 'FAIL']
    assert report.steps[1].detail == "a3^5 + 1"
    assert report.verdict.startswith("FAIL: HC(4,5,")
    assert not report.passed
    assert info.value.step == steps[1].name


def test_errors_inside_checks_fail_the_step():
    with pytest.raises(ProofStepFailed) as info:
        run_suite(4, [equation("bad", lambda: a1, "b1")])
    assert "CoefficientSyntaxError" in info.value.detail


def test_non_pp_families():
    report = run_suite(7, [
        not_pp(7, (0, 1, 0, 0, 0, 0, 0), "x^8 + x^6"),
        not_pp(8, (1, 0, 0, 0, 0, 0, 0), "x^8 + x^7"),
    ])
    assert report.passed
    with pytest.raises(ProofStepFailed):
        run_suite(4, [not_pp(4, (0,) * 7, "x^8")])


def test_t_family():
    assert run_suite(7, [t_family(7, (23, 27))]).passed


def test_a5_family():
    assert run_suite(7, [a5_family(7)]).passed


@pytest.mark.parametrize('r', [7, 8, 9])
def test_suites_carry_enough_identities(r):
    steps = STEPS[r]()
    algebraic = [step for step in steps if step.kind in ('identity', 'factorization')]
    assert len(algebraic) >= 10
    assert len({step.name for step in steps}) == len(steps)


def test_verify_rejects_other_fields():
    with pytest.raises(KeyError):
        verify(6)


def test_constraint_mismatch_detected(monkeypatch):
    broken = {4: ((3, (0, 1, None, None, None, None, None), "a5^3"),)}
    monkeypatch.setattr(classify_module, 'CONSTRAINTS', broken)
    with pytest.raises(ConstraintMismatchError):
        classify_module.check_constraints(4)


@pytest.mark.slow
@pytest.mark.parametrize('r', [7, 8, 9])
def test_proof_replay(r):
    report = verify(r)
    assert report.passed
    assert report.r == r
    assert report.verdict == f"no non-exceptional degree-8 PP over F_{{2^{r}}}"
    assert len(report.steps) == len(STEPS[r]())


@pytest.mark.slow
def test_classify_reports_proof_for_r7():
    result = classify_module.classify(7)
    assert result.classes == []
    assert result.proof_steps
    assert all(step.status == 'PASS' for step in result.proof_steps)
