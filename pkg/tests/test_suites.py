import math

import pytest

from dhym import identity_suite, kt_suite, theorem_suite
from dhym.errors import DomainError

TWO_PI = 2 * math.pi


def test_suites_require_positive_count():
    for fn in (identity_suite, theorem_suite, kt_suite):
        with pytest.raises(DomainError):
            fn(0, seed=1)


def test_identity_suite_small():
    report = identity_suite(5000, seed=1)
    assert report.passed
    assert report.count == 5000
    assert report.max_rel_product <= 1e-12
    assert report.max_rel_factorization <= 1e-10
    assert report.max_rel_vieta <= 1e-10
    assert report.min_newton_margin_rel >= -1e-12


def test_identity_suite_deterministic():
    a = identity_suite(2000, seed=9)
    b = identity_suite(2000, seed=9)
    assert a.to_dict() == b.to_dict()  # elapsed stays off the wire
    assert "elapsed" not in a.to_dict()


def test_theorem_suite_small():
    report = theorem_suite(500, seed=2)
    assert report.passed
    assert report.sign_mismatches == 0
    assert report.tstar_count == 500
    assert report.max_phase_error < 1e-12
    assert min(report.min_margins.values()) > 0.0


def test_theorem_suite_fixed_theta():
    report = theorem_suite(100, seed=3, theta_lo=5.0, theta_hi=5.0)
    assert report.passed
    assert report.theta_lo == report.theta_hi == 5.0
    assert any(key.startswith("branch_supercritical") for key in report.min_margins)


def test_theorem_suite_mid_only():
    report = theorem_suite(100, seed=4, theta_lo=3.2, theta_hi=4.6)
    assert report.passed
    assert all(not k.startswith("branch_supercritical") for k in report.min_margins)
    assert "branch_mid.sigma2_minus_sigma4_minus_1" in report.min_margins


def test_theorem_suite_exact_branch_boundary():
    # exactly 3*pi/2 dispatches to the FULL fact set, never a precondition error
    report = theorem_suite(20, seed=6, theta_lo=1.5 * math.pi, theta_hi=1.5 * math.pi)
    assert report.passed
    assert any(k.startswith("branch_full.") for k in report.min_margins)


def test_theorem_suite_window_guard():
    with pytest.raises(DomainError):
        theorem_suite(10, seed=1, theta_lo=2.0, theta_hi=2.0)
    with pytest.raises(DomainError):
        theorem_suite(10, seed=1, theta_lo=4.0, theta_hi=3.0)


def test_kt_suite_small():
    report = kt_suite(1000, seed=5)
    assert report.passed
    assert report.count == 1000
    assert report.attempts >= 1000
    assert set(report.min_margins) == {"k1", "k2", "k3", "eqn12", "eqn23", "combined"}
