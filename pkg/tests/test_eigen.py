import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dhym import (
    Branch,
    EigenTuple,
    branch_check,
    branch_for_phase,
    elementary_all,
    factorization_identity,
    gamma_cone,
    lagrangian_phase,
    mixed_sigma,
    phase_components,
    sigma,
)
from dhym.errors import DomainError, PhaseOutsideBranchError

from conftest import sigma_enumeration

reals = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
tuples4 = st.lists(reals, min_size=4, max_size=4)


def test_eigen_tuple_sorts_on_construction():
    t = EigenTuple((3.0, -1.0, 2.0, 0.5))
    assert t.values == (-1.0, 0.5, 2.0, 3.0)
    assert t.n == 4


def test_eigen_tuple_rejects_non_finite():
    with pytest.raises(DomainError):
        EigenTuple((1.0, math.inf, 0.0, 0.0))
    with pytest.raises(DomainError):
        EigenTuple((math.nan,))
    with pytest.raises(DomainError):
        EigenTuple(())


def test_sigma_examples():
    assert sigma((1, 1, 1, 1), 2) == 6.0
    assert sigma((1, 2, 3, 4), 3) == 50.0
    assert sigma((0.5, 1, 2, 3), 1) == 6.5
    assert sigma((5, 6, 7), 0) == 1.0


def test_sigma_out_of_range():
    with pytest.raises(DomainError):
        sigma((1, 2, 3, 4), 5)
    with pytest.raises(DomainError):
        sigma((1, 2, 3, 4), -1)


@given(st.lists(reals, min_size=1, max_size=6))
def test_sigma_matches_subset_enumeration(vals):
    e = elementary_all(sorted(vals))
    for k in range(len(vals) + 1):
        want = sigma_enumeration(sorted(vals), k)
        scale = max(1.0, abs(want))
        assert abs(e[k] - want) <= 1e-10 * scale


@given(tuples4, reals)
def test_vieta_expansion(vals, x):
    t = EigenTuple(tuple(vals))
    e = elementary_all(t.values)
    lhs = math.prod(x + v for v in t.values)
    rhs = sum(e[k] * x ** (4 - k) for k in range(5))
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


def test_phase_examples():
    assert lagrangian_phase((1, 1, 1, 1)) == pytest.approx(math.pi, abs=1e-15)
    assert lagrangian_phase((0, 0, 0, 0)) == 0.0
    # arctan 2 + arctan 3 = 3*pi/4 exactly, so the value is 3*pi/4 + arctan 4 + arctan 5
    assert lagrangian_phase((2, 3, 4, 5)) == pytest.approx(5.05541292, abs=1e-8)


@given(tuples4)
def test_phase_permutation_invariant(vals):
    rev = lagrangian_phase(tuple(reversed(vals)))
    assert lagrangian_phase(tuple(vals)) == rev  # sorting normalises the sum order


@given(tuples4)
def test_phase_monotone_in_each_entry(vals):
    base = lagrangian_phase(vals)
    for i in range(4):
        bumped = list(vals)
        bumped[i] += 0.25
        assert lagrangian_phase(bumped) > base


@given(st.lists(reals, min_size=1, max_size=6))
def test_phase_range_bound(vals):
    n = len(vals)
    assert abs(lagrangian_phase(vals)) < n * math.pi / 2


def test_phase_components_examples():
    assert phase_components((1, 1, 1, 1)) == (-4.0, 0.0)
    assert phase_components((0.5, 1, 2, 3)) == (-10.0, -5.0)
    assert phase_components((0, 0, 0, 0)) == (1.0, 0.0)


@given(tuples4)
def test_phase_components_match_complex_product(vals):
    re, im = phase_components(vals)
    prod = 1 + 0j
    for v in sorted(vals):
        prod *= 1 + 1j * v
    scale = max(1.0, abs(prod), math.hypot(re, im))
    assert abs(complex(re, im) - prod) <= 1e-12 * scale


@given(tuples4)
def test_phase_components_argument_is_phase_mod_2pi(vals):
    re, im = phase_components(vals)
    if math.hypot(re, im) < 1e-12:
        return
    delta = math.atan2(im, re) - lagrangian_phase(vals)
    delta = math.fmod(delta, 2 * math.pi)
    wrapped = min(abs(delta), abs(abs(delta) - 2 * math.pi))
    assert wrapped < 1e-9


def test_gamma_cone_examples():
    assert gamma_cone((-0.2, 1, 2, 3)) == 3
    assert gamma_cone((1, 1, 1, 1)) == 4
    assert gamma_cone((-1, -1, -1, -1)) == 0


def test_factorization_examples():
    assert factorization_identity((1, 1, 1, 1)) == (-16.0, -16.0)
    assert factorization_identity((0, 1, 2, 3)) == (-42.0, -42.0)
    assert factorization_identity((-0.5, 1, 2, 3)) == (-27.0, -27.0)


def test_factorization_needs_four():
    with pytest.raises(DomainError):
        factorization_identity((1, 2, 3))


@given(tuples4)
def test_factorization_is_an_identity(vals):
    lhs, rhs = factorization_identity(vals)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@given(tuples4)
def test_newton_log_concavity(vals):
    # p_{k-1} p_{k+1} <= p_k^2 holds for every real tuple
    e = elementary_all(sorted(vals))
    p = [e[k] / math.comb(4, k) for k in range(5)]
    for k in (1, 2, 3):
        lhs = p[k - 1] * p[k + 1]
        rhs = p[k] ** 2
        assert lhs <= rhs + 1e-12 * max(1.0, abs(lhs), rhs)


def test_mixed_sigma_examples():
    assert mixed_sigma((1, 1, 1, 1), (1, 1, 1, 1), 1, 1) == 12.0
    assert mixed_sigma((1, 2, 3, 4), (1, 1, 1, 1), 2, 1) == 70.0
    assert mixed_sigma((5, -2, 7, 0.5), (1, 1, 1, 1), 0, 0) == 1.0


def test_mixed_sigma_errors():
    with pytest.raises(DomainError):
        mixed_sigma((1, 2, 3), (1, 2, 3, 4), 1, 1)
    with pytest.raises(DomainError):
        mixed_sigma((1, 2, 3, 4), (1, 2, 3, 4), 3, 2)
    with pytest.raises(DomainError):
        mixed_sigma((1, 2, 3, 4), (1, 2, 3, 4), -1, 1)


@given(tuples4, st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4))
def test_mixed_sigma_collapses_to_sigma(vals, j, k):
    if j + k > 4:
        return
    t = EigenTuple(tuple(vals))
    got = mixed_sigma(t, t, j, k)
    want = math.comb(j + k, j) * sigma_enumeration(t.values, j + k)
    assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


def test_branch_supercritical_example():
    report = branch_check((2, 3, 4, 5), Branch.SUPERCRITICAL)
    assert report.passed
    assert report.entry("min_pair_product").lhs == 6.0
    assert report.margin("min_pair_product") == 5.0


def test_branch_mid_example():
    report = branch_check((0.5, 1, 2, 3), Branch.MID)
    assert report.passed
    assert report.margin("sigma3_minus_sigma1") == pytest.approx(5.0, abs=1e-12)
    assert report.margin("sigma2_minus_sigma4_minus_1") == pytest.approx(10.0, abs=1e-12)
    assert report.margin("sigma2_minus_2") == pytest.approx(12.0, abs=1e-12)


def test_branch_precondition_names_phase():
    with pytest.raises(PhaseOutsideBranchError) as err:
        branch_check((-0.2, 1, 2, 3), Branch.MID)
    assert "2.944" in str(err.value)
    assert err.value.phase == pytest.approx(2.9441970937399122, abs=1e-12)


def test_branch_full_and_n3():
    report = branch_check((0.5, 1, 2, 3), Branch.FULL)
    assert report.passed
    assert "sigma2_minus_sigma4_minus_1" not in report.names()
    report3 = branch_check((1, 2, 3), Branch.N3)  # phase is exactly pi
    assert report3.passed
    assert report3.margin("sigma2_minus_1") == pytest.approx(10.0)


def test_branch_dimension_mismatch():
    with pytest.raises(DomainError):
        branch_check((1, 2, 3), Branch.MID)
    with pytest.raises(DomainError):
        branch_check((1, 1, 1, 1), Branch.N3)


def test_branch_for_phase_dispatch():
    assert branch_for_phase(5.1) is Branch.SUPERCRITICAL
    assert branch_for_phase(3.3) is Branch.MID
    assert branch_for_phase(1.5 * math.pi) is Branch.FULL
    assert branch_for_phase(math.pi, n=3) is Branch.N3
    with pytest.raises(DomainError):
        branch_for_phase(0.5)


def test_branch_endpoints_fixed_by_kind():
    assert Branch.SUPERCRITICAL.endpoints == (1.5 * math.pi, 2 * math.pi)
    assert Branch.MID.endpoints == (math.pi, 1.5 * math.pi)
    assert Branch.FULL.endpoints == (math.pi, 2 * math.pi)
    assert Branch.N3.endpoints == (0.5 * math.pi, 1.5 * math.pi)
