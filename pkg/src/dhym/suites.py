"""Batch verification suites: identities, branch theorems and KT chains.

The identity suites run vectorised over connected arrays of random tuples;
the theorem suites drive the scalar API sample by sample so that the same
code paths a user calls are the ones being certified.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .charge import check_chern_n4, kt_chain, z_of_t
from .eigen import EigenTuple, branch_check, branch_for_phase, lagrangian_phase
from .errors import DomainError
from .models import constant_model
from .sampling import sample_level_set_batch

TWO_PI = 2.0 * math.pi

#: pass thresholds, relative to max(1, |lhs|, |rhs|)
PRODUCT_IDENTITY_TOL = 1e-12
FACTORIZATION_TOL = 1e-10
VIETA_TOL = 1e-10
NEWTON_TOL = 1e-12


def _sigma_rows(lam: np.ndarray) -> np.ndarray:
    """Elementary symmetric polynomials row-wise: shape (m, n+1)."""
    m, n = lam.shape
    e = np.zeros((m, n + 1))
    e[:, 0] = 1.0
    for j in range(n):
        v = lam[:, j]
        for k in range(min(j + 1, n), 0, -1):
            e[:, k] += v * e[:, k - 1]
    return e


@dataclass(frozen=True)
class IdentitySuiteReport:
    count: int
    max_rel_product: float
    max_rel_factorization: float
    max_rel_vieta: float
    min_newton_margin_rel: float
    elapsed: float
    passed: bool

    def to_dict(self):
        return {
            "count": self.count,
            "max_rel_product": self.max_rel_product,
            "max_rel_factorization": self.max_rel_factorization,
            "max_rel_vieta": self.max_rel_vieta,
            "min_newton_margin_rel": self.min_newton_margin_rel,
            "pass": self.passed,
        }


def identity_suite(count: int, seed: int, span: float = 10.0) -> IdentitySuiteReport:
    """Random-tuple identity checks on [-span, span]^4.

    Verifies (i) the alternating-sigma components against the complex
    product prod(1 + i*lambda_j), (ii) the quartic factorization identity,
    (iii) Vieta's expansion prod(x + lambda_j) = sum sigma_k x^(4-k) on a
    1000-row slice, and (iv) Newton log-concavity of the normalised means
    p_k = sigma_k / C(4,k), which holds for every real tuple.
    """
    if count < 1:
        raise DomainError(f"suite count must be >= 1, got {count}")
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    lam = np.sort(rng.uniform(-span, span, size=(count, 4)), axis=1)
    e = _sigma_rows(lam)
    l1, l2, l3, l4 = (lam[:, j] for j in range(4))

    comp = (e[:, 0] - e[:, 2] + e[:, 4]) + 1j * (e[:, 1] - e[:, 3])
    prod = np.prod(1.0 + 1j * lam, axis=1)
    scale = np.maximum(1.0, np.maximum(np.abs(comp), np.abs(prod)))
    rel_product = float(np.max(np.abs(comp - prod) / scale))

    lhs = e[:, 3] - e[:, 1] * (e[:, 2] - l2 * l4)
    rhs = (
        -(l2 + l3 + l4) * (l1 + l3) * (l1 + l2)
        - l3 * l4 * (l1 + l3)
        - l4 * l4 * (l1 + l3)
    )
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    rel_fact = float(np.max(np.abs(lhs - rhs) / scale))

    m = min(count, 1000)
    x = rng.uniform(-span, span, size=m)
    vl = np.prod(x[:, None] + lam[:m], axis=1)
    vr = sum(e[:m, k] * x ** (4 - k) for k in range(5))
    scale = np.maximum(1.0, np.maximum(np.abs(vl), np.abs(vr)))
    rel_vieta = float(np.max(np.abs(vl - vr) / scale))

    p = e / np.array([math.comb(4, k) for k in range(5)])
    newton = np.inf
    for k in (1, 2, 3):
        margin = p[:, k] ** 2 - p[:, k - 1] * p[:, k + 1]
        scale = np.maximum(1.0, np.maximum(p[:, k] ** 2, np.abs(p[:, k - 1] * p[:, k + 1])))
        newton = min(newton, float(np.min(margin / scale)))

    passed = (
        rel_product <= PRODUCT_IDENTITY_TOL
        and rel_fact <= FACTORIZATION_TOL
        and rel_vieta <= VIETA_TOL
        and newton >= -NEWTON_TOL
    )
    return IdentitySuiteReport(
        count=count,
        max_rel_product=rel_product,
        max_rel_factorization=rel_fact,
        max_rel_vieta=rel_vieta,
        min_newton_margin_rel=newton,
        elapsed=time.perf_counter() - start,
        passed=passed,
    )


@dataclass(frozen=True)
class TheoremSuiteReport:
    count: int
    theta_lo: float
    theta_hi: float
    max_phase_error: float
    min_margins: dict
    tstar_count: int
    sign_mismatches: int
    failures: tuple
    elapsed: float
    passed: bool

    def to_dict(self):
        return {
            "count": self.count,
            "theta_lo": self.theta_lo,
            "theta_hi": self.theta_hi,
            "max_phase_error": self.max_phase_error,
            "min_margins": dict(self.min_margins),
            "tstar_count": self.tstar_count,
            "sign_mismatches": self.sign_mismatches,
            "failures": [list(f) for f in self.failures],
            "pass": self.passed,
        }


def theorem_suite(
    count: int,
    seed: int,
    theta_lo: float = math.pi + 0.01,
    theta_hi: float = TWO_PI - 0.01,
) -> TheoremSuiteReport:
    """Level-set Monte Carlo over the lifted window (pi, 2*pi).

    Draws `count` tuples with phases uniform in [theta_lo, theta_hi],
    then runs branch_check on the half of the window each phase falls in
    and check_chern_n4 on the matching constant model.  Also certifies
    the real-axis crossing: sign(Re Z(T*)) must reproduce the sign of the
    second inequality margin whenever T* = sqrt(d_3/d_1) > 1 exists.
    """
    if count < 1:
        raise DomainError(f"suite count must be >= 1, got {count}")
    if not math.pi < theta_lo <= theta_hi < TWO_PI:
        raise DomainError(
            f"theorem suite needs pi < theta_lo <= theta_hi < 2*pi, got "
            f"[{theta_lo:.12g}, {theta_hi:.12g}]"
        )
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    thetas = rng.uniform(theta_lo, theta_hi, size=count)
    lam = sample_level_set_batch(thetas, rng=rng)

    max_phase_err = 0.0
    min_margins: dict = {}
    failures = []
    tstar_count = 0
    mismatches = 0
    for i in range(count):
        tup = EigenTuple(tuple(lam[i]))
        theta = float(thetas[i])
        max_phase_err = max(max_phase_err, abs(lagrangian_phase(tup) - theta))
        reports = [branch_check(tup, branch_for_phase(theta))]
        profile = constant_model(tup)
        chern = check_chern_n4(profile)
        reports.append(chern)
        for rep in reports:
            for entry in rep.entries:
                key = f"{rep.label}.{entry.name}"
                if key not in min_margins or entry.margin < min_margins[key]:
                    min_margins[key] = entry.margin
                if not entry.passed and len(failures) < 32:
                    failures.append((i, key, entry.margin))
        d = profile.d
        if d[1] > 0.0 and d[3] > 0.0:
            t_star = math.sqrt(d[3] / d[1])
            if t_star > 1.0:
                tstar_count += 1
                re_sign = math.copysign(1.0, z_of_t(profile, t_star).real)
                margin_sign = math.copysign(1.0, chern.margin("second"))
                if re_sign != margin_sign:
                    mismatches += 1
                    if len(failures) < 32:
                        failures.append((i, "tstar_sign", 0.0))

    passed = not failures and mismatches == 0 and max_phase_err < 1e-12
    return TheoremSuiteReport(
        count=count,
        theta_lo=theta_lo,
        theta_hi=theta_hi,
        max_phase_error=max_phase_err,
        min_margins=min_margins,
        tstar_count=tstar_count,
        sign_mismatches=mismatches,
        failures=tuple(failures),
        elapsed=time.perf_counter() - start,
        passed=passed,
    )


@dataclass(frozen=True)
class KtSuiteReport:
    count: int
    attempts: int
    min_margins: dict
    failures: tuple
    elapsed: float
    passed: bool

    def to_dict(self):
        return {
            "count": self.count,
            "attempts": self.attempts,
            "min_margins": dict(self.min_margins),
            "failures": [list(f) for f in self.failures],
            "pass": self.passed,
        }


def kt_suite(count: int, seed: int, span: float = 10.0) -> KtSuiteReport:
    """KT chain on random constant models with Gamma-cone order >= 3.

    Tuples are drawn uniformly from [-span, span]^4 and kept when
    sigma_1, sigma_2, sigma_3 > 0; every kt_chain entry must pass on the
    resulting constant models.
    """
    if count < 1:
        raise DomainError(f"suite count must be >= 1, got {count}")
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    rows = []
    attempts = 0
    while sum(len(r) for r in rows) < count:
        block = max(4096, count)
        lam = np.sort(rng.uniform(-span, span, size=(block, 4)), axis=1)
        e = _sigma_rows(lam)
        keep = (e[:, 1] > 0.0) & (e[:, 2] > 0.0) & (e[:, 3] > 0.0)
        rows.append(lam[keep])
        attempts += block
    lam = np.concatenate(rows)[:count]

    min_margins: dict = {}
    failures = []
    for i in range(count):
        report = kt_chain(constant_model(EigenTuple(tuple(lam[i]))))
        for entry in report.entries:
            if entry.name not in min_margins or entry.margin < min_margins[entry.name]:
                min_margins[entry.name] = entry.margin
            if not entry.passed and len(failures) < 32:
                failures.append((i, entry.name, entry.margin))
    return KtSuiteReport(
        count=count,
        attempts=attempts,
        min_margins=min_margins,
        failures=tuple(failures),
        elapsed=time.perf_counter() - start,
        passed=not failures,
    )
