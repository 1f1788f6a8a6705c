"""Pointwise models that integrate to exact intersection profiles.

The constant model is the workhorse: a translation-invariant form on a
torus makes every sigma_k literally constant, so the intersection numbers
collapse to d_k = sigma_k(lambda) / C(n,k) with unit volume.  That ties
the pointwise eigenvalue world to the cohomological one exactly, at desk
scale, with no PDE in sight.  The blow-up of projective 3-space supplies
a genuinely non-trivial 3-fold intersection ring for the same checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .charge import (
    IntersectionProfile,
    analytic_angle_from_integrals,
    winding_report,
    z_of_t,
)
from .eigen import EigenTuple, as_eigen, elementary_all, lagrangian_phase
from .errors import DegeneratePathError, DomainError

TWO_PI = 2.0 * math.pi

#: tolerance on the weight sum of a weighted model
WEIGHT_SUM_TOL = 1e-12


def constant_model(lam) -> IntersectionProfile:
    """Profile of an invariant-form model: d_k = sigma_k / C(n,k), d_0 = 1."""
    t = as_eigen(lam)
    e = elementary_all(t.values)
    d = tuple(e[k] / math.comb(t.n, k) for k in range(t.n + 1))
    return IntersectionProfile(t.n, d)


def weighted_model(points) -> IntersectionProfile:
    """Convex combination of constant models, flagged synthetic.

    `points` is a sequence of (weight, eigenvalues) with positive weights
    summing to 1 and a common dimension.  No underlying manifold is
    claimed for the result: log-concavity of the averaged d_k is *not*
    guaranteed, and exploring where it fails is the point.
    """
    pts = [(float(w), as_eigen(lam)) for w, lam in points]
    if not pts:
        raise DomainError("weighted model needs at least one point")
    if any(w <= 0.0 for w, _ in pts):
        raise DomainError("weights must be strictly positive")
    total = sum(w for w, _ in pts)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(f"weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL}")
    n = pts[0][1].n
    if any(t.n != n for _, t in pts):
        raise DomainError("all points must share one dimension")
    d = [0.0] * (n + 1)
    for w, t in pts:
        e = elementary_all(t.values)
        for k in range(n + 1):
            d[k] += w * e[k] / math.comb(n, k)
    return IntersectionProfile(n, tuple(d), synthetic=True)


def blowup_p3(a: float, b: float, c: float, e: float) -> IntersectionProfile:
    """Intersection profile on the blow-up of P^3 at a point.

    Classes are written against the hyperplane pullback H and the
    exceptional divisor E, with ring relations H^3 = 1, E^3 = 1 and
    H.E = 0; the metric class a*H - b*E must satisfy a > b > 0 (ampleness)
    while c*H - e*E is unconstrained.  Mixed H/E terms vanish, leaving

        d_k = c^k a^(3-k) - e^k b^(3-k).
    """
    if not (a > b > 0.0):
        raise DomainError(
            f"a*H - b*E with a={a}, b={b} is not a Kaehler class: need a > b > 0"
        )
    d = (
        a**3 - b**3,
        c * a**2 - e * b**2,
        c**2 * a - e**2 * b,
        c**3 - e**3,
    )
    return IntersectionProfile(3, d)


@dataclass(frozen=True)
class ConsistencyReport:
    """Pointwise-versus-integrated agreement for one constant model."""

    lam: EigenTuple
    phase: float
    analytic_angle: float
    angle_delta: float
    r_expected: float
    r_actual: float
    r_delta_rel: float
    theta_alg: float | None
    winding_delta: float | None
    origin_hit: float | None
    passed: bool

    def to_dict(self):
        return {
            "lambda": list(self.lam.values),
            "phase": self.phase,
            "analytic_angle": self.analytic_angle,
            "angle_delta": self.angle_delta,
            "r_expected": self.r_expected,
            "r_actual": self.r_actual,
            "r_delta_rel": self.r_delta_rel,
            "theta_alg": self.theta_alg,
            "winding_delta": self.winding_delta,
            "origin_hit": self.origin_hit,
            "pass": self.passed,
        }


def _mod_angle_delta(x: float, y: float) -> float:
    """|x - y| measured on the circle."""
    d = math.fmod(x - y, TWO_PI)
    if d > math.pi:
        d -= TWO_PI
    elif d < -math.pi:
        d += TWO_PI
    return abs(d)


ANGLE_TOL = 1e-9
R_TOL = 1e-10


def consistency_suite(lam) -> ConsistencyReport:
    """Cross-check one constant model along three independent routes.

    Asserts (i) the integrated angle equals the pointwise phase mod 2*pi,
    (ii) |Z(1)| equals prod sqrt(1 + lambda_j^2) / n!, and (iii) the
    winding lift reproduces the phase whenever it lies in the lifted
    window ((pi, 2*pi) on 4-folds, (pi/2, 3*pi/2) on 3-folds).  Returns a
    structured report instead of raising on mismatch.
    """
    t = as_eigen(lam)
    p = constant_model(t)
    phase = lagrangian_phase(t)
    analytic = analytic_angle_from_integrals(p)
    angle_delta = _mod_angle_delta(analytic, phase)

    r_expected = math.prod(math.hypot(1.0, v) for v in t.values) / math.factorial(t.n)
    r_actual = abs(z_of_t(p, 1.0))
    r_delta_rel = abs(r_actual - r_expected) / max(1.0, r_expected)

    window = (math.pi, TWO_PI) if t.n == 4 else (0.5 * math.pi, 1.5 * math.pi)
    theta_alg = None
    winding_delta = None
    origin = None
    if window[0] < phase < window[1]:
        try:
            theta_alg = winding_report(p).theta_alg
            winding_delta = abs(theta_alg - phase)
        except DegeneratePathError as exc:
            origin = exc.t_origin

    passed = (
        angle_delta <= ANGLE_TOL
        and r_delta_rel <= R_TOL
        and origin is None
        and (winding_delta is None or winding_delta <= ANGLE_TOL)
    )
    return ConsistencyReport(
        lam=t,
        phase=phase,
        analytic_angle=analytic,
        angle_delta=angle_delta,
        r_expected=r_expected,
        r_actual=r_actual,
        r_delta_rel=r_delta_rel,
        theta_alg=theta_alg,
        winding_delta=winding_delta,
        origin_hit=origin,
        passed=passed,
    )
