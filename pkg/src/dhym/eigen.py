"""Pointwise eigenvalue machinery for dHYM-type models.

A point of a deformed Hermitian-Yang-Mills model is described by the real
eigenvalues lambda_1 <= ... <= lambda_n of a closed (1,1)-form measured
against the Kaehler metric.  Everything downstream -- the Lagrangian phase
sum(arctan lambda_j), the elementary symmetric polynomials sigma_k, the
branch inequalities and the cone conditions -- is a symmetric function of
that tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import DomainError, PhaseOutsideBranchError
from .reports import InequalityReport, compare

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class EigenTuple:
    """Sorted, finite, real eigenvalues of form-against-metric at a point."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(sorted(float(v) for v in self.values))
        if not vals:
            raise DomainError("eigenvalue tuple must be non-empty")
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"eigenvalues must be finite, got {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_dict(self):
        return {"lambda": list(self.values)}


def as_eigen(lam) -> EigenTuple:
    """Coerce a sequence of reals (or an EigenTuple) to a sorted EigenTuple."""
    if isinstance(lam, EigenTuple):
        return lam
    return EigenTuple(tuple(lam))


class Branch(Enum):
    """Open intervals of the lifted angle used by the branch theorems.

    SUPERCRITICAL and MID are the two halves of FULL = (pi, 2*pi) on a
    4-fold; N3 is the 3-fold hypothesis window (pi/2, 3*pi/2).
    """

    SUPERCRITICAL = (1.5 * math.pi, TWO_PI)
    MID = (math.pi, 1.5 * math.pi)
    FULL = (math.pi, TWO_PI)
    N3 = (0.5 * math.pi, 1.5 * math.pi)

    @property
    def endpoints(self) -> tuple[float, float]:
        return self.value

    def contains(self, theta: float) -> bool:
        lo, hi = self.value
        return lo < theta < hi


def elementary_all(values) -> list[float]:
    """All elementary symmetric polynomials [sigma_0, ..., sigma_n].

    Uses the stable one-pass recurrence e_k += v * e_{k-1}; tests compare
    it against direct subset enumeration.
    """
    vals = tuple(values)
    n = len(vals)
    e = [0.0] * (n + 1)
    e[0] = 1.0
    for j, v in enumerate(vals, start=1):
        for k in range(min(j, n), 0, -1):
            e[k] += v * e[k - 1]
    return e


def sigma(lam, k: int) -> float:
    """k-th elementary symmetric polynomial of the tuple; sigma_0 = 1."""
    t = as_eigen(lam)
    if not 0 <= k <= t.n:
        raise DomainError(f"sigma index k={k} out of range 0..{t.n}")
    return elementary_all(t.values)[k]


def lagrangian_phase(lam) -> float:
    """Lagrangian phase theta = sum(arctan lambda_j), in (-n*pi/2, n*pi/2)."""
    return sum(math.atan(v) for v in as_eigen(lam).values)


def phase_components(lam) -> tuple[float, float]:
    """Real and imaginary part of prod_j (1 + i*lambda_j).

    Equals (sum of (-1)^(k/2) sigma_k over even k,
            sum of (-1)^((k-1)/2) sigma_k over odd k);
    for n = 4 that is (1 - sigma_2 + sigma_4, sigma_1 - sigma_3).  The
    continuous argument of this complex number is the Lagrangian phase
    modulo 2*pi.
    """
    e = elementary_all(as_eigen(lam).values)
    re = sum(e[k] if k % 4 == 0 else -e[k] for k in range(0, len(e), 2))
    im = sum(e[k] if k % 4 == 1 else -e[k] for k in range(1, len(e), 2))
    return re, im


def gamma_cone(lam) -> int:
    """Largest k with sigma_1, ..., sigma_k all strictly positive.

    Returns 0 when sigma_1 <= 0; k = n is the pointwise Kaehler-cone
    condition.
    """
    e = elementary_all(as_eigen(lam).values)
    k = 0
    for s in e[1:]:
        if s > 0.0:
            k += 1
        else:
            break
    return k


def factorization_identity(lam) -> tuple[float, float]:
    """Two evaluations of the same quartic-eigenvalue polynomial.

    LHS = sigma_3 - sigma_1*(sigma_2 - lambda_2*lambda_4) and
    RHS = -(l2+l3+l4)(l1+l3)(l1+l2) - l3*l4*(l1+l3) - l4^2*(l1+l3)
    agree identically; evaluating both sides exercises the cancellation
    pattern behind the mid-branch estimate sigma_1*sigma_2 > sigma_1 + sigma_3.
    """
    t = as_eigen(lam)
    if t.n != 4:
        raise DomainError(f"factorization identity needs 4 eigenvalues, got {t.n}")
    l1, l2, l3, l4 = t.values
    e = elementary_all(t.values)
    lhs = e[3] - e[1] * (e[2] - l2 * l4)
    rhs = (
        -(l2 + l3 + l4) * (l1 + l3) * (l1 + l2)
        - l3 * l4 * (l1 + l3)
        - l4 * l4 * (l1 + l3)
    )
    return lhs, rhs


def mixed_sigma(lam, mu, j: int, k: int) -> float:
    """Brute-force two-class symmetric sum over disjoint index subsets.

    Sum over disjoint I (|I| = j) and J (|J| = k) of
    prod_{i in I} lambda_i * prod_{i in J} mu_i.  With mu = lam this equals
    C(j+k, j) * sigma_{j+k}(lam).  Kept as plain enumeration: it is the
    oracle for diagonal-model intersection numbers.
    """
    lt, mt = as_eigen(lam), as_eigen(mu)
    if lt.n != mt.n:
        raise DomainError(f"dimension mismatch: {lt.n} vs {mt.n}")
    n = lt.n
    if j < 0 or k < 0 or j + k > n:
        raise DomainError(f"subset sizes j={j}, k={k} invalid for n={n}")
    total = 0.0
    for idx_i in combinations(range(n), j):
        rest = [i for i in range(n) if i not in idx_i]
        pi = math.prod(lt.values[i] for i in idx_i)
        for idx_j in combinations(rest, k):
            total += pi * math.prod(mt.values[i] for i in idx_j)
    return total


def _supercritical_entries(t: EigenTuple):
    pair_min = min(a * b for a, b in combinations(t.values, 2))
    e = elementary_all(t.values)
    return (
        compare("min_eigenvalue", min(t.values), 0.0),
        compare("min_pair_product", pair_min, 1.0),
        compare("sigma3_minus_sigma1", e[3], e[1]),
    )


def _mid_entries(t: EigenTuple):
    e = elementary_all(t.values)
    l1, l2, l3, l4 = t.values
    return (
        compare("sigma1", e[1], 0.0),
        compare("sigma2", e[2], 0.0),
        compare("sigma3", e[3], 0.0),
        compare("sigma3_minus_sigma1", e[3], e[1]),
        compare("sigma2_minus_sigma4_minus_1", e[2], e[4] + 1.0),
        compare("sigma2_minus_2", e[2], 2.0),
        compare("lambda2_lambda4", l2 * l4, 1.0),
        compare("lambda3_lambda4", l3 * l4, 1.0),
    )


def _full_entries(t: EigenTuple):
    # facts valid on all of (pi, 2*pi): the sign of sigma_2 - sigma_4 - 1
    # flips at 3*pi/2, so it is deliberately absent here.
    e = elementary_all(t.values)
    l1, l2, l3, l4 = t.values
    return (
        compare("sigma1", e[1], 0.0),
        compare("sigma2", e[2], 0.0),
        compare("sigma3", e[3], 0.0),
        compare("sigma3_minus_sigma1", e[3], e[1]),
        compare("sigma2_minus_2", e[2], 2.0),
        compare("lambda2_lambda4", l2 * l4, 1.0),
        compare("lambda3_lambda4", l3 * l4, 1.0),
    )


def _n3_entries(t: EigenTuple):
    e = elementary_all(t.values)
    return (
        compare("sigma1", e[1], 0.0),
        compare("sigma2", e[2], 0.0),
        compare("sigma2_minus_1", e[2], 1.0),
    )


_BRANCH_DIMENSION = {
    Branch.SUPERCRITICAL: 4,
    Branch.MID: 4,
    Branch.FULL: 4,
    Branch.N3: 3,
}

_BRANCH_ENTRIES = {
    Branch.SUPERCRITICAL: _supercritical_entries,
    Branch.MID: _mid_entries,
    Branch.FULL: _full_entries,
    Branch.N3: _n3_entries,
}


def branch_check(lam, branch: Branch) -> InequalityReport:
    """Check the pointwise inequalities asserted on a phase branch.

    Requires lagrangian_phase(lam) to lie in the open branch interval;
    raises PhaseOutsideBranchError naming the actual phase otherwise.
    Returns each asserted inequality with its signed margin:

    * SUPERCRITICAL: min lambda_i > 0, min pairwise product > 1 (which
      forces sigma_3 > sigma_1, also reported);
    * MID: sigma_1, sigma_2, sigma_3 > 0, sigma_3 - sigma_1 > 0,
      sigma_2 - sigma_4 - 1 > 0, sigma_2 > 2, lambda_2*lambda_4 > 1 and
      lambda_3*lambda_4 > 1;
    * FULL: the intersection of the facts that hold on both halves;
    * N3 (3-folds): sigma_1 > 0, sigma_2 > 0 and sigma_2 > 1.
    """
    t = as_eigen(lam)
    need = _BRANCH_DIMENSION[branch]
    if t.n != need:
        raise DomainError(f"branch {branch.name} expects {need} eigenvalues, got {t.n}")
    theta = lagrangian_phase(t)
    if not branch.contains(theta):
        raise PhaseOutsideBranchError(theta, branch)
    return InequalityReport(f"branch_{branch.name.lower()}", _BRANCH_ENTRIES[branch](t))


def branch_for_phase(theta: float, n: int = 4) -> Branch:
    """The finest branch containing the given phase (4-folds split FULL)."""
    if n == 3:
        if Branch.N3.contains(theta):
            return Branch.N3
        raise DomainError(f"phase {theta:.12g} outside the 3-fold window")
    if Branch.SUPERCRITICAL.contains(theta):
        return Branch.SUPERCRITICAL
    if Branch.MID.contains(theta):
        return Branch.MID
    if Branch.FULL.contains(theta):
        return Branch.FULL  # exactly 3*pi/2
    raise DomainError(f"phase {theta:.12g} outside (pi, 2*pi)")
