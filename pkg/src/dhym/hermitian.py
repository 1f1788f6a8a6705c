"""Relative spectra of Hermitian pairs (metric G, form A).

The eigenvalues of G^{-1}A that feed the pointwise machinery are computed
dependency-free: Cholesky-factor the metric, G = L L*, then diagonalise
the Hermitian matrix B = L^{-1} A L^{-*} with a cyclic-by-row complex
Jacobi iteration.  Dimensions here are tiny (a handful of tangent
directions), so simplicity and exact reproducibility beat sophistication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import EigenTuple, lagrangian_phase
from .errors import ConvergenceError, InvalidPairError

#: relative Hermiticity deviation tolerated before rejecting the input
HERMITICITY_REL = 1e-12

#: sweep cap for the cyclic Jacobi iteration
MAX_SWEEPS = 50

#: stop once the off-diagonal Frobenius norm falls below this times ||B||_F
JACOBI_REL_TOL = 1e-14

#: guaranteed residual ||A v - lambda G v|| <= RESIDUAL_REL * ||A||
RESIDUAL_REL = 1e-9


def _hermitized(m: np.ndarray, name: str) -> np.ndarray:
    """Symmetrise round-trip noise below HERMITICITY_REL; reject more."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidPairError(f"{name} must be a square matrix, got shape {m.shape}")
    dev = np.linalg.norm(m - m.conj().T)
    scale = np.linalg.norm(m)
    if dev > HERMITICITY_REL * max(scale, 1e-300):
        raise InvalidPairError(
            f"{name} is not Hermitian: relative deviation {dev / max(scale, 1e-300):.3e}"
        )
    return 0.5 * (m + m.conj().T)


def cholesky_lower(g: np.ndarray) -> np.ndarray:
    """Complex Cholesky factor L with G = L L*; reports the failing pivot."""
    n = g.shape[0]
    low = np.zeros((n, n), dtype=complex)
    for j in range(n):
        pivot = g[j, j].real - np.sum(np.abs(low[j, :j]) ** 2)
        if pivot <= 0.0 or not math.isfinite(pivot):
            raise InvalidPairError(
                f"metric is not positive definite: Cholesky pivot {j} is {pivot:.6e}"
            )
        low[j, j] = math.sqrt(pivot)
        if j + 1 < n:
            low[j + 1 :, j] = (
                g[j + 1 :, j] - low[j + 1 :, :j] @ low[j, :j].conj()
            ) / low[j, j]
    return low


@dataclass(frozen=True)
class HermitianPair:
    """A positive-definite metric matrix G and a Hermitian form matrix A."""

    G: np.ndarray
    A: np.ndarray

    def __post_init__(self):
        g = _hermitized(self.G, "G")
        a = _hermitized(self.A, "A")
        if g.shape != a.shape:
            raise InvalidPairError(f"shape mismatch: G {g.shape} vs A {a.shape}")
        cholesky_lower(g)  # positivity gate
        g.setflags(write=False)
        a.setflags(write=False)
        object.__setattr__(self, "G", g)
        object.__setattr__(self, "A", a)

    @property
    def dim(self) -> int:
        return self.G.shape[0]

    def to_dict(self):
        return {"G": matrix_to_dict(self.G), "A": matrix_to_dict(self.A)}

    @classmethod
    def from_dict(cls, obj) -> "HermitianPair":
        return cls(matrix_from_dict(obj["G"]), matrix_from_dict(obj["A"]))


def matrix_to_dict(m: np.ndarray):
    m = np.asarray(m, dtype=complex)
    return {
        "dim": m.shape[0],
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def matrix_from_dict(obj) -> np.ndarray:
    try:
        dim = int(obj["dim"])
        m = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPairError(f"malformed matrix object: {exc}") from exc
    if m.shape != (dim, dim):
        raise InvalidPairError(f"matrix shape {m.shape} does not match dim {dim}")
    return m


@dataclass(frozen=True)
class JacobiInfo:
    sweeps: int
    off_norm: float


def _off_norm(b: np.ndarray) -> float:
    off = b - np.diag(np.diag(b))
    return float(np.linalg.norm(off))


def jacobi_hermitian(b: np.ndarray):
    """Diagonalise a Hermitian matrix by cyclic-by-row complex Jacobi.

    Returns (eigenvalues ascending, unitary columns V, JacobiInfo).  Pivots
    with |b_pq| <= 1e-15 * sqrt(|b_pp b_qq|) are skipped; convergence is
    declared when the off-diagonal Frobenius norm drops below
    JACOBI_REL_TOL * ||B||_F, and failing that within MAX_SWEEPS sweeps
    raises ConvergenceError.
    """
    b = _hermitized(b, "B").astype(complex)
    n = b.shape[0]
    v = np.eye(n, dtype=complex)
    norm0 = max(float(np.linalg.norm(b)), 1e-300)
    sweeps = 0
    while _off_norm(b) > JACOBI_REL_TOL * norm0:
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps: "
                f"off-norm {_off_norm(b):.3e} vs target {JACOBI_REL_TOL * norm0:.3e}"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = b[p, q]
                r = abs(apq)
                app = b[p, p].real
                aqq = b[q, q].real
                if r <= 1e-15 * math.sqrt(abs(app * aqq)):
                    continue
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                sp = s * phase
                spc = s * phase.conjugate()
                col_p = b[:, p].copy()
                col_q = b[:, q].copy()
                b[:, p] = c * col_p - spc * col_q
                b[:, q] = sp * col_p + c * col_q
                row_p = b[p, :].copy()
                row_q = b[q, :].copy()
                b[p, :] = c * row_p - sp * row_q
                b[q, :] = spc * row_p + c * row_q
                b[p, q] = 0.0
                b[q, p] = 0.0
                b[p, p] = b[p, p].real
                b[q, q] = b[q, q].real
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - spc * vec_q
                v[:, q] = sp * vec_p + c * vec_q
        sweeps += 1
    w = np.diag(b).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], JacobiInfo(sweeps, _off_norm(b))


def eigensystem(pair: HermitianPair):
    """Eigenvalues (ascending EigenTuple) and G-orthonormal eigenvectors.

    Solves A u = lambda G u via B = L^{-1} A L^{-*} and maps eigenvectors
    back through u = L^{-*} v; the residual ||A u - lambda G u|| is
    guaranteed below RESIDUAL_REL * ||A||.
    """
    low = cholesky_lower(pair.G)
    t = np.linalg.solve(low, pair.A)
    b = np.linalg.solve(low, t.conj().T)
    w, v, info = jacobi_hermitian(b)
    u = np.linalg.solve(low.conj().T, v)
    norm_a = float(np.linalg.norm(pair.A, 2))
    worst = 0.0
    for i in range(pair.dim):
        res = float(np.linalg.norm(pair.A @ u[:, i] - w[i] * (pair.G @ u[:, i])))
        worst = max(worst, res)
    if worst > RESIDUAL_REL * max(norm_a, 1e-300):
        raise ConvergenceError(
            f"eigenpair residual {worst:.3e} exceeds {RESIDUAL_REL:.1e} * ||A||"
        )
    return EigenTuple(tuple(w)), u, info


def relative_spectrum(pair: HermitianPair) -> EigenTuple:
    """Real eigenvalues of G^{-1}A, sorted ascending."""
    return eigensystem(pair)[0]


def phase_of_pair(pair: HermitianPair) -> float:
    """Lagrangian phase of the relative spectrum.

    Invariant under simultaneous congruence (G, A) -> (P* G P, P* A P).
    """
    return lagrangian_phase(relative_spectrum(pair))
