import math

import numpy as np
import pytest

from dhym import (
    HermitianPair,
    eigensystem,
    jacobi_hermitian,
    lagrangian_phase,
    phase_of_pair,
    relative_spectrum,
)
from dhym.errors import InvalidPairError
from dhym.hermitian import matrix_from_dict, matrix_to_dict


def random_hermitian(rng, dim, scale=1.0):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * 0.5 * (m + m.conj().T)


def random_pair(rng, dim):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    g = m @ m.conj().T + dim * np.eye(dim)
    return HermitianPair(g, random_hermitian(rng, dim))


def charpoly_roots(a):
    """Independent oracle: characteristic polynomial via the trace
    (Faddeev-LeVerrier) recursion, then numpy root finding."""
    n = a.shape[0]
    coeffs = [1.0 + 0j]
    m = np.array(a, dtype=complex)
    for k in range(1, n + 1):
        if k > 1:
            m = a @ (m + coeffs[-1] * np.eye(n))
        coeffs.append(-np.trace(m) / k)
    return np.sort(np.roots(coeffs).real)


def test_identity_metric_diagonal_form():
    pair = HermitianPair(np.eye(4), np.diag([1.0, 2.0, 3.0, 4.0]))
    assert relative_spectrum(pair).values == (1.0, 2.0, 3.0, 4.0)


def test_scaled_metric():
    pair = HermitianPair(2.0 * np.eye(4), np.eye(4))
    assert relative_spectrum(pair).values == pytest.approx((0.5, 0.5, 0.5, 0.5))


def test_two_by_two_example():
    pair = HermitianPair(np.array([[2.0, 1.0], [1.0, 2.0]]), np.eye(2))
    spec = relative_spectrum(pair)
    assert spec.values[0] == pytest.approx(1 / 3, abs=1e-12)
    assert spec.values[1] == pytest.approx(1.0, abs=1e-12)


def test_phase_examples():
    assert phase_of_pair(HermitianPair(np.eye(4), np.eye(4))) == pytest.approx(math.pi)
    assert phase_of_pair(HermitianPair(np.eye(4), np.zeros((4, 4)))) == 0.0


def test_rejects_non_hermitian():
    bad = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(InvalidPairError, match="A"):
        HermitianPair(np.eye(2), bad)
    with pytest.raises(InvalidPairError, match="G"):
        HermitianPair(bad, np.eye(2))


def test_rejects_indefinite_metric():
    g = np.diag([1.0, -1.0])
    with pytest.raises(InvalidPairError, match="pivot 1"):
        HermitianPair(g, np.eye(2))


def test_rejects_shape_problems():
    with pytest.raises(InvalidPairError, match="square"):
        HermitianPair(np.ones((2, 3)), np.eye(2))
    with pytest.raises(InvalidPairError, match="mismatch"):
        HermitianPair(np.eye(3), np.eye(2))


def test_tolerates_roundtrip_noise():
    g = np.eye(3) + 1e-15 * np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    pair = HermitianPair(g, np.eye(3))
    assert np.allclose(pair.G, pair.G.conj().T)


def test_residuals_on_random_pairs():
    rng = np.random.default_rng(1)
    for _ in range(20):
        dim = int(rng.integers(2, 9))
        pair = random_pair(rng, dim)
        w, u, _ = eigensystem(pair)
        norm_a = np.linalg.norm(pair.A, 2)
        for i in range(dim):
            res = np.linalg.norm(pair.A @ u[:, i] - w.values[i] * (pair.G @ u[:, i]))
            assert res <= 1e-9 * max(norm_a, 1e-300)


def test_spectrum_matches_charpoly_oracle():
    rng = np.random.default_rng(2)
    for dim in (2, 3, 4):
        for _ in range(10):
            a = random_hermitian(rng, dim)
            pair = HermitianPair(np.eye(dim), a)
            got = np.array(relative_spectrum(pair).values)
            want = charpoly_roots(a)
            assert np.max(np.abs(got - want)) <= 1e-9 * max(1.0, np.max(np.abs(want)))


def test_congruence_invariance_of_phase():
    rng = np.random.default_rng(3)
    base = HermitianPair(np.eye(4), np.diag([2.0, 3.0, 4.0, 5.0]))
    theta = phase_of_pair(base)
    assert theta == pytest.approx(lagrangian_phase((2, 3, 4, 5)), abs=1e-12)
    for _ in range(25):
        p = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        if np.linalg.cond(p) > 1e3:
            continue
        pair = HermitianPair(p.conj().T @ base.G @ p, p.conj().T @ base.A @ p)
        assert phase_of_pair(pair) == pytest.approx(theta, abs=1e-8)


def test_jacobi_convergence_dim16():
    rng = np.random.default_rng(4)
    for _ in range(5):
        b = random_hermitian(rng, 16, scale=10.0)
        w, v, info = jacobi_hermitian(b)
        assert info.sweeps <= 50
        assert info.off_norm <= 1e-12 * np.linalg.norm(b)
        # unitary eigenvectors diagonalise b
        assert np.allclose(v.conj().T @ v, np.eye(16), atol=1e-12)
        assert np.allclose(v.conj().T @ b @ v, np.diag(w), atol=1e-11 * np.linalg.norm(b))
        assert np.all(np.diff(w) >= 0.0)


def test_matrix_json_round_trip():
    rng = np.random.default_rng(5)
    pair = random_pair(rng, 3)
    d = pair.to_dict()
    assert set(d) == {"G", "A"}
    assert set(d["G"]) == {"dim", "re", "im"}
    back = HermitianPair.from_dict(d)
    assert np.allclose(back.G, pair.G)
    assert np.allclose(back.A, pair.A)


def test_matrix_from_dict_validation():
    with pytest.raises(InvalidPairError):
        matrix_from_dict({"dim": 3, "re": [[1.0]], "im": [[0.0]]})
    with pytest.raises(InvalidPairError):
        matrix_from_dict({"re": [[1.0]]})
    m = matrix_from_dict(matrix_to_dict(np.eye(2)))
    assert np.allclose(m, np.eye(2))
