"""Eigensolver kernel: accuracy contract against an independent reference."""

import math

import numpy as np
import pytest

from regspectra import kernel
from regspectra._spectral_py import sym_eigenvalues as pure_eig


def _max_norm(m):
    return float(np.max(np.abs(m).sum(axis=1)))


@pytest.mark.parametrize("force_python", [False, True])
def test_random_symmetric_against_numpy(force_python):
    rng = np.random.default_rng(42)
    for _ in range(40):
        n = int(rng.integers(1, 35))
        m = rng.normal(size=(n, n)) * rng.uniform(0.1, 50)
        m = (m + m.T) / 2
        ours = kernel.sym_eigenvalues(m, force_python=force_python)
        ref = np.linalg.eigvalsh(m)
        assert np.max(np.abs(ours - ref)) <= 1e-10 * (1 + _max_norm(m))


def test_backends_agree():
    rng = np.random.default_rng(7)
    m = rng.integers(0, 2, size=(25, 25)).astype(float)
    m = np.triu(m, 1)
    m = m + m.T
    a = kernel.sym_eigenvalues(m)
    b = kernel.sym_eigenvalues(m, force_python=True)
    assert np.max(np.abs(a - b)) < 1e-12


def test_star_closed_form():
    # K_{1,t}: extremes +-sqrt(t), the rest zero
    for t in (1, 3, 8, 24):
        a = np.zeros((t + 1, t + 1))
        a[0, 1:] = a[1:, 0] = 1
        vals = kernel.sym_eigenvalues(a)
        assert abs(vals[-1] - math.sqrt(t)) < 1e-12
        assert abs(vals[0] + math.sqrt(t)) < 1e-12
        if t > 1:
            assert np.max(np.abs(vals[1:-1])) < 1e-12


def test_cycle_closed_form():
    for n in (3, 4, 7, 12):
        a = np.zeros((n, n))
        for i in range(n):
            a[i, (i + 1) % n] = a[(i + 1) % n, i] = 1
        vals = sorted(kernel.sym_eigenvalues(a))
        ref = sorted(2 * math.cos(2 * math.pi * j / n) for j in range(n))
        assert max(abs(x - y) for x, y in zip(vals, ref)) < 1e-12


def test_biclique_closed_form():
    # K_{2,t}: lambda_min = -sqrt(2t)
    for t in (1, 2, 5, 9):
        n = 2 + t
        a = np.zeros((n, n))
        a[:2, 2:] = 1
        a[2:, :2] = 1
        vals = kernel.sym_eigenvalues(a)
        assert abs(vals[0] + math.sqrt(2 * t)) < 1e-12


def test_zero_and_diagonal():
    assert np.allclose(kernel.sym_eigenvalues(np.zeros((4, 4))), 0)
    d = np.diag([3.0, -1.0, 2.0])
    assert np.allclose(kernel.sym_eigenvalues(d), [-1.0, 2.0, 3.0])


def test_pure_python_entry_point_matches():
    m = [[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]
    vals = pure_eig(m)
    assert vals == sorted(vals)
    assert abs(vals[-1] - 2) < 1e-12 and abs(vals[0] + 1) < 1e-12


def test_reentrant_no_state():
    # interleaved solves on different matrices must not disturb each other
    a = np.diag([1.0, 2.0, 3.0])
    b = np.ones((5, 5)) - np.eye(5)
    first = kernel.sym_eigenvalues(a).copy()
    kernel.sym_eigenvalues(b)
    assert np.array_equal(first, kernel.sym_eigenvalues(a))
