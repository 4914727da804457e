"""Exact characteristic polynomials, Sturm counting, root isolation."""

from fractions import Fraction as F

import numpy as np
import pytest

from regspectra import exactpoly as ep


def test_charpoly_small():
    assert ep.charpoly([[2]]) == [F(-2), F(1)]
    assert ep.charpoly([[0, 1], [1, 0]]) == [F(-1), F(0), F(1)]
    # companion-style check: trace and determinant appear with the right signs
    m = [[1, 2], [3, 4]]
    assert ep.charpoly(m) == [F(4 * 1 - 2 * 3), F(-5), F(1)]


def test_charpoly_vs_numpy_roots():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        m = rng.integers(-3, 4, size=(n, n))
        coeffs = ep.charpoly(m.tolist())
        ref = np.sort_complex(np.linalg.eigvals(m.astype(float)))
        # evaluate the polynomial at the numpy eigenvalues: should be ~0
        for z in ref:
            val = sum(complex(c) * z**i for i, c in enumerate(coeffs))
            assert abs(val) < 1e-6 * (1 + abs(z)) ** n


def test_eigenvalues_exact_with_multiplicity():
    k4 = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    roots = ep.eigenvalues_exact(k4)
    assert len(roots) == 2
    (v1, m1), (v2, m2) = roots
    assert abs(v1 + 1) < 1e-10 and m1 == 3
    assert abs(v2 - 3) < 1e-10 and m2 == 1


def test_eigenvalues_exact_random_symmetric():
    rng = np.random.default_rng(9)
    for _ in range(15):
        n = int(rng.integers(2, 8))
        m = rng.integers(-2, 3, size=(n, n))
        m = m + m.T
        got = sorted(v for v, mult in ep.eigenvalues_exact(m.tolist()) for _ in range(mult))
        ref = sorted(np.linalg.eigvalsh(m.astype(float)))
        assert len(got) == n
        assert max(abs(x - y) for x, y in zip(got, ref)) < 1e-8


def test_count_roots_greater():
    k4 = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    p = ep.charpoly(k4)
    assert ep.count_roots_greater(p, F(3)) == 0
    assert ep.count_roots_greater(p, F(-1)) == 1  # endpoint is a triple root
    assert ep.count_roots_greater(p, F(-2)) == 2
    assert ep.count_roots_greater(p, F(0)) == 1


def test_squarefree_decomposition():
    # (x-1)^2 (x+2): Yun must split multiplicities 1 and 2
    poly = [F(2), F(-3), F(0), F(1)]
    factors = ep.squarefree_decomposition(poly)
    mults = sorted(m for _, m in factors)
    assert mults == [1, 2]
    roots = ep.real_roots_with_multiplicity(poly)
    assert [(round(r), m) for r, m in roots] == [(-2, 1), (1, 2)]


def test_real_roots_precision():
    # x^2 - 2: sqrt(2) to high precision
    roots = ep.real_roots([F(-2), F(0), F(1)])
    assert len(roots) == 2
    assert abs(roots[1] - 2**0.5) < 1e-12


def test_degenerate_polynomials():
    assert ep.real_roots([F(3)]) == []
    assert ep.real_roots([]) == []
    assert ep.eigenvalues_exact([[0]]) == [(0.0, 1)]


def test_poly_division_and_gcd():
    # (x^2 - 1) = (x - 1)(x + 1)
    q, r = ep.poly_divmod([F(-1), F(0), F(1)], [F(1), F(1)])
    assert r == [] and q == [F(-1), F(1)]
    g = ep.poly_gcd([F(-1), F(0), F(1)], [F(-1), F(1)])
    assert g == [F(-1), F(1)]
    with pytest.raises(ZeroDivisionError):
        ep.poly_divmod([F(1)], [])
