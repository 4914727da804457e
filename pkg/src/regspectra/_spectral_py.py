"""Pure-Python symmetric eigensolver: Householder tridiagonalization + QL.

This is the fallback twin of the compiled kernel in ``_spectral.pyx``; both
implement the same algorithm and must stay in sync.  Eigenvalues only, no
eigenvectors.  Accuracy is a few ulps relative to the matrix norm, far inside
the 1e-10 * (1 + max-norm) contract for the matrix sizes this package uses.
"""

from __future__ import annotations

import math

_EPS = 2.220446049250313e-16
_MAX_QL_SWEEPS = 50


def _householder(a: list[list[float]], n: int, d: list[float], e: list[float]) -> None:
    """Reduce symmetric `a` (lower triangle used, destroyed) to tridiagonal d/e."""
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = 0.0
            for k in range(i):
                scale += abs(a[i][k])
            if scale == 0.0:
                e[i] = a[i][l]
            else:
                row = a[i]
                for k in range(i):
                    row[k] /= scale
                    h += row[k] * row[k]
                f = row[l]
                g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
                e[i] = scale * g
                h -= f * g
                row[l] = f - g
                f = 0.0
                for j in range(i):
                    g = 0.0
                    aj = a[j]
                    for k in range(j + 1):
                        g += aj[k] * row[k]
                    for k in range(j + 1, i):
                        g += a[k][j] * row[k]
                    e[j] = g / h
                    f += e[j] * row[j]
                hh = f / (h + h)
                for j in range(i):
                    f = row[j]
                    g = e[j] - hh * f
                    e[j] = g
                    aj = a[j]
                    for k in range(j + 1):
                        aj[k] -= f * e[k] + g * row[k]
        else:
            e[i] = a[i][l]
    for i in range(n):
        d[i] = a[i][i]
    # reindex: e[j] couples d[j] and d[j+1]
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0


def _ql_implicit(d: list[float], e: list[float], n: int) -> None:
    """QL iteration with implicit Wilkinson shifts on tridiagonal (d, e)."""
    hypot = math.hypot
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise ArithmeticError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0


def sym_eigenvalues(matrix) -> list[float]:
    """All eigenvalues of a real symmetric matrix, sorted ascending.

    `matrix` is any square nested sequence of floats; it is copied, and only
    the lower triangle is read (symmetry is the caller's responsibility).
    """
    n = len(matrix)
    if n == 1:
        return [float(matrix[0][0])]
    a = [[float(x) for x in row] for row in matrix]
    d = [0.0] * n
    e = [0.0] * n
    _householder(a, n, d, e)
    _ql_implicit(d, e, n)
    d.sort()
    return d
