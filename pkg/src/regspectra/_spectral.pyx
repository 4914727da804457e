# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled symmetric eigensolver kernel (Householder + implicit-shift QL).

Twin of ``_spectral_py``; the pure-Python module is the reference for the
algorithm and the two must stay in sync.
"""

from libc.math cimport fabs, sqrt, hypot, copysign

cdef double _EPS = 2.220446049250313e-16
cdef int _MAX_QL_SWEEPS = 50


def sym_eigenvalues_flat(double[::1] a, double[::1] d, double[::1] e, Py_ssize_t n):
    """Eigenvalues of the n*n symmetric matrix stored row-major in `a`.

    `a` is destroyed; results are written to `d` (unsorted). `e` is scratch.
    """
    cdef Py_ssize_t i, j, k, l, m
    cdef double h, scale, f, g, hh, dd, r, s, c, p, b
    cdef int sweeps, underflow

    if n == 1:
        d[0] = a[0]
        return

    # Householder reduction to tridiagonal form (lower triangle of `a`).
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = 0.0
            for k in range(i):
                scale += fabs(a[i * n + k])
            if scale == 0.0:
                e[i] = a[i * n + l]
            else:
                for k in range(i):
                    a[i * n + k] /= scale
                    h += a[i * n + k] * a[i * n + k]
                f = a[i * n + l]
                g = -sqrt(h) if f >= 0.0 else sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i * n + l] = f - g
                f = 0.0
                for j in range(i):
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j * n + k] * a[i * n + k]
                    for k in range(j + 1, i):
                        g += a[k * n + j] * a[i * n + k]
                    e[j] = g / h
                    f += e[j] * a[i * n + j]
                hh = f / (h + h)
                for j in range(i):
                    f = a[i * n + j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        a[j * n + k] -= f * e[k] + g * a[i * n + k]
        else:
            e[i] = a[i * n + l]
    for i in range(n):
        d[i] = a[i * n + i]
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0

    # QL iteration with implicit Wilkinson shifts.
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise ArithmeticError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = 0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = 1
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
