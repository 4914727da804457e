"""Exact rational polynomial tools for small matrices.

Characteristic polynomials are computed over Fractions (Faddeev-LeVerrier),
real roots are isolated with Sturm chains and refined by bisection, and
multiplicities come from Yun's square-free decomposition.  This powers the
general small-matrix eigensolver for (possibly non-symmetric) quotient
matrices and the exact second-eigenvalue recheck for boundary cases in the
extremal search; degrees stay <= 16, so exact arithmetic is cheap.

Polynomials are lists of Fractions indexed by power (low to high) with a
nonzero leading coefficient, except for the zero polynomial [].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return _trim([c * i for i, c in enumerate(p)][1:])


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1] / lead
        if coef:
            q[i] = coef
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    return _trim(q), _trim(num)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def monic(p: Poly) -> Poly:
    p = _trim(p)
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


# -- characteristic polynomial -------------------------------------------------


def charpoly(matrix) -> Poly:
    """Monic characteristic polynomial det(xI - M) of a square rational matrix.

    Faddeev-LeVerrier over exact Fractions; accepts any nested structure of
    ints / Fractions / floats (floats are taken at their exact binary value).
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        if k == n:
            break
        # mk <- M (mk + ck I)
        for i in range(n):
            mk[i][i] += ck
        nxt = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            mi = m[i]
            for j in range(n):
                s = Fraction(0)
                for t in range(n):
                    if mi[t]:
                        s += mi[t] * mk[t][j]
                nxt[i][j] = s
        mk = nxt
    return coeffs


# -- Sturm machinery ------------------------------------------------------------


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [_trim(p)]
    if degree(chain[0]) < 1:
        return chain
    chain.append(derivative(chain[0]))
    while degree(chain[-1]) > 0:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def variations_at(chain: list[Poly], x: Fraction) -> int:
    return _variations([_sign(poly_eval(q, x)) for q in chain])


def variations_at_inf(chain: list[Poly], positive: bool) -> int:
    signs = []
    for q in chain:
        if not q:
            signs.append(0)
        elif positive:
            signs.append(_sign(q[-1]))
        else:
            signs.append(_sign(q[-1]) * (-1 if degree(q) % 2 else 1))
    return _variations(signs)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def squarefree_part(p: Poly) -> Poly:
    p = _trim(p)
    if degree(p) < 1:
        return monic(p)
    return monic(poly_divmod(p, poly_gcd(p, derivative(p)))[0])


def count_roots_in(p: Poly, a: Fraction, b: Fraction, chain=None) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    `chain` must be the Sturm chain of a squarefree polynomial; with the
    zero-skipping sign convention the variation count is right-continuous,
    which makes the half-open semantics exact even at root endpoints.
    """
    if chain is None:
        chain = sturm_chain(squarefree_part(p))
    return variations_at(chain, a) - variations_at(chain, b)


def count_roots_greater(p: Poly, a: Fraction) -> int:
    """Number of distinct real roots of p strictly greater than a."""
    sf = squarefree_part(p)
    # Strip a root exactly at the endpoint so Sturm endpoints are root-free.
    while sf and degree(sf) >= 1 and poly_eval(sf, a) == 0:
        sf = poly_divmod(sf, [-a, Fraction(1)])[0]
    if degree(sf) < 1:
        return 0
    chain = sturm_chain(sf)
    return variations_at(chain, a) - variations_at_inf(chain, positive=True)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B]."""
    p = _trim(p)
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


# -- real root isolation ---------------------------------------------------------


def _isolate(chain: list[Poly], a: Fraction, b: Fraction, count: int, out: list):
    if count == 0:
        return
    if count == 1:
        out.append((a, b))
        return
    mid = (a + b) / 2
    left = variations_at(chain, a) - variations_at(chain, mid)
    _isolate(chain, a, mid, left, out)
    _isolate(chain, mid, b, count - left, out)


def _refine(chain: list[Poly], a: Fraction, b: Fraction, width: Fraction) -> Fraction:
    while b - a > width:
        mid = (a + b) / 2
        if poly_eval(chain[0], mid) == 0:
            return mid  # landed exactly on the root (rational eigenvalue)
        if variations_at(chain, a) - variations_at(chain, mid) == 1:
            b = mid
        else:
            a = mid
    return (a + b) / 2


def real_roots(p: Poly, precision: Fraction = Fraction(1, 10**13)) -> list[float]:
    """Distinct real roots of p, ascending, refined to the given width."""
    p = _trim(p)
    if degree(p) < 1:
        return []
    sf = monic(poly_divmod(p, poly_gcd(p, derivative(p)))[0])
    chain = sturm_chain(sf)
    bound = root_bound(sf)
    total = count_roots_in(sf, -bound, bound, chain)
    intervals: list[tuple[Fraction, Fraction]] = []
    _isolate(chain, -bound, bound, total, intervals)
    width = precision * max(Fraction(1), bound)
    return [float(_refine(chain, a, b, width)) for a, b in intervals]


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: factors (q_i, i) with p ~ prod q_i^i, q_i square-free."""
    p = monic(p)
    if degree(p) < 1:
        return []
    dp = derivative(p)
    g = poly_gcd(p, dp)
    if degree(g) == 0:
        return [(p, 1)]
    out = []
    c = poly_divmod(p, g)[0]
    d = [x - y for x, y in _pad(poly_divmod(dp, g)[0], derivative(c))]
    d = _trim(d)
    i = 1
    while degree(c) > 0:
        a = poly_gcd(c, d)
        if degree(a) > 0:
            out.append((a, i))
        c_next = poly_divmod(c, a)[0] if degree(a) > 0 else c
        d_next = poly_divmod(d, a)[0] if degree(a) > 0 else d
        d = _trim([x - y for x, y in _pad(d_next, derivative(c_next))])
        c = c_next
        i += 1
    return out


def _pad(a: Poly, b: Poly):
    ln = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (ln - len(a))
    b = list(b) + [Fraction(0)] * (ln - len(b))
    return zip(a, b)


def real_roots_with_multiplicity(p: Poly) -> list[tuple[float, int]]:
    """Distinct real roots of p with multiplicities, sorted ascending."""
    out: list[tuple[float, int]] = []
    for factor, mult in squarefree_decomposition(p):
        out.extend((r, mult) for r in real_roots(factor))
    out.sort()
    return out


def eigenvalues_exact(matrix) -> list[tuple[float, int]]:
    """Real eigenvalues (value, multiplicity) of a small rational matrix.

    Computed via the characteristic polynomial; complex pairs are simply not
    reported, so the multiplicities sum to the matrix dimension exactly when
    the spectrum is real (always the case for the quotient matrices of
    graphs, which are diagonally similar to symmetric matrices).
    """
    return real_roots_with_multiplicity(charpoly(matrix))
