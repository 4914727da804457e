"""Spectra of graphs and small matrices.

All symmetric eigenvalue work funnels through the kernel backend (compiled or
pure Python); quotient matrices, which may be non-symmetric, go through the
exact characteristic-polynomial solver instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import exactpoly, kernel
from .graphs import Graph

SYMMETRY_TOL = 1e-12
GROUP_TOL = 1e-8
EIG_ACCURACY = 1e-10  # contract: error <= EIG_ACCURACY * (1 + max-norm)


def eig_symmetric(matrix) -> list[float]:
    """All eigenvalues of a real symmetric matrix, sorted descending.

    Input asymmetry beyond SYMMETRY_TOL (absolute) is rejected.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if a.shape[0] > 1 and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    vals = kernel.sym_eigenvalues(a)
    return [float(x) for x in vals[::-1]]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted descending.

    Consecutive grouped values differ by more than the recorded tolerance;
    multiplicities sum to the matrix dimension.
    """

    pairs: tuple[tuple[float, int], ...]
    tolerance: float

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        """Eigenvalues expanded with multiplicity, descending."""
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def value(self, i: int) -> float:
        """i-th largest eigenvalue counting multiplicity (1-indexed)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        seen = 0
        for v, m in self.pairs:
            seen += m
            if i <= seen:
                return v
        raise AssertionError("unreachable")

    def lambda_max(self) -> float:
        return self.pairs[0][0]

    def second_largest(self) -> float:
        return self.value(2)

    def lambda_min(self) -> float:
        return self.pairs[-1][0]

    def multiplicity_of(self, x: float, tol: Optional[float] = None) -> int:
        t = self.tolerance if tol is None else tol
        return sum(m for v, m in self.pairs if abs(v - x) <= t)

    def approx_eq(self, other: "Spectrum", tol: float = GROUP_TOL) -> bool:
        if self.n != other.n or len(self.pairs) != len(other.pairs):
            return False
        return all(
            m1 == m2 and abs(v1 - v2) <= tol
            for (v1, m1), (v2, m2) in zip(self.pairs, other.pairs)
        )

    def to_json_obj(self) -> dict:
        return {
            "eigenvalues": [{"value": v, "multiplicity": m} for v, m in self.pairs],
            "tolerance": self.tolerance,
        }

    def __str__(self) -> str:
        inner = ", ".join(f"[{v:.10g}]^{m}" for v, m in self.pairs)
        return "{" + inner + "}"


def group_eigenvalues(values: Sequence[float], tol: float) -> Spectrum:
    """Group a descending-or-any-order eigenvalue list into (value, mult) pairs.

    Grouped value is the mean of its members; consecutive groups are required
    to be separated by more than `tol` after grouping.
    """
    vals = sorted(float(v) for v in values)
    if not vals:
        raise ValueError("cannot group an empty eigenvalue list")
    groups: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        if v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    pairs = tuple(
        (sum(grp) / len(grp), len(grp)) for grp in reversed(groups)
    )
    return Spectrum(pairs=pairs, tolerance=tol)


def spectrum(g: Graph, tol: float = GROUP_TOL) -> Spectrum:
    """Adjacency spectrum of g, grouped with norm-scaled tolerance."""
    vals = eig_symmetric(g.adj.astype(np.float64))
    norm = max(g.degrees()) if g.n else 0
    return group_eigenvalues(vals, tol * max(1.0, float(norm)))


def second_largest(g: Graph) -> float:
    """Second largest adjacency eigenvalue, counting multiplicity."""
    if g.n < 2:
        raise ValueError("second largest eigenvalue needs order >= 2")
    vals = eig_symmetric(g.adj.astype(np.float64))
    return vals[1]


def lambda_min(g: Graph) -> float:
    return eig_symmetric(g.adj.astype(np.float64))[-1]


def lambda_max(g: Graph) -> float:
    return eig_symmetric(g.adj.astype(np.float64))[0]


# -- coclique extension spectrum (closed form) ---------------------------------


def coclique_extension_spectrum(s: Spectrum, base_order: int, q: int) -> Spectrum:
    """Spectrum of the q-coclique extension from the base spectrum alone.

    Eigenvalues scale by q and a zero eigenvalue of multiplicity
    (q - 1) * base_order appears (merged into an existing zero group when one
    is present).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if s.n != base_order:
        raise ValueError(
            f"multiplicities sum to {s.n}, expected base order {base_order}"
        )
    if q == 1:
        return s
    expanded: list[float] = []
    for v, m in s.pairs:
        expanded.extend([q * v] * m)
    expanded.extend([0.0] * ((q - 1) * base_order))
    return group_eigenvalues(expanded, s.tolerance * q)


# -- quotient matrices -----------------------------------------------------------


@dataclass(frozen=True)
class QuotientResult:
    """Partition quotient of an adjacency matrix.

    matrix[i][j] is the average number of neighbors in part j over vertices of
    part i (an exact Fraction); `equitable` is True when that count is
    constant on every part.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    parts: tuple[tuple[int, ...], ...]
    equitable: bool

    @property
    def dimension(self) -> int:
        return len(self.parts)

    def as_floats(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.matrix]

    def eigenvalues(self) -> list[tuple[float, int]]:
        """Real eigenvalues (value, multiplicity), ascending, exact char-poly route."""
        return exactpoly.eigenvalues_exact(self.matrix)

    def eigenvalue_list(self) -> list[float]:
        out: list[float] = []
        for v, m in self.eigenvalues():
            out.extend([v] * m)
        return sorted(out, reverse=True)


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> QuotientResult:
    """Quotient of g's adjacency matrix over a partition of the vertex set.

    The partition must cover 0..n-1 disjointly with nonempty parts.  The
    eigenvalues of an equitable quotient are a sub(multi)set of the graph
    spectrum; that containment is a library invariant checked in the tests,
    not enforced here.
    """
    parts = [tuple(p) for p in partition]
    flat = [v for p in parts for v in p]
    if sorted(flat) != list(range(g.n)):
        raise ValueError("partition must cover the vertex set disjointly")
    if any(len(p) == 0 for p in parts):
        raise ValueError("partition parts must be nonempty")
    t = len(parts)
    matrix = []
    equitable = True
    for i in range(t):
        row = []
        for j in range(t):
            counts = {sum(1 for w in parts[j] if g.adj[v, w]) for v in parts[i]}
            if len(counts) > 1:
                equitable = False
                total = sum(
                    sum(1 for w in parts[j] if g.adj[v, w]) for v in parts[i]
                )
                row.append(Fraction(total, len(parts[i])))
            else:
                row.append(Fraction(counts.pop()))
        matrix.append(tuple(row))
    return QuotientResult(matrix=tuple(matrix), parts=tuple(parts), equitable=equitable)


# -- interlacing -----------------------------------------------------------------


def interlacing_check(g: Graph, subset: Sequence[int], tol: float = 1e-9) -> bool:
    """Cauchy interlacing between g and the subgraph induced on `subset`.

    With full spectrum l_1 >= ... >= l_n and induced spectrum m_1 >= ... >= m_s:
    l_i >= m_i >= l_{i + n - s} must hold for every i; returns True when all
    inequalities hold within `tol` (they always should - this doubles as an
    eigensolver self-test).
    """
    subset = list(subset)
    if not subset:
        raise ValueError("subset must be nonempty")
    full = eig_symmetric(g.adj.astype(np.float64))
    sub = eig_symmetric(g.induced(subset).adj.astype(np.float64))
    n, s = len(full), len(sub)
    for i in range(s):
        if not (full[i] + tol >= sub[i] >= full[i + n - s] - tol):
            return False
    return True
