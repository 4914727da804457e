"""Large maximal cliques, the mutual-non-neighbor relation, and association.

For a graph G, C(n) is the set of maximal cliques with at least n vertices.
Two such cliques are related (an equivalence under the hypotheses n >= (m+1)^2
and no induced K~_{2m}) when every vertex of one has at most m-1 non-neighbors
in the other.  Each class has a quasi-clique - the vertices with at most m-1
non-neighbors in a representative clique - and the associated Hoffman graph
adds one fat vertex per class, joined to exactly its quasi-clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .construct import k_tilde
from .errors import CapExceededError, ConsistencyError
from .graphs import Graph, contains_induced
from .hoffman import HoffmanGraph

CLIQUE_ORDER_CAP = 200
CLIQUE_COUNT_CAP = 10**6


@dataclass(frozen=True)
class CliqueFamily:
    """Maximal cliques of `graph` with at least `threshold` vertices."""

    graph: Graph
    threshold: int
    cliques: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class CliquePartition:
    """Equivalence classes of a clique family with their quasi-cliques.

    `classes` holds indices into family.cliques; hypothesis or transitivity
    problems are reported in `warnings` rather than raised, so the machinery
    stays usable on arbitrary inputs (the guarantees only hold under the
    hypotheses).
    """

    family: CliqueFamily
    m: int
    classes: tuple[tuple[int, ...], ...]
    quasi_cliques: tuple[frozenset[int], ...]
    warnings: tuple[str, ...] = field(default=())

    def to_json_obj(self) -> dict:
        return {
            "threshold": self.family.threshold,
            "m": self.m,
            "classes": [
                {
                    "cliques": [sorted(self.family.cliques[i]) for i in cls],
                    "quasi_clique": sorted(q),
                }
                for cls, q in zip(self.classes, self.quasi_cliques)
            ],
            "warnings": list(self.warnings),
        }


def maximal_cliques(
    g: Graph,
    n: int,
    max_order: int = CLIQUE_ORDER_CAP,
    max_cliques: int = CLIQUE_COUNT_CAP,
) -> CliqueFamily:
    """All maximal cliques of g with at least n vertices (Bron-Kerbosch, pivoting).

    Deterministic: the family is sorted by the sorted vertex tuples.  Raises
    CapExceededError past `max_order` vertices or `max_cliques` cliques.
    """
    if n < 1:
        raise ValueError("threshold must be >= 1")
    if g.n > max_order:
        raise CapExceededError(f"graph order {g.n} exceeds clique cap {max_order}")
    bits = g.bits()
    found: list[int] = []

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            if popcount(r) >= n:
                found.append(r)
                if len(found) > max_cliques:
                    raise CapExceededError(
                        f"more than {max_cliques} maximal cliques of size >= {n}"
                    )
            return
        if popcount(r) + popcount(p) < n:
            return
        # pivot: vertex of P | X with the most neighbors inside P
        best, best_cnt = -1, -1
        px = p | x
        while px:
            b = px & -px
            px ^= b
            u = b.bit_length() - 1
            cnt = popcount(p & bits[u])
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        cand = p & ~bits[best]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(r | b, p & bits[v], x & bits[v])
            p &= ~b
            x |= b

    expand(0, (1 << g.n) - 1, 0)
    cliques = sorted(
        (frozenset(i for i in range(g.n) if mask >> i & 1) for mask in found),
        key=lambda s: tuple(sorted(s)),
    )
    return CliqueFamily(graph=g, threshold=n, cliques=tuple(cliques))


def non_neighbors_in(g: Graph, v: int, clique: frozenset[int]) -> int:
    """Number of vertices of `clique` not adjacent to v (v itself excluded)."""
    bits = g.bits()
    cmask = 0
    for w in clique:
        cmask |= 1 << w
    return bin(cmask & ~(bits[v] | (1 << v))).count("1")


def equiv_nm(g: Graph, c1: frozenset[int], c2: frozenset[int], m: int) -> bool:
    """Mutual at-most-(m-1)-non-neighbors predicate between two cliques of g."""
    return all(non_neighbors_in(g, x, c2) <= m - 1 for x in c1) and all(
        non_neighbors_in(g, y, c1) <= m - 1 for y in c2
    )


def quasi_clique(g: Graph, clique: frozenset[int], m: int) -> frozenset[int]:
    """Vertices of g with at most m-1 non-neighbors in `clique`."""
    return frozenset(
        v for v in range(g.n) if non_neighbors_in(g, v, clique) <= m - 1
    )


def hypothesis_report(g: Graph, m: int, n: int) -> list[str]:
    """Warnings for violated hypotheses (n >= (m+1)^2, no induced K~_{2m})."""
    warnings = []
    if n < (m + 1) ** 2:
        warnings.append(f"threshold n={n} below (m+1)^2={(m + 1) ** 2}")
    present, _ = contains_induced(g, k_tilde(m), cap=2 * m + 1)
    if present:
        warnings.append(f"graph contains an induced K~_{2 * m}")
    return warnings


def partition_classes(
    fam: CliqueFamily, m: int, certified: bool = False, check_hypotheses: bool = True
) -> CliquePartition:
    """Classes of the mutual-non-neighbor relation over a clique family.

    Classes are the transitive closure of the pairwise predicate; when the
    predicate fails to be transitive on a class (possible only when the
    hypotheses are violated), a warning is recorded.  Quasi-cliques are
    computed from the lexicographically least representative; in certified
    mode, agreement across all representatives is verified and a mismatch
    raises ConsistencyError.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = fam.graph
    warnings = hypothesis_report(g, m, fam.threshold) if check_hypotheses else []

    t = len(fam.cliques)
    parent = list(range(t))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    related = [[False] * t for _ in range(t)]
    for i in range(t):
        related[i][i] = True
        for j in range(i + 1, t):
            if equiv_nm(g, fam.cliques[i], fam.cliques[j], m):
                related[i][j] = related[j][i] = True
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[int]] = {}
    for i in range(t):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(tuple(sorted(members)) for _, members in sorted(groups.items()))

    for cls in classes:
        for a in range(len(cls)):
            for b in range(a + 1, len(cls)):
                if not related[cls[a]][cls[b]]:
                    warnings.append(
                        f"relation not transitive on class {cls} "
                        f"(cliques {cls[a]} and {cls[b]} unrelated)"
                    )

    quasis = []
    for cls in classes:
        rep = fam.cliques[cls[0]]  # classes sorted, cls[0] is lex-least
        q = quasi_clique(g, rep, m)
        if certified:
            for other in cls[1:]:
                q2 = quasi_clique(g, fam.cliques[other], m)
                if q2 != q:
                    if not warnings:
                        raise ConsistencyError(
                            "quasi-clique depends on the representative although "
                            "the hypotheses hold"
                        )
                    warnings.append(
                        f"quasi-clique differs across representatives in class {cls}"
                    )
        quasis.append(q)

    return CliquePartition(
        family=fam,
        m=m,
        classes=classes,
        quasi_cliques=tuple(quasis),
        warnings=tuple(warnings),
    )


def associate(
    g: Graph, m: int, n: int, certified: bool = False
) -> tuple[HoffmanGraph, CliquePartition]:
    """Associated Hoffman graph: g as slim part, one fat vertex per class.

    Fat vertex i (appended after the g vertices, in class order) is adjacent
    to exactly the quasi-clique of class i.  Requires n >= (m+1)^2.
    """
    if n < (m + 1) ** 2:
        raise ValueError(f"n must be at least (m+1)^2 = {(m + 1) ** 2}")
    fam = maximal_cliques(g, n)
    part = partition_classes(fam, m, certified=certified)
    t = len(part.classes)
    total = g.n + t
    a = np.zeros((total, total), dtype=bool)
    a[: g.n, : g.n] = g.adj
    for i, q in enumerate(part.quasi_cliques):
        f = g.n + i
        for v in q:
            a[f, v] = a[v, f] = True
    hg = HoffmanGraph(Graph(a, name=f"assoc({g.name})" if g.name else "assoc"),
                      fat=range(g.n, total))
    return hg, part
