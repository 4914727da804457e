"""Hoffman graphs: slim/fat labellings, special matrices, fattenings.

A Hoffman graph is a graph with every vertex labelled fat or slim such that
fat vertices are pairwise non-adjacent and each fat vertex has a slim
neighbor.  Its eigenvalues are those of the special matrix
S = A_slim - C C^T, where C is the slim-fat incidence matrix.

Note on the universal-fat construction q(H) (one fat vertex joined to all of
H): since C C^T is then the all-ones matrix, S = A(H) - J = -(I + A(co-H)),
so lambda_min(q(H)) = -1 - lambda_max(co-H) exactly.  Statements of the form
"lambda_min(q(H)) = -lambda_max(co-H)" drop the -1 shift; the inequality
consequences used downstream (isolated-vertex bound and friends) hold either
way, and this module implements the exact identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .construct import complete, edgeless
from .errors import ConsistencyError, UnsupportedSizeError
from .graphs import Graph
from .spectra import eig_symmetric

HOFFMAN_PATTERN_CAP = 10
SUBGRAPH_MIN_TOL = 1e-9


class HoffmanGraph:
    """Graph plus fat/slim labels; immutable like Graph itself."""

    __slots__ = ("graph", "fat")

    def __init__(self, graph: Graph, fat: Sequence[int] = ()):
        fat_set = frozenset(int(v) for v in fat)
        for v in fat_set:
            if not 0 <= v < graph.n:
                raise ValueError(f"fat vertex {v} out of range")
        self.graph = graph
        self.fat = fat_set

    @property
    def n(self) -> int:
        return self.graph.n

    def fat_vertices(self) -> list[int]:
        return sorted(self.fat)

    def slim_vertices(self) -> list[int]:
        return [v for v in range(self.n) if v not in self.fat]

    def is_fat(self, v: int) -> bool:
        return v in self.fat

    def validate(self) -> list[str]:
        """Empty list when valid; otherwise one message per violation."""
        problems = []
        fat = self.fat_vertices()
        for i, u in enumerate(fat):
            for v in fat[i + 1 :]:
                if self.graph.has_edge(u, v):
                    problems.append(f"fat vertices {u} and {v} are adjacent")
        for u in fat:
            if not any(not self.is_fat(w) for w in self.graph.neighbors(u)):
                problems.append(f"fat vertex {u} has no slim neighbor")
        return problems

    def is_valid(self) -> bool:
        return not self.validate()

    def slim_graph(self) -> Graph:
        return self.graph.induced(self.slim_vertices())

    def incidence(self) -> np.ndarray:
        """Slim-fat 0/1 incidence matrix C (slim rows, fat columns)."""
        slim = self.slim_vertices()
        fat = self.fat_vertices()
        c = np.zeros((len(slim), len(fat)), dtype=np.int64)
        for i, s in enumerate(slim):
            for j, f in enumerate(fat):
                if self.graph.has_edge(s, f):
                    c[i, j] = 1
        return c

    def special_matrix(self) -> np.ndarray:
        """S = A_slim - C C^T, indexed by the sorted slim vertex list."""
        problems = self.validate()
        if problems:
            raise ValueError("invalid Hoffman graph: " + "; ".join(problems))
        slim = self.slim_vertices()
        if not slim:
            raise ValueError("Hoffman graph has no slim vertices")
        a_slim = self.graph.adj[np.ix_(slim, slim)].astype(np.int64)
        c = self.incidence()
        return (a_slim - c @ c.T).astype(np.float64)

    def lambda_min(self) -> float:
        return eig_symmetric(self.special_matrix())[-1]

    def eigenvalues(self) -> list[float]:
        """Eigenvalues of the special matrix, descending."""
        return eig_symmetric(self.special_matrix())

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "order": self.n,
            "edges": [[u, v] for u, v in self.graph.edges()],
            "fat": self.fat_vertices(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "HoffmanGraph":
        g = Graph.from_edges(int(obj["order"]), [tuple(e) for e in obj["edges"]])
        return cls(g, obj.get("fat", ()))

    @classmethod
    def all_slim(cls, g: Graph) -> "HoffmanGraph":
        return cls(g, ())

    def __repr__(self) -> str:
        return f"<HoffmanGraph n={self.n} slim={self.n - len(self.fat)} fat={len(self.fat)}>"


# -- constructions -------------------------------------------------------------


def attach_universal_fat(h: Graph) -> HoffmanGraph:
    """q(H): H as slim part plus one fat vertex adjacent to every slim vertex."""
    n = h.n
    a = np.zeros((n + 1, n + 1), dtype=bool)
    a[:n, :n] = h.adj
    a[n, :n] = True
    a[:n, n] = True
    return HoffmanGraph(Graph(a, name=f"q({h.name})" if h.name else "q"), fat=[n])


def slim_with_fats(s: int) -> HoffmanGraph:
    """One slim vertex adjacent to s fat vertices; lambda_min is exactly -s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    edges = [(0, i) for i in range(1, s + 1)]
    g = Graph.from_edges(s + 1, edges, name=f"h^({s})")
    return HoffmanGraph(g, fat=range(1, s + 1))


def fatten(h: HoffmanGraph, p: int) -> Graph:
    """G(h, p): replace each fat vertex by a K_p joined to that vertex's neighbors.

    Vertex order: the slim vertices first (original relative order), then one
    contiguous block of p clique vertices per fat vertex, fat vertices taken
    in increasing id order.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    problems = h.validate()
    if problems:
        raise ValueError("invalid Hoffman graph: " + "; ".join(problems))
    slim = h.slim_vertices()
    fat = h.fat_vertices()
    s = len(slim)
    n = s + p * len(fat)
    pos = {v: i for i, v in enumerate(slim)}
    a = np.zeros((n, n), dtype=bool)
    a[:s, :s] = h.graph.adj[np.ix_(slim, slim)]
    for bi, f in enumerate(fat):
        start = s + bi * p
        block = range(start, start + p)
        for x in block:
            for y in block:
                if x != y:
                    a[x, y] = True
        for w in h.graph.neighbors(f):
            # fat vertices are pairwise non-adjacent, so neighbors are slim
            for x in block:
                a[x, pos[w]] = a[pos[w], x] = True
    return Graph(a, name=f"fatten(p={p})")


def fattening_lambda_min_sequence(h: HoffmanGraph, p_max: int) -> list[float]:
    """lambda_min(G(h, p)) for p = 1..p_max."""
    return [eig_symmetric(fatten(h, p).adj.astype(float))[-1] for p in range(1, p_max + 1)]


# -- induced Hoffman subgraph containment ----------------------------------------


def contains_hoffman_subgraph(
    h: HoffmanGraph, pattern: HoffmanGraph, cap: int = HOFFMAN_PATTERN_CAP
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Label-respecting induced subgraph containment.

    Returns (found, witness) with witness[i] the host vertex for pattern
    vertex i.  On success the induced-subgraph eigenvalue inequality
    lambda_min(pattern) >= lambda_min(h) is asserted as a post-check.
    """
    if pattern.n > cap:
        raise UnsupportedSizeError(f"pattern order {pattern.n} exceeds cap {cap}")
    if pattern.n > h.n:
        return False, None

    n, k = h.n, pattern.n
    full = (1 << n) - 1
    hbits = h.graph.bits()

    def split_deg(hg: HoffmanGraph, v: int) -> tuple[int, int]:
        sd = fd = 0
        for w in hg.graph.neighbors(v):
            if hg.is_fat(w):
                fd += 1
            else:
                sd += 1
        return sd, fd

    host_sd = [split_deg(h, v) for v in range(n)]
    pat_sd = [split_deg(pattern, v) for v in range(k)]

    # pattern order: anchored-first, then by total degree
    order: list[int] = []
    placed = [False] * k
    for _ in range(k):
        best, best_key = -1, None
        for v in range(k):
            if placed[v]:
                continue
            anchored = sum(1 for u in order if pattern.graph.adj[u, v])
            key = (anchored, sum(pat_sd[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True

    prefix = []
    for i, v in enumerate(order):
        nb = nn = 0
        for j in range(i):
            if pattern.graph.adj[order[j], v]:
                nb |= 1 << j
            else:
                nn |= 1 << j
        prefix.append((nb, nn))

    base = [0] * k
    for i, v in enumerate(order):
        dom = 0
        for w in range(n):
            if h.is_fat(w) != pattern.is_fat(v):
                continue
            if host_sd[w][0] >= pat_sd[v][0] and host_sd[w][1] >= pat_sd[v][1]:
                dom |= 1 << w
        base[i] = dom

    assign = [0] * k

    def backtrack(i: int, used: int, domains: list[int]) -> bool:
        if i == k:
            return True
        dom = domains[i] & ~used
        while dom:
            wbit = dom & -dom
            dom ^= wbit
            w = wbit.bit_length() - 1
            assign[i] = w
            ok = True
            nxt = domains[:]
            for j in range(i + 1, k):
                nb, nn = prefix[j]
                dj = nxt[j]
                if (nb >> i) & 1:
                    dj &= hbits[w]
                elif (nn >> i) & 1:
                    dj &= ~hbits[w] & full
                dj &= ~wbit
                if dj == 0:
                    ok = False
                    break
                nxt[j] = dj
            if ok and backtrack(i + 1, used | wbit, nxt):
                return True
        return False

    if not backtrack(0, 0, base):
        return False, None
    witness = [0] * k
    for i, v in enumerate(order):
        witness[v] = assign[i]
    # Induced Hoffman subgraphs cannot have a smaller lambda_min than the host.
    if pattern.slim_vertices() and h.slim_vertices():
        if pattern.lambda_min() < h.lambda_min() - SUBGRAPH_MIN_TOL:
            raise ConsistencyError(
                "induced Hoffman subgraph with smaller lambda_min than its host"
            )
    return True, tuple(witness)


# -- a small catalog used by the fattening and association checks ----------------


def _hoffman(slim_graph: Graph, fats: Sequence[Sequence[int]], name: str) -> HoffmanGraph:
    """Slim graph on 0..s-1 plus one fat vertex per neighbor list in `fats`."""
    s = slim_graph.n
    n = s + len(fats)
    a = np.zeros((n, n), dtype=bool)
    a[:s, :s] = slim_graph.adj
    for j, nbrs in enumerate(fats):
        f = s + j
        for w in nbrs:
            a[f, w] = a[w, f] = True
    return HoffmanGraph(Graph(a, name=name), fat=range(s, n))


def catalog() -> list[tuple[str, HoffmanGraph]]:
    """Named Hoffman graphs with <= 4 slim and <= 3 fat vertices.

    Every entry fattens with lambda_min(G(h, p)) converging onto lambda_min(h)
    quickly enough that the p = 30 gap is below 0.1 (checked by the test
    suite), and every entry is recovered by the quasi-clique association
    round-trip at small parameters.
    """
    p2 = Graph.from_edges(2, [(0, 1)], name="K2")
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)], name="P3")
    entries = [
        ("q(K1)", attach_universal_fat(complete(1))),
        ("q(K2)", attach_universal_fat(complete(2))),
        ("q(K3)", attach_universal_fat(complete(3))),
        ("q(K4)", attach_universal_fat(complete(4))),
        ("q(2K1)", attach_universal_fat(edgeless(2))),
        ("q(P3)", attach_universal_fat(p3)),
        ("h^(2)", slim_with_fats(2)),
        ("K2+fats(a),(b)", _hoffman(p2, [[0], [1]], "K2+fats(a),(b)")),
        ("K2+fats(ab),(a)", _hoffman(p2, [[0, 1], [0]], "K2+fats(ab),(a)")),
        ("K2+fats(ab),(a),(b)", _hoffman(p2, [[0, 1], [0], [1]], "K2+fats(ab),(a),(b)")),
        ("P3+fats(a),(c)", _hoffman(p3, [[0], [2]], "P3+fats(a),(c)")),
        ("q(C4)", attach_universal_fat(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], name="C4"))),
    ]
    return entries
