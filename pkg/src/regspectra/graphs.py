"""Dense simple undirected graphs and the structural queries built on them.

Vertices are the integers 0..n-1.  Adjacency is a symmetric boolean matrix
with a zero diagonal; everything in this package lives in the dense regime
(cliques, complements, joins), so a bit matrix plus per-vertex integer
bitmasks is the representation of choice.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import UnsupportedSizeError

INDUCED_PATTERN_CAP = 12


class Graph:
    """Immutable simple graph on vertices 0..n-1 with dense adjacency.

    The adjacency matrix is validated (square, symmetric, zero diagonal) and
    frozen at construction; all operations on graphs are pure functions.
    """

    __slots__ = ("n", "adj", "name", "_bits")

    def __init__(self, adj, name: str = ""):
        a = np.asarray(adj)
        if a.dtype != np.bool_:
            a = a.astype(bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        n = a.shape[0]
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency must have a zero diagonal (no loops)")
        a = a.copy()
        a.setflags(write=False)
        self.n = n
        self.adj = a
        self.name = name
        self._bits: Optional[tuple[int, ...]] = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"invalid edge ({u}, {v}) for order {n}")
            a[u, v] = a[v, u] = True
        return cls(a, name)

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def bits(self) -> tuple[int, ...]:
        """Neighborhood bitmasks, one integer per vertex (cached)."""
        if self._bits is None:
            packed = []
            for i in range(self.n):
                row = 0
                for j in np.flatnonzero(self.adj[i]):
                    row |= 1 << int(j)
                packed.append(row)
            self._bits = tuple(packed)
        return self._bits

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    def degrees(self) -> list[int]:
        return [int(x) for x in self.adj.sum(axis=1)]

    def neighbors(self, v: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adj[v])]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def num_edges(self) -> int:
        return int(self.adj.sum()) // 2

    def induced(self, vertices: Sequence[int], name: str = "") -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        idx = list(vertices)
        if len(idx) == 0:
            raise ValueError("induced subgraph needs at least one vertex")
        if len(set(idx)) != len(idx):
            raise ValueError("vertex list contains repeats")
        return Graph(self.adj[np.ix_(idx, idx)], name)

    def relabel(self, perm: Sequence[int], name: str = "") -> "Graph":
        """Image under the permutation mapping old vertex i to perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        inv = [0] * self.n
        for old, new in enumerate(perm):
            inv[new] = old
        return Graph(self.adj[np.ix_(inv, inv)], name)

    def is_connected(self) -> bool:
        seen = self._bfs_reach(0)
        return len(seen) == self.n

    def _bfs_reach(self, start: int) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in np.flatnonzero(self.adj[u]):
                w = int(w)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        """Labelled equality (same order, identical adjacency)."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.num_edges()}>"


# -- distance structure ----------------------------------------------------


@dataclass(frozen=True)
class DistanceLayers:
    """BFS layers around a source: layers[i] is the set at distance i."""

    source: int
    layers: tuple[tuple[int, ...], ...]
    eccentricity: int
    unreached: tuple[int, ...]

    def layer(self, i: int) -> tuple[int, ...]:
        return self.layers[i] if i < len(self.layers) else ()


def distance_layers(g: Graph, x: int) -> DistanceLayers:
    """Breadth-first distance layers from x; unreachable vertices listed apart."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    dist = [-1] * g.n
    dist[x] = 0
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    ecc = max(d for d in dist if d >= 0)
    layers = [[] for _ in range(ecc + 1)]
    unreached = []
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
        else:
            unreached.append(v)
    return DistanceLayers(
        source=x,
        layers=tuple(tuple(layer) for layer in layers),
        eccentricity=ecc,
        unreached=tuple(unreached),
    )


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs distances via BFS; math.inf for unreachable pairs."""
    out = []
    for x in range(g.n):
        dl = distance_layers(g, x)
        row = [math.inf] * g.n
        for d, layer in enumerate(dl.layers):
            for v in layer:
                row[v] = d
        out.append(row)
    return out


def diameter(g: Graph) -> float:
    """Largest finite distance; math.inf when disconnected."""
    if not g.is_connected():
        return math.inf
    return max(distance_layers(g, x).eccentricity for x in range(g.n))


# -- induced subgraph containment -------------------------------------------


def contains_induced(
    g: Graph, h: Graph, cap: int = INDUCED_PATTERN_CAP
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Does some vertex subset of g induce a graph isomorphic to h?

    Returns (found, witness) where witness maps pattern vertex i to the host
    vertex witness[i].  Backtracking over host bitmask domains with degree
    pruning; patterns above `cap` vertices are refused.
    """
    if h.n > cap:
        raise UnsupportedSizeError(f"pattern order {h.n} exceeds cap {cap}")
    if h.n > g.n:
        return False, None

    gbits = g.bits()
    gdeg = g.degrees()
    hdeg = h.degrees()
    n, k = g.n, h.n
    full = (1 << n) - 1

    # Order pattern vertices so each one (after the first) touches the already
    # ordered prefix where possible; ties broken toward high degree.
    order: list[int] = []
    placed = [False] * k
    for _ in range(k):
        best, best_key = -1, None
        for v in range(k):
            if placed[v]:
                continue
            anchored = sum(1 for u in order if h.adj[u, v])
            key = (anchored, hdeg[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True

    hadj_prefix = []  # for order[i]: (mask of earlier-ordered neighbors, earlier non-neighbors)
    for i, v in enumerate(order):
        nb = 0
        nn = 0
        for j in range(i):
            if h.adj[order[j], v]:
                nb |= 1 << j
            else:
                nn |= 1 << j
        hadj_prefix.append((nb, nn))

    # Degree screen: host vertex must have enough neighbors and non-neighbors.
    base_domain = [0] * k
    for i, v in enumerate(order):
        dom = 0
        need_nb = hdeg[v]
        need_nn = (k - 1) - hdeg[v]
        for w in range(n):
            if gdeg[w] >= need_nb and (n - 1 - gdeg[w]) >= need_nn:
                dom |= 1 << w
        base_domain[i] = dom

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
            new_domains = domains[:]
            for j in range(i + 1, k):
                nb, nn = hadj_prefix[j]
                dj = new_domains[j]
                if (nb >> i) & 1:
                    dj &= gbits[w]
                elif (nn >> i) & 1:
                    dj &= ~gbits[w] & full
                dj &= ~wbit
                if dj == 0:
                    ok = False
                    break
                new_domains[j] = dj
            if ok and backtrack(i + 1, used | wbit, new_domains):
                return True
        return False

    if backtrack(0, 0, base_domain):
        witness = [0] * k
        for i, v in enumerate(order):
            witness[v] = assign[i]
        return True, tuple(witness)
    return False, None


def contains_induced_bruteforce(g: Graph, h: Graph) -> bool:
    """Oracle: exhaustive subset enumeration + permutation check (tiny inputs)."""
    from itertools import combinations, permutations

    if h.n > g.n:
        return False
    for subset in combinations(range(g.n), h.n):
        sub = g.adj[np.ix_(subset, subset)]
        for perm in permutations(range(h.n)):
            if all(
                sub[perm[a], perm[b]] == h.adj[a, b]
                for a in range(h.n)
                for b in range(a + 1, h.n)
            ):
                return True
    return False


# -- regularity parameters ---------------------------------------------------


@dataclass(frozen=True)
class RegularityParams:
    """Degree/common-neighbor regularity data of a graph.

    a1 / c2 values are reported only when constant over the relevant pair set;
    c2_coedge ranges over all non-adjacent pairs (co-edge-regularity), while
    c2_dist2 ranges over pairs at distance exactly 2 (amply regularity).
    """

    v: int
    is_regular: bool
    k: Optional[int]
    a1: Optional[int]
    c2_coedge: Optional[int]
    c2_dist2: Optional[int]
    dist2_common_min: Optional[int]
    dist2_common_max: Optional[int]
    edge_regular: bool
    co_edge_regular: bool
    amply_regular: bool
    strongly_regular: bool
    diameter: float

    def srg_params(self) -> tuple[int, int, Optional[int], Optional[int]]:
        return (self.v, self.k if self.k is not None else -1, self.a1, self.c2_dist2)


def regularity_params(g: Graph) -> RegularityParams:
    """Brute-force count of the (v, k, a1, c2) regularity data of g."""
    degs = g.degrees()
    is_reg = len(set(degs)) == 1
    k = degs[0] if is_reg else None

    common = g.adj.astype(np.int64) @ g.adj.astype(np.int64)
    dist = distance_matrix(g)

    a1_vals = set()
    coedge_vals = set()
    dist2_vals = set()
    for u in range(g.n):
        for w in range(u + 1, g.n):
            c = int(common[u, w])
            if g.adj[u, w]:
                a1_vals.add(c)
            else:
                coedge_vals.add(c)
                if dist[u][w] == 2:
                    dist2_vals.add(c)

    a1 = a1_vals.pop() if len(a1_vals) == 1 else None
    c2_coedge = coedge_vals.pop() if len(coedge_vals) == 1 else None
    c2_dist2 = dist2_vals.pop() if len(dist2_vals) == 1 else None
    if a1 is not None:
        a1_uniform = True
    else:
        a1_uniform = not a1_vals  # vacuously uniform when no edges exist
    coedge_uniform = c2_coedge is not None or not coedge_vals
    dist2_uniform = c2_dist2 is not None or not dist2_vals

    d2min = d2max = None
    if c2_dist2 is not None:
        d2min = d2max = c2_dist2
    elif dist2_vals:
        d2min, d2max = min(dist2_vals), max(dist2_vals)

    diam = diameter(g)
    edge_regular = is_reg and a1_uniform
    co_edge_regular = is_reg and coedge_uniform
    amply = is_reg and a1_uniform and dist2_uniform
    strongly = amply and diam == 2

    return RegularityParams(
        v=g.n,
        is_regular=is_reg,
        k=k,
        a1=a1,
        c2_coedge=c2_coedge,
        c2_dist2=c2_dist2,
        dist2_common_min=d2min,
        dist2_common_max=d2max,
        edge_regular=edge_regular,
        co_edge_regular=co_edge_regular,
        amply_regular=amply,
        strongly_regular=strongly,
        diameter=diam,
    )
