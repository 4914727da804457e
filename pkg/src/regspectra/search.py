"""Isomorph-free exhaustive search for extremal regular graphs.

Three layers: a canonical labeling (iterated neighborhood refinement with
individualization backtracking, twin-class pruning), an isomorph-free
generator of connected k-regular graphs (vertex-by-vertex completion with a
block-prefix symmetry rule, canonical-certificate rejection), and the search
driver that filters by the second largest eigenvalue and reports extremal
witnesses.

Eigenvalue comparisons give the graph the benefit of a +1e-9 tolerance;
candidates within 1e-6 of the threshold are re-checked in exact rational
arithmetic through the characteristic polynomial (orders <= 12), so boundary
graphs are never accepted or rejected by rounding.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import exactpoly
from .bounds import to_fraction
from .errors import UnsupportedSizeError
from .formats import to_graph6
from .graphs import Graph
from .spectra import eig_symmetric, spectrum

CANONICAL_CAP = 64
DEFAULT_MAX_K = 5
DEFAULT_MAX_N = 16
ACCEPT_TOL = 1e-9
BOUNDARY_WINDOW = 1e-6
EXACT_RECHECK_CAP = 12


# -- canonical labeling ----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """labeling[old_vertex] = canonical position; certificate is the graph6
    string of the canonically relabelled graph (equal iff isomorphic)."""

    labeling: tuple[int, ...]
    certificate: str


def _twin_classes(bits: Sequence[int], n: int) -> list[int]:
    """twin[v] = representative of v's twin class (equal open or closed
    neighborhoods); swapping twins is an automorphism."""
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v in range(n):
        o = bits[v]
        c = bits[v] | (1 << v)
        if o in by_open:
            ri, rj = find(by_open[o]), find(v)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        else:
            by_open[o] = v
        if c in by_closed:
            ri, rj = find(by_closed[c]), find(v)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        else:
            by_closed[c] = v
    return [find(v) for v in range(n)]


def _refine(
    bits: Sequence[int], cells: list[list[int]], splitters: Optional[list[int]] = None
) -> list[list[int]]:
    """Iterated neighborhood refinement with a splitter worklist.

    Each round splits cells by their members' neighbor counts into the cells
    created in the previous round; counts into untouched cells are already
    uniform, so the stable partition equals full all-against-all refinement.
    `splitters` seeds the worklist (all cells by default; after an
    individualization only the two cells it created, since the inherited
    partition is already stable).  Cell order is decided only by parent
    position and count vectors, hence deterministic and label-invariant."""
    if splitters is None:
        splitters = list(range(len(cells)))
    while splitters:
        masks = [sum(1 << v for v in cells[i]) for i in splitters]
        new_cells: list[list[int]] = []
        new_splitters: list[int] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((bits[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                for sig in sorted(groups):
                    new_splitters.append(len(new_cells))
                    new_cells.append(groups[sig])
        cells = new_cells
        splitters = new_splitters
    return cells


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> CanonicalForm:
    """Canonical labeling and certificate; isomorphic graphs map to identical
    certificates (and only those - each leaf is an actual relabelling)."""
    if g.n > cap:
        raise UnsupportedSizeError(f"order {g.n} exceeds canonical cap {cap}")
    n = g.n
    bits = g.bits()
    twin = _twin_classes(bits, n)

    best: dict[str, object] = {"key": None, "perm": None}

    def leaf(cells: list[list[int]]) -> None:
        order = [cell[0] for cell in cells]  # canonical position -> old vertex
        key = 0
        for i in range(n):
            bi = bits[order[i]]
            for j in range(i + 1, n):
                key = (key << 1) | (bi >> order[j] & 1)
        if best["key"] is None or key < best["key"]:
            best["key"] = key
            best["perm"] = order

    def descend(cells: list[list[int]], seed: Optional[list[int]]) -> None:
        cells = _refine(bits, cells, seed)
        target = next((idx for idx, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        seen_twins = set()
        for v in cell:
            rep = twin[v]
            if rep in seen_twins:
                continue  # a twin of an explored sibling: identical subtree
            seen_twins.add(rep)
            split = [cells[i] for i in range(target)]
            split.append([v])
            split.append([w for w in cell if w != v])
            split.extend(cells[i] for i in range(target + 1, len(cells)))
            descend(split, [target, target + 1])

    descend([list(range(n))], None)
    order = best["perm"]
    labeling = [0] * n
    for position, old in enumerate(order):
        labeling[old] = position
    canon = g.relabel(labeling)
    return CanonicalForm(labeling=tuple(labeling), certificate=to_graph6(canon))


def brute_force_certificate(g: Graph) -> str:
    """Oracle: lexicographic minimum over all vertex permutations (order <= 8)."""
    from itertools import permutations

    if g.n > 8:
        raise UnsupportedSizeError("brute-force certificate limited to order 8")
    n = g.n
    bits = g.bits()
    best_key = None
    best_perm = None
    for perm in permutations(range(n)):
        key = 0
        for i in range(n):
            bi = bits[perm[i]]
            for j in range(i + 1, n):
                key = (key << 1) | (bi >> perm[j] & 1)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm
    labeling = [0] * n
    for position, old in enumerate(best_perm):
        labeling[old] = position
    return to_graph6(g.relabel(labeling))


def enumerate_all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (vertex extension + canonical
    rejection).  Intended for n <= 7."""
    if n < 1:
        raise ValueError("n must be >= 1")
    current = [Graph(np.zeros((1, 1), dtype=bool))]
    for size in range(2, n + 1):
        seen: dict[str, Graph] = {}
        for g in current:
            for mask in range(1 << (size - 1)):
                a = np.zeros((size, size), dtype=bool)
                a[: size - 1, : size - 1] = g.adj
                for w in range(size - 1):
                    if mask >> w & 1:
                        a[size - 1, w] = a[w, size - 1] = True
                cand = Graph(a)
                cert = canonical_form(cand).certificate
                if cert not in seen:
                    seen[cert] = cand
        current = [seen[c] for c in sorted(seen)]
    return current


# -- isomorph-free generation of connected regular graphs --------------------------


def parity_ok(k: int, n: int) -> bool:
    return (k * n) % 2 == 0


def spectral_prune(saturated: Graph, lam: float, tol: float = ACCEPT_TOL) -> bool:
    """Keep/cut decision for a partial graph: cut only when the subgraph induced
    on already-saturated vertices has second largest eigenvalue beyond lam.
    Sound by interlacing, since every completion contains it induced."""
    if saturated.n < 2:
        return True
    vals = eig_symmetric(saturated.adj.astype(np.float64))
    return vals[1] <= lam + tol


def _saturated_subgraph(rows: Sequence[int], deg: Sequence[int], k: int) -> Optional[Graph]:
    sat = [u for u in range(len(deg)) if deg[u] == k]
    if len(sat) < 2:
        return None
    m = len(sat)
    a = np.zeros((m, m), dtype=bool)
    for i, u in enumerate(sat):
        for j in range(i + 1, m):
            if rows[u] >> sat[j] & 1:
                a[i, j] = a[j, i] = True
    return Graph(a)


def _complete_from(
    k: int,
    n: int,
    rows: list[int],
    deg: list[int],
    v: int,
    prune_lam: Optional[float],
    counter: list[int],
    stop_depth: Optional[int] = None,
    states: Optional[list] = None,
):
    """Recursive completion of vertex v onward; yields completed row tuples.

    When `stop_depth` is set, recursion stops at v == stop_depth and the
    state is appended to `states` instead (used to partition work across
    processes)."""
    if stop_depth is not None and v == stop_depth:
        states.append((tuple(rows), tuple(deg), v))
        return
    if v == n:
        if all(d == k for d in deg) and _rows_connected(rows, n):
            counter[0] += 1
            yield tuple(rows)
        return
    if deg[v] == k:
        yield from _complete_from(k, n, rows, deg, v + 1, prune_lam, counter, stop_depth, states)
        return
    r = k - deg[v]
    cands = [u for u in range(v + 1, n) if deg[u] < k]
    if len(cands) < r:
        return

    blocks: dict[int, list[int]] = {}
    order: list[int] = []
    for u in cands:
        sig = rows[u]
        if sig not in blocks:
            blocks[sig] = []
            order.append(sig)
        blocks[sig].append(u)
    blist = [blocks[s] for s in order]
    suffix_cap = [0] * (len(blist) + 1)
    for i in range(len(blist) - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + len(blist[i])

    def choices(bi: int, need: int, chosen: list[int]):
        if need == 0:
            yield chosen
            return
        if bi == len(blist) or suffix_cap[bi] < need:
            return
        block = blist[bi]
        for c in range(min(need, len(block)), -1, -1):
            yield from choices(bi + 1, need - c, chosen + block[:c])

    for chosen in choices(0, r, []):
        for u in chosen:
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            deg[u] += 1
        deg[v] += r
        if _feasible(k, n, rows, deg, v, prune_lam):
            yield from _complete_from(k, n, rows, deg, v + 1, prune_lam, counter, stop_depth, states)
        deg[v] -= r
        for u in chosen:
            rows[v] &= ~(1 << u)
            rows[u] &= ~(1 << v)
            deg[u] -= 1


def _feasible(k: int, n: int, rows: list[int], deg: list[int], v: int, prune_lam: Optional[float]) -> bool:
    deficits = [k - deg[u] for u in range(v + 1, n)]
    total = sum(deficits)
    if total % 2:
        return False
    positive = sum(1 for d in deficits if d > 0)
    if any(d > positive - 1 for d in deficits if d > 0):
        return False
    # closed-component cut: a fully saturated component that is not everything
    comp = 1 << v
    frontier = [v]
    while frontier:
        u = frontier.pop()
        nxt = rows[u] & ~comp
        while nxt:
            b = nxt & -nxt
            nxt ^= b
            comp |= b
            frontier.append(b.bit_length() - 1)
    comp_size = comp.bit_count()
    if comp_size < n:
        closed = True
        m = comp
        while m:
            b = m & -m
            m ^= b
            if deg[b.bit_length() - 1] != k:
                closed = False
                break
        if closed:
            return False
    if prune_lam is not None:
        sat = _saturated_subgraph(rows, deg, k)
        if sat is not None and not spectral_prune(sat, prune_lam):
            return False
    return True


def _rows_connected(rows: Sequence[int], n: int) -> bool:
    if n == 1:
        return True
    comp = 1
    frontier = [0]
    while frontier:
        u = frontier.pop()
        nxt = rows[u] & ~comp
        while nxt:
            b = nxt & -nxt
            nxt ^= b
            comp |= b
            frontier.append(b.bit_length() - 1)
    return comp == (1 << n) - 1


def _worker_complete(args):
    k, n, rows, deg, v, prune_lam = args
    counter = [0]
    completed = list(_complete_from(k, n, list(rows), list(deg), v, prune_lam, counter))
    return counter[0], completed


def _candidate_rows(
    k: int, n: int, prune_lam: Optional[float], workers: int
) -> tuple[int, list[tuple[int, ...]]]:
    """All completed labeled candidates (count, row tuples)."""
    counter = [0]
    if workers <= 1 or n <= 3:
        completed = list(_complete_from(k, n, [0] * n, [0] * n, 0, prune_lam, counter))
        return counter[0], completed
    # partition the tree at the completion of vertex 1 across processes
    states: list = []
    list(_complete_from(k, n, [0] * n, [0] * n, 0, prune_lam, counter, stop_depth=2, states=states))
    jobs = [(k, n, rows, deg, v, prune_lam) for rows, deg, v in states]
    ctx = multiprocessing.get_context("fork")
    total = counter[0]
    completed = []
    with ctx.Pool(processes=workers) as pool:
        for cnt, chunk in pool.imap(_worker_complete, jobs):
            total += cnt
            completed.extend(chunk)
    return total, completed


def enum_connected_regular(
    k: int,
    n: int,
    max_k: int = DEFAULT_MAX_K,
    max_n: int = DEFAULT_MAX_N,
    prune_lam: Optional[float] = None,
    workers: int = 1,
    _counts: Optional[dict] = None,
) -> list[Graph]:
    """Exactly one representative per isomorphism class of connected k-regular
    graphs on n vertices.

    Vertex-by-vertex completion with interchangeable candidates restricted to
    block prefixes (any completion is isomorphic to a surviving one), followed
    by canonical-certificate rejection; odd k*n yields the empty list.  When
    `prune_lam` is set, subtrees whose saturated induced subgraph already has
    second eigenvalue beyond it are cut (sound for the search driver, but the
    result is then only exhaustive for graphs passing that filter).
    """
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if k >= n:
        raise ValueError("a simple k-regular graph needs n > k")
    if k > max_k or n > max_n:
        raise UnsupportedSizeError(
            f"(k={k}, n={n}) beyond caps (max_k={max_k}, max_n={max_n})"
        )
    if not parity_ok(k, n):
        return []
    candidates, completed = _candidate_rows(k, n, prune_lam, workers)
    by_cert: dict[str, Graph] = {}
    for rows in completed:
        a = np.zeros((n, n), dtype=bool)
        for u in range(n):
            m = rows[u]
            while m:
                b = m & -m
                m ^= b
                a[u, b.bit_length() - 1] = True
        g = Graph(a)
        cert = canonical_form(g).certificate
        if cert not in by_cert:
            by_cert[cert] = g
    if _counts is not None:
        _counts["candidates"] = candidates
        _counts["classes"] = len(by_cert)
    return [by_cert[c] for c in sorted(by_cert)]


# -- exact boundary recheck ---------------------------------------------------------


def second_eigenvalue_at_most(g: Graph, lam: Fraction) -> bool:
    """Exact check that lambda_2(g) <= lam for a connected graph.

    Counts distinct characteristic roots above lam with a Sturm chain; the
    Perron root of a connected graph is simple, so lambda_2 > lam iff at
    least two distinct roots exceed lam.
    """
    if not g.is_connected():
        raise ValueError("exact recheck requires a connected graph")
    poly = exactpoly.charpoly(g.adj.astype(int).tolist())
    return exactpoly.count_roots_greater(poly, lam) <= 1


# -- the search driver ---------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalGraph:
    graph6: str
    certificate: str
    second_largest: float
    spectrum_json: dict
    boundary: bool
    exact_confirmed: Optional[bool]

    def graph(self) -> Graph:
        from .formats import from_graph6

        return from_graph6(self.graph6)


@dataclass(frozen=True)
class OrderCount:
    candidates: int
    classes: int
    passed: int
    parity_skipped: bool = False


@dataclass(frozen=True)
class SearchReport:
    """Certified outcome of an exhaustive bounded-eigenvalue search."""

    k: int
    lam: float
    lam_exact: str
    n_max: int
    exact_v: Optional[int]
    extremal: tuple[ExtremalGraph, ...]
    unique: bool
    counts: dict[int, OrderCount]
    complete: bool
    pruned: bool

    def same_result(self, other: "SearchReport") -> bool:
        """Agreement on everything pruning must not change: the maximum order,
        the extremal certificates, and the per-order passed counts."""
        if (self.exact_v, self.k, self.lam_exact) != (other.exact_v, other.k, other.lam_exact):
            return False
        if {e.certificate for e in self.extremal} != {e.certificate for e in other.extremal}:
            return False
        orders = set(self.counts) | set(other.counts)
        return all(
            self.counts.get(n_, OrderCount(0, 0, 0)).passed
            == other.counts.get(n_, OrderCount(0, 0, 0)).passed
            for n_ in orders
        )

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "lambda": self.lam,
            "lambda_exact": self.lam_exact,
            "n_max": self.n_max,
            "exact_v": self.exact_v,
            "unique": self.unique,
            "complete": self.complete,
            "pruned": self.pruned,
            "counts": {
                str(n_): {
                    "candidates": c.candidates,
                    "classes": c.classes,
                    "passed": c.passed,
                    "parity_skipped": c.parity_skipped,
                }
                for n_, c in sorted(self.counts.items())
            },
            "extremal": [
                {
                    "graph6": e.graph6,
                    "second_largest": e.second_largest,
                    "spectrum": e.spectrum_json,
                    "boundary": e.boundary,
                    "exact_confirmed": e.exact_confirmed,
                }
                for e in self.extremal
            ],
        }


def v_search(
    k: int,
    lam,
    n_max: int,
    prune: bool = True,
    workers: int = 1,
    max_k: int = DEFAULT_MAX_K,
    max_n: int = DEFAULT_MAX_N,
) -> SearchReport:
    """Maximum order of a connected k-regular graph with second largest
    eigenvalue at most lam, exhaustively over orders <= n_max.

    Every candidate class is re-validated (connected, k-regular, eigenvalue
    filter with +1e-9 tolerance; exact rational recheck within 1e-6 of the
    threshold).  When caps cut the range, the report is marked incomplete.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n_max < k + 1:
        raise ValueError("n_max must allow at least k+1 vertices")
    lam_fr = to_fraction(lam)
    lam_f = float(lam_fr)

    complete = k <= max_k and n_max <= max_n
    n_cap = min(n_max, max_n) if k <= max_k else k  # empty range when k too big

    counts: dict[int, OrderCount] = {}
    passed_by_order: dict[int, list[ExtremalGraph]] = {}

    for n in range(k + 1, n_cap + 1):
        if not parity_ok(k, n):
            counts[n] = OrderCount(0, 0, 0, parity_skipped=True)
            continue
        cinfo: dict = {}
        graphs = enum_connected_regular(
            k,
            n,
            max_k=max_k,
            max_n=max_n,
            prune_lam=lam_f if prune else None,
            workers=workers,
            _counts=cinfo,
        )
        passed: list[ExtremalGraph] = []
        for g in graphs:
            degs = set(g.degrees())
            if degs != {k} or not g.is_connected():
                raise AssertionError("generator produced an invalid graph")
            spec = spectrum(g)
            l2 = spec.second_largest()
            boundary = abs(l2 - lam_f) < BOUNDARY_WINDOW
            accept = l2 <= lam_f + ACCEPT_TOL
            exact_confirmed: Optional[bool] = None
            if boundary and n <= EXACT_RECHECK_CAP:
                exact_confirmed = second_eigenvalue_at_most(g, lam_fr)
                accept = exact_confirmed
            if accept:
                passed.append(
                    ExtremalGraph(
                        graph6=to_graph6(g),
                        certificate=canonical_form(g).certificate,
                        second_largest=l2,
                        spectrum_json=spec.to_json_obj(),
                        boundary=boundary,
                        exact_confirmed=exact_confirmed,
                    )
                )
        counts[n] = OrderCount(cinfo.get("candidates", 0), cinfo.get("classes", 0), len(passed))
        if passed:
            passed_by_order[n] = passed

    exact_v = max(passed_by_order) if passed_by_order else None
    extremal = tuple(
        sorted(passed_by_order.get(exact_v, []), key=lambda e: e.certificate)
        if exact_v is not None
        else []
    )
    return SearchReport(
        k=k,
        lam=lam_f,
        lam_exact=str(lam_fr),
        n_max=n_max,
        exact_v=exact_v,
        extremal=extremal,
        unique=len(extremal) == 1,
        counts=counts,
        complete=complete,
        pruned=prune,
    )
