"""Canonical labeling, isomorph-free generation, and the extremal search."""

import math
import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from regspectra import search
from regspectra.construct import (
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    path,
    petersen,
    random_graph,
)
from regspectra.errors import UnsupportedSizeError
from regspectra.graphs import Graph
from regspectra.spectra import second_largest


def test_canonical_relabel_invariance():
    rng = random.Random(1234)
    for _ in range(40):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        cert = search.canonical_form(g).certificate
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert search.canonical_form(g.relabel(perm)).certificate == cert


def test_canonical_labeling_realizes_certificate():
    from regspectra.formats import from_graph6, to_graph6

    rng = random.Random(88)
    for _ in range(20):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        cf = search.canonical_form(g)
        assert to_graph6(g.relabel(cf.labeling)) == cf.certificate
        assert from_graph6(cf.certificate).n == g.n


def test_canonical_distinguishes():
    # the two 3-regular graphs of order 6 (prism and K_{3,3}) get distinct
    # certificates, and one of them is K_{3,3}
    a, b = search.enum_connected_regular(3, 6)
    k33 = search.canonical_form(complete_bipartite(3, 3)).certificate
    certs = {search.canonical_form(a).certificate, search.canonical_form(b).certificate}
    assert len(certs) == 2 and k33 in certs
    assert search.canonical_form(cycle(6)).certificate not in certs


def test_canonical_highly_symmetric():
    # twin-heavy inputs must stay cheap and correct
    for g in (complete(12), complete_bipartite(6, 6), complete_multipartite([3, 3, 3, 3])):
        cert = search.canonical_form(g).certificate
        perm = list(range(g.n))
        random.Random(5).shuffle(perm)
        assert search.canonical_form(g.relabel(perm)).certificate == cert
    with pytest.raises(UnsupportedSizeError):
        search.canonical_form(complete(65))


def test_canonical_matches_bruteforce_classifier_n4():
    # on all graphs of order 4: identical partitioning into classes
    graphs = []
    for mask in range(1 << 6):
        edges = []
        for idx, (u, v) in enumerate(combinations(range(4), 2)):
            if mask >> idx & 1:
                edges.append((u, v))
        graphs.append(Graph.from_edges(4, edges))
    ours = [search.canonical_form(g).certificate for g in graphs]
    brute = [search.brute_force_certificate(g) for g in graphs]
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert (ours[i] == ours[j]) == (brute[i] == brute[j])
    assert len(set(ours)) == len(set(brute)) == 11


def test_canonical_matches_bruteforce_classifier_n5():
    graphs = []
    for mask in range(1 << 10):
        edges = []
        for idx, (u, v) in enumerate(combinations(range(5), 2)):
            if mask >> idx & 1:
                edges.append((u, v))
        graphs.append(Graph.from_edges(5, edges))
    ours = [search.canonical_form(g).certificate for g in graphs]
    brute = [search.brute_force_certificate(g) for g in graphs]
    assert len(set(ours)) == 34
    assert len(set(brute)) == 34
    seen = {}
    for o, b in zip(ours, brute):
        assert seen.setdefault(o, b) == b  # same classifier partition


def test_enumerate_all_graphs_counts():
    for n, want in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)):
        assert len(search.enumerate_all_graphs(n)) == want


def _labeled_regular_count(k: int, n: int, connected_only: bool) -> int:
    """Independent oracle: complete vertices in index order with NO symmetry
    reduction, counting every labeled graph exactly once."""
    rows = [0] * n
    deg = [0] * n
    count = 0

    def rec(v):
        nonlocal count
        if v == n:
            if all(d == k for d in deg):
                if not connected_only or search._rows_connected(rows, n):
                    count += 1
            return
        if deg[v] == k:
            rec(v + 1)
            return
        need = k - deg[v]
        cands = [u for u in range(v + 1, n) if deg[u] < k]
        if len(cands) < need:
            return
        for chosen in combinations(cands, need):
            for u in chosen:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                deg[u] += 1
            deg[v] += need
            rec(v + 1)
            deg[v] -= need
            for u in chosen:
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
                deg[u] -= 1

    rec(0)
    return count


def _aut_size(g: Graph) -> int:
    bits = g.bits()
    n = g.n
    count = 0
    for perm in permutations(range(n)):
        if all(
            (bits[u] >> v & 1) == (bits[perm[u]] >> perm[v] & 1)
            for u in range(n)
            for v in range(u + 1, n)
        ):
            count += 1
    return count


def test_enum_small_cases():
    assert len(search.enum_connected_regular(2, 5)) == 1
    assert search.enum_connected_regular(2, 5)[0].num_edges() == 5
    assert len(search.enum_connected_regular(3, 4)) == 1
    assert len(search.enum_connected_regular(3, 6)) == 2
    assert search.enum_connected_regular(3, 5) == []  # parity
    assert len(search.enum_connected_regular(1, 2)) == 1
    assert search.enum_connected_regular(1, 4) == []  # disconnected matchings only
    with pytest.raises(ValueError):
        search.enum_connected_regular(4, 4)
    with pytest.raises(UnsupportedSizeError):
        search.enum_connected_regular(3, 30)


def test_enum_orbit_count_completeness():
    # sum over classes of n!/|Aut| must equal the labeled count from an
    # independent no-symmetry enumeration: proves nothing was missed
    for k, n in ((3, 6), (3, 8), (4, 7), (2, 7), (4, 8)):
        classes = search.enum_connected_regular(k, n)
        total = sum(math.factorial(n) // _aut_size(g) for g in classes)
        assert total == _labeled_regular_count(k, n, connected_only=True), (k, n)


def test_enum_pairwise_non_isomorphic():
    graphs = search.enum_connected_regular(3, 8)
    certs = {search.canonical_form(g).certificate for g in graphs}
    assert len(certs) == len(graphs) == 5
    for g in graphs:
        assert set(g.degrees()) == {3} and g.is_connected()


def test_spectral_prune():
    assert not search.spectral_prune(path(3), -0.5)  # lambda_2(P3) = 0 > -0.5
    assert search.spectral_prune(path(3), 0.0)
    assert search.spectral_prune(Graph.from_edges(1, []), -5)  # nothing to cut yet


def test_second_eigenvalue_at_most_exact():
    assert search.second_eigenvalue_at_most(cycle(6), Fraction(1))
    assert not search.second_eigenvalue_at_most(cycle(6), Fraction(99, 100))
    assert search.second_eigenvalue_at_most(petersen(), Fraction(1))
    assert search.second_eigenvalue_at_most(complete(4), Fraction(-1))
    assert not search.second_eigenvalue_at_most(complete_bipartite(3, 3), Fraction(-1, 2))


def test_v_search_results():
    r = search.v_search(2, 0, 8)
    assert r.exact_v == 4 and r.unique and r.complete
    assert search.canonical_form(complete_bipartite(2, 2)).certificate == \
        r.extremal[0].certificate
    r = search.v_search(3, -0.5, 8)
    assert r.exact_v == 4 and r.unique
    assert search.canonical_form(complete(4)).certificate == r.extremal[0].certificate
    r = search.v_search(2, 1, 10)
    assert r.exact_v == 6
    r = search.v_search(3, 0, 10)
    assert r.exact_v == 6 and r.unique
    assert search.canonical_form(complete_bipartite(3, 3)).certificate == \
        r.extremal[0].certificate


def test_v_search_monotone_in_lambda():
    values = [search.v_search(3, lam, 10).exact_v for lam in (-0.5, 0, 1)]
    assert values == sorted(values)


def test_v_search_pruning_lossless():
    for k, lam, n_max in ((3, 1, 10), (2, 0.5, 9), (4, 1, 8)):
        a = search.v_search(k, lam, n_max, prune=True)
        b = search.v_search(k, lam, n_max, prune=False)
        assert a.same_result(b), (k, lam, n_max)


def test_v_search_extremal_revalidation():
    r = search.v_search(3, 1, 10)
    assert r.exact_v == 10
    for e in r.extremal:
        g = e.graph()
        assert set(g.degrees()) == {3}
        assert g.is_connected()
        assert second_largest(g) <= 1 + 1e-9
    # the order-10 witness is the Petersen graph
    assert search.canonical_form(petersen()).certificate == r.extremal[0].certificate


def test_v_search_lower_bound_witness():
    # integer lambda, k = lambda * a: order 2k + 2*lambda is reached
    r = search.v_search(2, 1, 6)
    assert r.exact_v == 6
    r = search.v_search(3, 1, 8)
    assert r.exact_v == 8


def test_v_search_boundary_flags():
    r = search.v_search(2, 1, 10)
    c6 = [e for e in r.extremal][0]
    assert c6.boundary and c6.exact_confirmed


def test_v_search_workers_deterministic():
    a = search.v_search(3, 1, 10, workers=1)
    b = search.v_search(3, 1, 10, workers=2)
    assert a.to_json_obj() == b.to_json_obj()


def test_v_search_incomplete_flag():
    r = search.v_search(3, 0, 18, max_n=10)
    assert not r.complete
    assert r.exact_v == 6


def test_report_json():
    r = search.v_search(2, 0, 6)
    obj = r.to_json_obj()
    assert obj["exact_v"] == 4
    assert obj["counts"]["4"]["passed"] == 1
    assert obj["extremal"][0]["graph6"]


def _rook4() -> Graph:
    import numpy as np

    a = np.zeros((16, 16), dtype=bool)
    for i in range(16):
        for j in range(16):
            if i != j and (i // 4 == j // 4 or i % 4 == j % 4):
                a[i, j] = True
    return Graph(a)


def _shrikhande() -> Graph:
    import numpy as np

    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    a = np.zeros((16, 16), dtype=bool)
    for x1 in range(4):
        for y1 in range(4):
            for x2 in range(4):
                for y2 in range(4):
                    if ((x1 - x2) % 4, (y1 - y2) % 4) in conn:
                        a[x1 * 4 + y1, x2 * 4 + y2] = True
    return Graph(a)


def test_canonical_splits_cospectral_strongly_regular_pair():
    # both graphs have parameters (16, 6, 2, 2) and identical spectra, so
    # refinement alone cannot distinguish them; individualization must
    from regspectra.graphs import regularity_params

    rook, shri = _rook4(), _shrikhande()
    assert regularity_params(rook).srg_params() == (16, 6, 2, 2)
    assert regularity_params(shri).srg_params() == (16, 6, 2, 2)
    c_rook = search.canonical_form(rook).certificate
    c_shri = search.canonical_form(shri).certificate
    assert c_rook != c_shri
    perm = list(range(16))
    random.Random(9).shuffle(perm)
    assert search.canonical_form(rook.relabel(perm)).certificate == c_rook
    assert search.canonical_form(shri.relabel(perm)).certificate == c_shri


def test_enum_orbit_count_five_regular():
    classes = search.enum_connected_regular(5, 8)
    total = sum(math.factorial(8) // _aut_size(g) for g in classes)
    assert total == _labeled_regular_count(5, 8, connected_only=True)
    assert len(classes) == 3  # complements of the 2-regular graphs on 8 vertices


def test_v_search_degree_one():
    r = search.v_search(1, 0, 4)
    assert r.exact_v == 2 and r.unique
