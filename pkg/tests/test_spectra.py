"""Spectra, quotient matrices, interlacing, coclique-extension formula."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from regspectra import spectra
from regspectra.construct import (
    complement,
    complete,
    complete_bipartite,
    coclique_extension,
    cycle,
    k_tilde,
    line_graph,
    petersen,
    random_graph,
)
from regspectra.spectra import (
    coclique_extension_spectrum,
    eig_symmetric,
    group_eigenvalues,
    interlacing_check,
    quotient_matrix,
    spectrum,
)


def test_eig_symmetric_validation():
    with pytest.raises(ValueError):
        eig_symmetric([[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(ValueError):
        eig_symmetric([[0.0, 1.0]])
    with pytest.raises(ValueError):
        eig_symmetric([[0.0, math.inf], [math.inf, 0.0]])
    assert eig_symmetric([[0.0] * 4 for _ in range(4)]) == [0.0] * 4


def test_star_and_biclique_extremes():
    # lambda_max(K_{1,n-1}) = sqrt(n-1); lambda_min(K_{2,t}) = -sqrt(2t)
    for n in (2, 5, 10):
        vals = eig_symmetric(complete_bipartite(1, n - 1).adj.astype(float))
        assert abs(vals[0] - math.sqrt(n - 1)) < 1e-12
    for t in (1, 4, 7):
        vals = eig_symmetric(complete_bipartite(2, t).adj.astype(float))
        assert abs(vals[-1] + math.sqrt(2 * t)) < 1e-12


def test_spectrum_grouping():
    s = spectrum(complete(6))
    assert [m for _, m in s.pairs] == [1, 5]
    assert s.lambda_max() == pytest.approx(5, abs=1e-10)
    assert s.lambda_min() == pytest.approx(-1, abs=1e-10)
    assert s.second_largest() == pytest.approx(-1, abs=1e-10)
    c6 = spectrum(cycle(6))
    assert [m for _, m in c6.pairs] == [1, 2, 2, 1]
    assert abs(c6.value(2) - 1.0) < 1e-9


def test_spectrum_json():
    s = spectrum(complete(3))
    obj = s.to_json_obj()
    assert obj["eigenvalues"][0]["multiplicity"] == 1
    assert "tolerance" in obj


def test_trace_invariants():
    rng = random.Random(31)
    for _ in range(20):
        g = random_graph(rng.randint(1, 12), rng.random(), rng)
        vals = eig_symmetric(g.adj.astype(float))
        assert abs(sum(vals)) <= 1e-8
        m = g.num_edges()
        if m:
            assert abs(sum(v * v for v in vals) - 2 * m) <= 1e-6 * 2 * m
        else:
            assert abs(sum(v * v for v in vals)) <= 1e-8


def test_line_graph_complement_family():
    for a in (2, 3, 5):
        g = complement(line_graph(complete_bipartite(2, a + 1)))
        s = spectrum(g)
        want = group_eigenvalues([a] + [1.0] * a + [-1.0] * a + [-a], 1e-8)
        assert s.approx_eq(want)


def test_complement_spectrum_relation_for_regular():
    # k-regular g on v vertices: co-spectrum = {v-1-k} + {-1-x : x in rest}
    from regspectra.search import enum_connected_regular

    gs = enum_connected_regular(3, 8) + enum_connected_regular(4, 7)
    for g in gs:
        k = g.degree(0)
        vals = eig_symmetric(g.adj.astype(float))
        co_vals = eig_symmetric(complement(g).adj.astype(float))
        expected = sorted([g.n - 1 - k] + [-1 - x for x in vals[1:]], reverse=True)
        assert max(abs(x - y) for x, y in zip(co_vals, expected)) < 1e-8


def test_coclique_extension_spectrum_formula():
    rng = random.Random(12)
    for _ in range(20):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        s = spectrum(g)
        for q in (1, 2, 3):
            formula = coclique_extension_spectrum(s, g.n, q)
            direct = eig_symmetric(coclique_extension(g, q).adj.astype(float))
            assert formula.n == len(direct)
            assert max(
                abs(x - y) for x, y in zip(formula.values(), direct)
            ) < 1e-8


def test_coclique_extension_spectrum_validation():
    s = spectrum(complete(3))
    with pytest.raises(ValueError):
        coclique_extension_spectrum(s, 4, 2)
    with pytest.raises(ValueError):
        coclique_extension_spectrum(s, 3, 0)
    assert coclique_extension_spectrum(s, 3, 1) is s


def test_quotient_trivial_partition():
    g = petersen()
    q = quotient_matrix(g, [list(range(10))])
    assert q.equitable and q.matrix == ((Fraction(3),),)
    assert q.eigenvalue_list() == [3.0]


def test_quotient_biclique():
    g = complete_bipartite(3, 5)
    q = quotient_matrix(g, [list(range(3)), list(range(3, 8))])
    assert q.equitable
    assert q.matrix == ((Fraction(0), Fraction(5)), (Fraction(3), Fraction(0)))
    vals = q.eigenvalue_list()
    assert abs(vals[0] - math.sqrt(15)) < 1e-9 and abs(vals[-1] + math.sqrt(15)) < 1e-9
    full = eig_symmetric(g.adj.astype(float))
    assert abs(vals[0] - full[0]) < 1e-9


def test_quotient_tilde_matrix_matches_display():
    # partition (non-adjacent half, adjacent half, apex)
    for m in (1, 2, 4):
        g = k_tilde(m)
        q = quotient_matrix(g, [list(range(m, 2 * m)), list(range(m)), [2 * m]])
        assert q.equitable
        assert [[int(x) for x in row] for row in q.matrix] == [
            [m - 1, m, 0],
            [m, m - 1, 1],
            [0, m, 0],
        ]


def test_quotient_non_equitable():
    g = cycle(5)
    q = quotient_matrix(g, [[0, 1], [2, 3, 4]])
    assert not q.equitable


def test_quotient_partition_validation():
    g = complete(4)
    with pytest.raises(ValueError):
        quotient_matrix(g, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        quotient_matrix(g, [[0, 1], [2]])


def test_equitable_quotient_eigs_inside_spectrum():
    # distance partitions of vertex-transitive graphs are equitable
    from regspectra.graphs import distance_layers

    for g in (petersen(), cycle(6), complete_bipartite(4, 4)):
        layers = distance_layers(g, 0).layers
        q = quotient_matrix(g, [list(l) for l in layers])
        assert q.equitable
        full = eig_symmetric(g.adj.astype(float))
        for val in q.eigenvalue_list():
            assert min(abs(val - x) for x in full) < 1e-7


def test_quotient_symmetrization_cross_check():
    # D^{-1/2} E D^{-1/2} is symmetric with the same spectrum as the quotient
    rng = random.Random(44)
    for _ in range(10):
        g = random_graph(rng.randint(4, 9), 0.5, rng)
        cut = rng.randint(1, g.n - 1)
        parts = [list(range(cut)), list(range(cut, g.n))]
        q = quotient_matrix(g, parts)
        e = np.array(
            [[float(q.matrix[i][j] * len(parts[i])) for j in range(2)] for i in range(2)]
        )
        d = np.diag([1 / math.sqrt(len(p)) for p in parts])
        sym = d @ e @ d
        ref = sorted(eig_symmetric(sym))
        got = sorted(q.eigenvalue_list())
        assert max(abs(x - y) for x, y in zip(got, ref)) < 1e-8


def test_interlacing():
    g = petersen()
    assert interlacing_check(g, list(range(10)))
    assert interlacing_check(g, [0, 1, 2, 5])
    with pytest.raises(ValueError):
        interlacing_check(g, [])
    rng = random.Random(202)
    for _ in range(50):
        g = random_graph(rng.randint(2, 10), rng.random(), rng)
        size = rng.randint(1, g.n)
        subset = rng.sample(range(g.n), size)
        assert interlacing_check(g, subset)


def test_second_largest_of_noncomplete_connected():
    # a connected non-complete graph contains an induced 2-path: lambda_2 >= 0
    for g in (cycle(5), petersen(), complete_bipartite(2, 3)):
        assert spectra.second_largest(g) >= -1e-9


def test_quotient_singleton_partition_is_adjacency():
    g = cycle(6)
    q = quotient_matrix(g, [[v] for v in range(6)])
    assert q.equitable
    got = sorted(q.eigenvalue_list())
    want = sorted(eig_symmetric(g.adj.astype(float)))
    assert max(abs(x - y) for x, y in zip(got, want)) < 1e-8
