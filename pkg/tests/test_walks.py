import itertools
import math

import numpy as np
import pytest

from spexsurf import (Graph, PreconditionError, build_cycle, build_path,
                      check_w2_w3, complete_graph, disjoint_union,
                      empty_graph, k2_join, kr_pendant, max_w3_degseq,
                      spectral_radius, w3_shape_target, walk_compare,
                      walk_counts, zhang_rho)
from _oracles import brute_walk_counts, random_mask_graph


def test_exact_counts_match_brute_enumeration():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        g = random_mask_graph(rng, n, 0.5)
        prof = walk_counts(g, 4, mode="exact")
        assert list(prof.counts) == brute_walk_counts(g, 4)


def test_first_count_is_twice_edges():
    g = complete_graph(7)
    assert walk_counts(g, 1).counts[0] == 2 * g.m


def test_degree_identities():
    rng = np.random.default_rng(29)
    for _ in range(20):
        g = random_mask_graph(rng, int(rng.integers(3, 12)), 0.4)
        assert check_w2_w3(g)
        prof = walk_counts(g, 3)
        deg = {v: g.degree(v) for v in range(g.n)}
        assert prof.counts[1] == sum(d * d for d in deg.values())
        assert prof.counts[2] == 2 * sum(deg[u] * deg[v] for u, v in g.edges())


def test_exact_counts_stay_integers():
    # 2^200-scale numbers must not round
    prof = walk_counts(complete_graph(12), 60, mode="exact")
    assert prof.counts[-1] == 12 * 11 ** 60
    assert prof.value(59) == float(12 * 11 ** 59)


def test_scaled_mode_tracks_exact():
    g = k2_join(build_path(8))
    exact = walk_counts(g, 12, mode="exact")
    scaled = walk_counts(g, 12, mode="scaled")
    for ell in range(1, 13):
        rel = abs(scaled.value(ell) - exact.value(ell)) / exact.value(ell)
        assert rel < 1e-9


def test_walk_counts_preconditions():
    with pytest.raises(PreconditionError):
        walk_counts(build_path(3), 0)
    with pytest.raises(PreconditionError):
        walk_counts(build_path(3), 3, mode="approx")


def test_compare_finds_first_difference():
    # P4 and K3+K1 share w1 = 6 but diverge at w2
    p4 = build_path(4)
    k3 = disjoint_union(complete_graph(3), empty_graph(1))
    cmp = walk_compare(p4, k3, 8)
    assert not cmp.equal
    assert cmp.first_index == 2
    assert cmp.sign == -1  # 10 < 12
    tie = walk_compare(p4, build_path(4), 8)
    assert tie.equal and tie.sign == 0 and tie.inconclusive_at == 8
    with pytest.raises(PreconditionError):
        walk_compare(p4, build_path(5), 4)


def test_zhang_solver_bipartite_and_joins():
    assert zhang_rho([(3, None), (7, None)], tol=1e-12) == pytest.approx(
        math.sqrt(21), abs=1e-10)
    # K2 joined to a clique part: plain complete graph
    direct = spectral_radius(complete_graph(7), tol=1e-12).rho
    series = zhang_rho([(1, None), (1, None), (5, complete_graph(5))],
                       tol=1e-12)
    assert series == pytest.approx(direct, abs=1e-9)


def test_zhang_preconditions():
    with pytest.raises(PreconditionError):
        zhang_rho([(5, None)])
    with pytest.raises(PreconditionError):
        zhang_rho([(2, complete_graph(3)), (2, None)])
    with pytest.raises(PreconditionError):
        zhang_rho([(3, None), (3, None)], tol=-1.0)


def _all_realizations_max_w3(seq):
    """Exhaustive labelled-graph maximum, for tiny sequences."""
    n = len(seq)
    best = -1
    pairs = list(itertools.combinations(range(n), 2))
    target = sorted(seq, reverse=True)
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if sorted(deg, reverse=True) != target:
            continue
        g = Graph(n, edges)
        best = max(best, walk_counts(g, 3).counts[2])
    return best


def test_max_w3_matches_exhaustive_tiny():
    for seq in ([2, 2, 2, 1, 1], [3, 2, 2, 2, 1], [3, 3, 2, 2, 2, 2]):
        val, wit = max_w3_degseq(seq, allow_leaf_pairs=True)
        assert sorted((int(d) for d in wit.degrees()), reverse=True) == \
            sorted(seq, reverse=True)
        assert walk_counts(wit, 3).counts[2] == val
        assert val == _all_realizations_max_w3(seq)


def test_max_w3_witness_consistency():
    seq = [4, 4, 3, 3] + [2] * 8 + [1, 1]
    val, wit = max_w3_degseq(seq)
    assert walk_counts(wit, 3).counts[2] == val
    assert sorted((int(d) for d in wit.degrees()), reverse=True) == \
        sorted(seq, reverse=True)
    assert val == w3_shape_target(seq)


def test_max_w3_preconditions():
    with pytest.raises(PreconditionError):
        max_w3_degseq([3, 1])  # not graphical
    with pytest.raises(PreconditionError):
        max_w3_degseq([-1, 1])


def test_shape_targets():
    assert w3_shape_target([4, 4, 3, 3, 2, 2, 1, 1]) == 8 * 10 + 106
    assert w3_shape_target([5, 5, 4, 4, 4, 2, 1, 1]) == 8 * 10 + 346
    assert w3_shape_target([3, 3, 3, 2]) is None


def test_walk_order_tracks_join_rho():
    h1, _ = kr_pendant(4, 12)
    h2 = build_path(12)
    cmp = walk_compare(h1, h2, 30)
    assert cmp.sign == 1
    r1 = spectral_radius(k2_join(h1), tol=1e-12).rho
    r2 = spectral_radius(k2_join(h2), tol=1e-12).rho
    assert r1 > r2
