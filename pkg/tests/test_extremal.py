import numpy as np
import pytest

from spexsurf import (Graph, PreconditionError, ScaleRefusalError,
                      SpanningPathWitness, build_cycle, build_path,
                      candidate_sweep, canonical_graph6, complete_bipartite,
                      complete_graph, complete_multipartite, contract_switch,
                      disjoint_union, empty_graph, has_minor, is_isomorphic,
                      is_planar, k2_join, min_euler_genus, rebalance_check,
                      spex_bruteforce, structure_report, walk_counts)
from _oracles import (max_connected_boundary_brute, naive_has_minor,
                      random_mask_graph)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def test_minor_knowns():
    assert has_minor(complete_graph(6), complete_graph(5))
    assert has_minor(_petersen(), complete_graph(5))
    assert has_minor(_petersen(), complete_bipartite(3, 3))
    assert has_minor(build_cycle(9), build_cycle(3))
    assert not has_minor(build_cycle(9), complete_graph(4))
    assert not has_minor(complete_graph(4), complete_graph(5))
    # an isolated pattern vertex needs a spare branch set, not an edge
    k3_plus_iso = disjoint_union(complete_graph(3), empty_graph(1))
    assert not has_minor(build_cycle(5), k3_plus_iso)
    assert has_minor(disjoint_union(build_cycle(3), empty_graph(1)),
                     k3_plus_iso)


def test_minor_agrees_with_delete_contract_oracle():
    rng = np.random.default_rng(101)
    checked = 0
    while checked < 25:
        g = random_mask_graph(rng, int(rng.integers(4, 8)), 0.5)
        h = random_mask_graph(rng, int(rng.integers(2, 5)), 0.6)
        if g.m == 0 or h.m == 0:
            continue
        assert has_minor(g, h) == naive_has_minor(g, h), \
            (canonical_graph6(g), canonical_graph6(h))
        checked += 1


def test_minor_is_monotone_under_host_growth():
    rng = np.random.default_rng(55)
    for _ in range(10):
        g = random_mask_graph(rng, 8, 0.4)
        h = random_mask_graph(rng, 4, 0.6)
        if has_minor(g, h):
            # adding edges to the host can never lose the minor
            pairs = [(u, v) for u in range(8) for v in range(u + 1, 8)
                     if not g.has_edge(u, v)]
            if pairs:
                u, v = pairs[0]
                grown = Graph(8, list(g.edges()) + [(u, v)])
                assert has_minor(grown, h)
            assert g.n >= h.n and g.m >= h.m


def test_star_minor_equals_boundary_reach():
    rng = np.random.default_rng(77)
    for _ in range(30):
        g = random_mask_graph(rng, int(rng.integers(3, 10)), 0.35)
        reach = max_connected_boundary_brute(g)
        for k in range(1, 7):
            star = complete_bipartite(1, k)
            assert has_minor(g, star) == (reach >= k), (canonical_graph6(g), k)


def test_minor_envelope():
    with pytest.raises(ScaleRefusalError):
        has_minor(empty_graph(31), complete_graph(3))
    with pytest.raises(ScaleRefusalError):
        has_minor(complete_graph(12), complete_graph(11))


def test_planarity():
    assert is_planar(complete_graph(4))
    assert is_planar(build_cycle(9))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(_petersen())
    assert is_planar(disjoint_union(complete_graph(4), complete_graph(4)))
    # edge-count cut: any graph with e > 3n-6 fails without minor work
    assert not is_planar(complete_multipartite([2, 2, 2, 2]))


def test_planarity_matches_genus_zero():
    rng = np.random.default_rng(13)
    checked = 0
    while checked < 12:
        g = random_mask_graph(rng, 6, 0.5)
        if not g.is_connected():
            continue
        assert is_planar(g) == (min_euler_genus(g).genus == 0)
        checked += 1


def test_bruteforce_small_orders():
    ranked4 = spex_bruteforce(4)
    assert len(ranked4) == 11
    top, rho = ranked4[0]
    assert canonical_graph6(top) == canonical_graph6(complete_graph(4))
    assert rho == pytest.approx(3.0, abs=1e-12)
    assert len(spex_bruteforce(5)) == 33
    assert len(spex_bruteforce(6)) == 142
    # rho ranking is non-increasing
    rhos = [r for _, r in ranked4]
    assert rhos == sorted(rhos, reverse=True)
    with pytest.raises(ScaleRefusalError):
        spex_bruteforce(8)
    with pytest.raises(PreconditionError):
        spex_bruteforce(4, graph_class="toroidal")


def test_bruteforce_order_seven():
    ranked = spex_bruteforce(7)
    assert len(ranked) == 822
    top, rho = ranked[0]
    assert rho == pytest.approx(4.511404664226759, abs=1e-12)
    assert top.m == 15  # maximal planar
    # the runner-up sits clearly below
    assert ranked[1][1] == pytest.approx(4.504664353588047, abs=1e-12)
    assert not is_isomorphic(top, k2_join(build_path(5)))


def test_structure_report():
    h = Graph(10, [(i, i + 1) for i in range(9)] + [(2, 7)])
    rep = structure_report(h, list(range(10)))
    assert rep.endpoint_degrees == (1, 1)
    assert rep.fork_count == 2
    assert rep.separate_forks == (2, 7)
    assert rep.contractible_2vertices == (3, 4, 5, 6)
    assert rep.to_json()["fork_count"] == 2
    with pytest.raises(PreconditionError, match="spanning path"):
        structure_report(h, [0, 2, 1] + list(range(3, 10)))
    with pytest.raises(PreconditionError, match="permutation"):
        structure_report(h, list(range(9)))


def test_structure_report_adjacency_blocks_contraction():
    # a triangle fork pair: the 2-vertex between adjacent neighbours stays
    h = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (1, 4)])
    rep = structure_report(h, list(range(6)))
    assert 2 not in rep.contractible_2vertices


def _inner_counts(g: Graph) -> tuple[int, int]:
    inner = g.induced_subgraph(range(2, g.n))
    prof = walk_counts(inner, 3)
    return int(prof.counts[1]), int(prof.counts[2])


def test_contract_switch_pendant_tail():
    g = k2_join(build_path(10))
    witness = SpanningPathWitness((0, 1), tuple(range(2, 12)))
    w2_before, w3_before = _inner_counts(g)
    res = contract_switch(g, witness, 2, 6)
    w2_after, w3_after = _inner_counts(res.graph)
    assert res.w2_delta == w2_after - w2_before == 0
    assert res.w3_delta == w3_after - w3_before
    res.witness.validate(res.graph)
    # rerouting: old run head hangs off the old tail now
    path = list(witness.path_order)
    assert res.graph.has_edge(path[1], path[5])       # u_2 u_6
    assert res.graph.has_edge(path[2], path[9])       # u_3 u_10
    assert not res.graph.has_edge(path[1], path[2])
    assert not res.graph.has_edge(path[4], path[5])


def test_contract_switch_nonpendant_tail_gives_no_w3():
    inner = Graph(10, [(i, i + 1) for i in range(9)] + [(7, 9)])
    g = k2_join(inner)
    witness = SpanningPathWitness((0, 1), tuple(range(2, 12)))
    w2_before, w3_before = _inner_counts(g)
    res = contract_switch(g, witness, 2, 6)
    w2_after, _ = _inner_counts(res.graph)
    assert res.w2_delta == w2_after - w2_before == 2
    assert res.w3_delta is None


def test_contract_switch_degree_bookkeeping():
    g = k2_join(build_path(10))
    witness = SpanningPathWitness((0, 1), tuple(range(2, 12)))
    path = list(witness.path_order)
    res = contract_switch(g, witness, 2, 6)
    # u_{j-1} drops to a pendant of the run, the old tail picks one up
    assert g.degree(path[4]) - res.graph.degree(path[4]) == 1
    assert res.graph.degree(path[9]) - g.degree(path[9]) == 1


def test_contract_switch_preconditions():
    g = k2_join(build_path(10))
    witness = SpanningPathWitness((0, 1), tuple(range(2, 12)))
    for i, j in ((1, 5), (2, 4), (2, 10)):
        with pytest.raises(PreconditionError, match="switch needs"):
            contract_switch(g, witness, i, j)
    # a chord makes the run non-2-regular
    chorded = k2_join(Graph(10, [(i, i + 1) for i in range(9)] + [(3, 8)]))
    with pytest.raises(PreconditionError, match="2-vertices"):
        contract_switch(chorded, witness, 2, 6)
    # u_i u_j adjacency is rejected
    touching = k2_join(Graph(10, [(i, i + 1) for i in range(9)] + [(1, 5)]))
    with pytest.raises(PreconditionError, match="already adjacent"):
        contract_switch(touching, witness, 2, 6)


def test_rebalance_preconditions():
    with pytest.raises(PreconditionError, match="a >= b"):
        rebalance_check(complete_graph(4), 0, 1, 2, 1)
    with pytest.raises(PreconditionError, match="minimum degree"):
        rebalance_check(build_path(4), 0, 1, 4, 1)


def test_candidate_sweep_small():
    report = candidate_sweep(14, 1)
    assert report.space == "full"
    assert report.candidates == 12765
    assert report.winner_rank == 20
    assert report.winner_inner_graph6 == "KQGOOG??GD_N"
    rows = report.rows
    assert rows[0].rank == 1
    assert all(a.rho >= b.rho for a, b in zip(rows, rows[1:]))
    winner_rows = [r for r in rows if "argmax" in r.flags]
    assert len(winner_rows) == 1
    assert winner_rows[0].rank == 20
    assert "minor-free" in winner_rows[0].flags
    tested = [r for r in rows if r.rank < 20]
    assert all("has-target-minor" in r.flags for r in tested)
    lines = list(report.csv_lines())
    assert lines[0] == "graph6,rho,edges,degrees,flags"
    assert len(lines) == len(rows) + 1
    # kept rows render as parseable csv
    first = lines[1].split(",")
    assert first[1] == f"{rows[0].rho:.12g}"


def test_candidate_sweep_guards():
    with pytest.raises(ScaleRefusalError):
        candidate_sweep(31, 1)
    with pytest.raises(PreconditionError):
        candidate_sweep(11, 1)
    with pytest.raises(PreconditionError):
        candidate_sweep(20, 3)
