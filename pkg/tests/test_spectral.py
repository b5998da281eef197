import math

import numpy as np
import pytest

from spexsurf import (NonConvergenceError, PreconditionError, bounds,
                      build_cycle, build_path, complete_graph,
                      disjoint_union, empty_graph, k2_join, rayleigh_delta,
                      rho0, rho_complete_split, spectral_radius)
from _oracles import dense_rho, random_mask_graph


def test_closed_forms():
    assert rho_complete_split(10) == (1 + math.sqrt(65)) / 2
    assert rho0(10) == 1.5 + math.sqrt(16.25)
    with pytest.raises(PreconditionError):
        rho_complete_split(2)
    with pytest.raises(PreconditionError):
        rho0(4)


def test_known_spectra():
    assert spectral_radius(complete_graph(6)).rho == pytest.approx(5.0, abs=1e-10)
    assert spectral_radius(build_cycle(8)).rho == pytest.approx(2.0, abs=1e-10)
    p = build_path(7)
    assert spectral_radius(p).rho == pytest.approx(2 * math.cos(math.pi / 8),
                                                   abs=1e-10)
    assert spectral_radius(empty_graph(4)).rho == 0.0


def test_matches_dense_eigensolver():
    rng = np.random.default_rng(21)
    for _ in range(30):
        n = int(rng.integers(2, 40))
        g = random_mask_graph(rng, n, float(rng.uniform(0.1, 0.7)))
        res = spectral_radius(g, tol=1e-11)
        assert res.rho == pytest.approx(dense_rho(g), abs=1e-8)


def test_perron_vector_properties():
    g = k2_join(build_cycle(8))
    res = spectral_radius(g, tol=1e-12)
    assert res.perron.max() == pytest.approx(1.0, abs=1e-12)
    assert (res.perron > 0).all()
    # eigen equation holds at the residual scale
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    gap = np.abs(a @ res.perron - res.rho * res.perron).max()
    assert gap < 1e-8


def test_disconnected_takes_max_component():
    g = disjoint_union(complete_graph(4), build_cycle(9))
    res = spectral_radius(g)
    assert res.rho == pytest.approx(3.0, abs=1e-10)
    # vector is supported on the K4 side only
    assert res.perron[:4].min() > 0.9
    assert np.abs(res.perron[4:]).max() == 0.0


def test_nonconvergence_carries_best():
    with pytest.raises(NonConvergenceError) as info:
        spectral_radius(build_path(7), tol=1e-30)
    best = info.value.best
    assert best is not None
    assert best.rho == pytest.approx(2 * math.cos(math.pi / 8), abs=1e-9)
    with pytest.raises(PreconditionError):
        spectral_radius(build_path(7), tol=0.0)


def test_bounds_envelope():
    env = bounds(100, 2)
    assert env.lower == pytest.approx(env.rho0 + 5 / 100, abs=1e-12)
    assert env.upper - env.lower == pytest.approx(0.05 / 100, abs=1e-12)
    assert env.ellingham_zha == pytest.approx(2 + math.sqrt(2 * 100 + 10),
                                              abs=1e-12)
    assert env.n_threshold == 50 * (300 + 360 + 96) ** 2
    assert env.to_json()["lower"] == env.lower
    with pytest.raises(PreconditionError):
        bounds(4, 1)
    with pytest.raises(PreconditionError):
        bounds(100, -1)


def test_rayleigh_delta_signs():
    g = build_cycle(10)
    res = spectral_radius(g, tol=1e-12)
    # adding an edge raises the quotient, deleting one lowers it
    assert rayleigh_delta(g, res.perron, add=[(0, 5)], delete=[]) > 0
    assert rayleigh_delta(g, res.perron, add=[], delete=[(0, 1)]) < 0


def test_deterministic_restarts():
    g = k2_join(build_path(50))
    a = spectral_radius(g)
    b = spectral_radius(g)
    assert a.rho == b.rho and a.iterations == b.iterations
    assert np.array_equal(a.perron, b.perron)
