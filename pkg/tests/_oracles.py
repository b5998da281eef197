"""Independent reference implementations the tests check against.

Everything here is deliberately naive: walk counts by explicit walk
enumeration, minors by delete/contract recursion, spectra by dense
eigensolver.  Slow is fine; agreeing with the fast library code is the
point.
"""
from __future__ import annotations

import itertools

import numpy as np

from spexsurf import Graph, canonical_graph6


def brute_walk_counts(g: Graph, lmax: int) -> list[int]:
    """Count walks by recursive extension, one step at a time."""
    adj = [[int(u) for u in g.neighbors(v)] for v in range(g.n)]

    def extend(v: int, steps: int) -> int:
        if steps == 0:
            return 1
        return sum(extend(u, steps - 1) for u in adj[v])

    return [sum(extend(v, ell) for v in range(g.n))
            for ell in range(1, lmax + 1)]


def dense_rho(g: Graph) -> float:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(a)[-1])


# ── delete/contract minor recursion ─────────────────────────────────────


def _delete_vertex(g: Graph, x: int) -> Graph:
    keep = [v for v in range(g.n) if v != x]
    return g.induced_subgraph(keep)


def _delete_edge(g: Graph, x: int, y: int) -> Graph:
    edges = [e for e in g.edges() if e != (min(x, y), max(x, y))]
    return Graph(g.n, edges)


def _contract_edge(g: Graph, x: int, y: int) -> Graph:
    # keep x, fold y into it, shift ids above y down by one
    def relabel(v: int) -> int:
        if v == y:
            v = x
        return v - 1 if v > y else v

    edges = set()
    for u, v in g.edges():
        a, b = relabel(u), relabel(v)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(g.n - 1, sorted(edges))


def naive_has_minor(g: Graph, h: Graph) -> bool:
    """Exhaustive delete/contract search, memoized on canonical forms."""
    target = canonical_graph6(h)
    dead: set[str] = set()

    def rec(cur: Graph) -> bool:
        if cur.n < h.n or cur.m < h.m:
            return False
        key = canonical_graph6(cur)
        if key == target:
            return True
        if key in dead:
            return False
        dead.add(key)
        for u, v in cur.edges():
            if rec(_contract_edge(cur, u, v)):
                return True
            if rec(_delete_edge(cur, u, v)):
                return True
        for x in range(cur.n):
            if rec(_delete_vertex(cur, x)):
                return True
        return False

    return rec(g)


def max_connected_boundary_brute(g: Graph) -> int:
    """Largest outside-neighborhood over connected vertex subsets."""
    best = 0
    verts = range(g.n)
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(verts, size):
            s = set(sub)
            # connectivity of the induced subset
            stack = [sub[0]]
            seen = {sub[0]}
            while stack:
                v = stack.pop()
                for u in g.neighbors(v):
                    u = int(u)
                    if u in s and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) != size:
                continue
            boundary = set()
            for v in s:
                for u in g.neighbors(v):
                    u = int(u)
                    if u not in s:
                        boundary.add(u)
            best = max(best, len(boundary))
    return best


def random_capped_graph(rng: np.random.Generator, n: int = 14, cap: int = 4,
                        extra: int = 6) -> Graph:
    """Connected graph with max degree <= cap: random tree plus fill-ins."""
    perm = rng.permutation(n)
    edges: set[tuple[int, int]] = set()
    deg = [0] * n
    for i in range(1, n):
        pool = [int(perm[j]) for j in range(i) if deg[int(perm[j])] < cap]
        p = pool[int(rng.integers(len(pool)))]
        u, v = int(perm[i]), p
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    tries = added = 0
    while added < extra and tries < 200:
        tries += 1
        u, v = (int(x) for x in rng.integers(0, n, 2))
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in edges or deg[u] >= cap or deg[v] >= cap:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
        added += 1
    return Graph(n, sorted(edges))


def random_mask_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    mask = rng.random(len(pairs)) < p
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])
