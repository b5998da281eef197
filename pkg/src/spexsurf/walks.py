"""Walk counting, the degree-sum identities for w2/w3, walk-profile
comparison, the characteristic-equation solver over walk series, and a
search oracle for the maximum w3 over realizations of a degree sequence.

An l-walk is an ordered sequence of l edges (l+1 vertices, repeats allowed),
so w(1) = 2e.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import PreconditionError
from .graphs import Graph, build_cycle, erdos_gallai, havel_hakimi

_EXHAUSTIVE_SLACK = 8   # non-2-degree vertices
_EXHAUSTIVE_N = 14
_EXHAUSTIVE_UNITS = 32  # total degree over the non-2 vertices


def _neighbor_sums(indptr: np.ndarray, indices: np.ndarray,
                   w: np.ndarray) -> np.ndarray:
    """out[v] = sum of w over the neighbours of v, CSR layout.

    reduceat runs over the starts of nonempty rows only: with empty rows in
    the boundary list, segments bleed into their neighbours.
    """
    out = np.zeros(indptr.shape[0] - 1)
    if indices.shape[0] == 0:
        return out
    nz = np.nonzero(np.diff(indptr))[0]
    out[nz] = np.add.reduceat(w[indices], indptr[nz])
    return out


@dataclass(frozen=True)
class WalkProfile:
    counts: tuple
    mode: str            # "exact" | "scaled"
    scale: float = 1.0   # scaled mode stores w(l) / scale**l

    def __post_init__(self):
        if self.mode not in ("exact", "scaled"):
            raise PreconditionError(f"unknown walk mode {self.mode!r}")

    def __len__(self) -> int:
        return len(self.counts)

    def value(self, ell: int) -> float:
        """w(ell) as a float, undoing the scale."""
        c = self.counts[ell - 1]
        return float(c) if self.mode == "exact" else float(c) * self.scale ** ell

    def to_json(self) -> dict:
        if self.mode == "exact":
            return {"mode": "exact", "counts": [str(c) for c in self.counts]}
        return {"mode": "scaled", "scale": self.scale,
                "counts": list(self.counts)}


def walk_counts(h: Graph, L: int, mode: str = "exact",
                scale: float | None = None) -> WalkProfile:
    """w(1..L) via the per-vertex recurrence w_{l+1}(u) = sum over N(u) of w_l.

    Exact mode uses python big integers (w(l) overflows 64 bits near l~60
    even on paths); scaled mode tracks w(l)/scale**l in floats.
    """
    if L < 1:
        raise PreconditionError("walk horizon must be >= 1")
    if mode == "exact":
        nbrs = [tuple(int(u) for u in h.neighbors(v)) for v in range(h.n)]
        w = [1] * h.n
        out = []
        for _ in range(L):
            w = [sum(w[u] for u in nbrs[v]) for v in range(h.n)]
            out.append(sum(w))
        return WalkProfile(tuple(out), "exact")
    if mode != "scaled":
        raise PreconditionError(f"unknown walk mode {mode!r}")
    if scale is None:
        scale = float(max(int(h.degrees().max()) if h.m else 1, 1))
    if scale <= 0:
        raise PreconditionError("scale must be positive")
    indptr, indices = h.csr()
    w = np.full(h.n, 1.0)
    out = []
    for _ in range(L):
        w = _neighbor_sums(indptr, indices, w) / scale
        out.append(float(w.sum()))
    return WalkProfile(tuple(out), "scaled", scale=float(scale))


def check_w2_w3(h: Graph) -> bool:
    """Exact agreement of w2, w3 with their degree-sum closed forms."""
    prof = walk_counts(h, 3, mode="exact")
    d = [int(x) for x in h.degrees()]
    w2 = sum(x * x for x in d)
    w3 = 2 * sum(d[u] * d[v] for u, v in h.edges())
    return prof.counts[1] == w2 and prof.counts[2] == w3


@dataclass(frozen=True)
class WalkComparison:
    equal: bool
    first_index: int | None   # smallest l with w_l(H1) != w_l(H2)
    sign: int                 # +1 if H1 larger there, -1 if smaller, 0 if equal
    inconclusive_at: int | None  # set when profiles agree through Lmax

    def to_json(self) -> dict:
        return {"equal": self.equal, "first_index": self.first_index,
                "sign": self.sign, "inconclusive_at": self.inconclusive_at}


def walk_compare(h1: Graph, h2: Graph, lmax: int) -> WalkComparison:
    """First differing walk count and its sign, exact arithmetic."""
    if h1.n != h2.n:
        raise PreconditionError("profiles compare only at equal order")
    if lmax < 1:
        raise PreconditionError("comparison horizon must be >= 1")
    p1 = walk_counts(h1, lmax, mode="exact").counts
    p2 = walk_counts(h2, lmax, mode="exact").counts
    for k, (a, b) in enumerate(zip(p1, p2), start=1):
        if a != b:
            return WalkComparison(equal=False, first_index=k,
                                  sign=1 if a > b else -1,
                                  inconclusive_at=None)
    return WalkComparison(equal=True, first_index=None, sign=0,
                          inconclusive_at=lmax)


# ── characteristic equation over walk series ───────────────────────────


def _part_series(h: Graph | None, n_i: int, rho: float, tol_term: float) -> float:
    """1 + n_i/rho + sum_l w_l(H_i)/rho^(l+1), truncated with a certified
    geometric tail bound from w_{l+1} <= max_degree * w_l."""
    base = 1.0 + n_i / rho
    if h is None or h.m == 0:
        return base
    delta = float(h.degrees().max())
    if delta >= rho:
        raise PreconditionError(
            "walk series diverges: rho candidate at or below a part's max degree")
    indptr, indices = h.csr()
    w = np.full(h.n, 1.0)
    acc = 0.0
    ell = 0
    while True:
        w = _neighbor_sums(indptr, indices, w) / rho
        ell += 1
        term = float(w.sum()) / rho   # w_l / rho^(l+1)
        acc += term
        tail = term * (delta / rho) / (1.0 - delta / rho)
        if tail <= tol_term or ell >= 100_000:
            return base + acc + tail / 2.0


def zhang_rho(parts: Sequence[tuple[int, Graph | None]],
              tol: float = 1e-10) -> float:
    """Root of  sum_i 1/(1 + n_i/rho + S_i(rho)) = r - 1  by bisection.

    Each part is (n_i, H_i) with |H_i| <= n_i; H_i of None (or edgeless)
    means the part carries no internal walks.  The left side is increasing
    in rho, so once bracketed, bisection is unconditionally safe.
    """
    if len(parts) < 2:
        raise PreconditionError("need at least two parts")
    if not tol > 0:
        raise PreconditionError("tolerance must be positive")
    norm_parts: list[tuple[int, Graph | None]] = []
    max_delta = 0
    for n_i, h in parts:
        n_i = int(n_i)
        if n_i < 1:
            raise PreconditionError("part sizes must be >= 1")
        if h is not None and h.n > n_i:
            raise PreconditionError("part graph larger than its part")
        if h is not None and h.m > 0:
            max_delta = max(max_delta, int(h.degrees().max()))
        norm_parts.append((n_i, h))
    r = len(norm_parts)
    series_tol = tol * 1e-3

    def g(rho: float) -> float:
        return sum(1.0 / _part_series(h, n_i, rho, series_tol)
                   for n_i, h in norm_parts)

    lo = float(max_delta) + 1.0
    if g(lo) >= r - 1:
        raise PreconditionError(
            "root lies at or below the safe bracket bottom (max degree + 1); "
            "the walk-series characterization does not reach it")
    hi = max(2.0 * lo, 4.0)
    while g(hi) < r - 1:
        hi *= 2.0
        if hi > 1e12:
            raise PreconditionError("no bracket found below rho = 1e12")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if g(mid) < r - 1:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


# ── maximum w3 over realizations of a degree sequence ───────────────────


def _w3_of_adj(deg: Sequence[int], adj: list[set[int]]) -> int:
    return 2 * sum(deg[u] * deg[v] for u in range(len(adj)) for v in adj[u]
                   if u < v)


def _two_swap_climb(deg: Sequence[int], adj: list[set[int]],
                    allow_leaf_pairs: bool) -> None:
    """Exhaustive 2-swap hill climb on w3, in place, deterministic order."""
    n = len(deg)

    def leaf_pair(u: int, v: int) -> bool:
        return not allow_leaf_pairs and deg[u] == 1 and deg[v] == 1

    improved = True
    while improved:
        improved = False
        edges = sorted((u, v) for u in range(n) for v in adj[u] if u < v)
        for i in range(len(edges)):
            a, b = edges[i]
            for j in range(i + 1, len(edges)):
                c, d = edges[j]
                if len({a, b, c, d}) != 4:
                    continue
                # both degree-preserving reconnections of the two edges
                for p, q, r, s in ((a, d, c, b), (a, c, b, d)):
                    if q in adj[p] or s in adj[r]:
                        continue
                    if leaf_pair(p, q) or leaf_pair(r, s):
                        continue
                    gain = 2 * (deg[p] * deg[q] + deg[r] * deg[s]
                                - deg[a] * deg[b] - deg[c] * deg[d])
                    if gain > 0:
                        adj[a].discard(b); adj[b].discard(a)
                        adj[c].discard(d); adj[d].discard(c)
                        adj[p].add(q); adj[q].add(p)
                        adj[r].add(s); adj[s].add(r)
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break


def _strip_leaf_pairs(deg: Sequence[int], adj: list[set[int]]) -> bool:
    """Swap away every edge joining two degree-1 vertices, preserving
    degrees.  Returns False when no eligible partner edge exists."""
    n = len(deg)
    while True:
        bad = next(((u, v) for u in range(n) for v in adj[u]
                    if u < v and deg[u] == 1 and deg[v] == 1), None)
        if bad is None:
            return True
        a, b = bad
        partner = next(((c, d) for c in range(n) for d in sorted(adj[c])
                        if c < d and deg[c] >= 2 and deg[d] >= 2
                        and len({a, b, c, d}) == 4), None)
        if partner is None:
            return False
        c, d = partner
        adj[a].discard(b); adj[b].discard(a)
        adj[c].discard(d); adj[d].discard(c)
        adj[a].add(c); adj[c].add(a)
        adj[b].add(d); adj[d].add(b)


def _graph_from_adj(n: int, adj: list[set[int]]) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def _exhaustive_max_w3(seq: list[int], allow_leaf_pairs: bool,
                       seed_bound: int = -1) -> tuple[int, Graph | None]:
    """Exact maximum when nearly all degrees are 2.

    Any realization decomposes into: a core pattern on the non-2 ('slack')
    vertices whose connections are either direct edges or threads of
    degree-2 vertices, plus pure cycles of degree-2 vertices.  w3 only sees
    the thread lengths through a constant 8 per extra interior vertex, so
    enumerating core patterns is exhaustive over all realizations.

    Accounting folds the 8-per-2-vertex term in up front: a thread i-j nets
    4(d_i + d_j) - 8 over leaving its interior on some other thread, a loop
    at i nets 8 d_i - 8, a direct edge nets 2 d_i d_j.  Branch and bound on
    an optimistic per-capacity-unit rate, with each vertex's capacity
    consumed exactly by the end of its pair row.

    With seed_bound set, only strictly better realizations are reported:
    the return value may then be (seed_bound, None), certifying that no
    realization in the class beats the bound.
    """
    slack = [d for d in seq if d != 2]
    n2 = sum(1 for d in seq if d == 2)
    s = len(slack)
    if s == 0:
        # cycles only; a single cycle maximizes, all edges being 2-2 either way
        if n2 < 3:
            raise PreconditionError("degree sequence is not graphical")
        if 8 * n2 <= seed_bound:
            return seed_bound, None
        return 8 * n2, build_cycle(n2)
    pair_list = [(i, j) for i in range(s) for j in range(i, s)]
    base = 8 * n2
    # optimistic net value per unit of capacity spent at vertex k, once the
    # search has reached row i: rows are consumed in order, so every vertex
    # with capacity left has degree at most slack[i] (slack is descending)
    unit_ub = [[max(d * slack[i], 2 * (d + slack[i]) - 4, 4 * d - 4)
                for d in slack] for i in range(s)]
    best: list = [seed_bound, None]
    rem = list(slack)

    def finish(threads, directs, val):
        # threads: list of (i, j) needing >=1 interior (>=2 when i == j)
        min_interior = sum(2 if i == j else 1 for i, j in threads)
        leftover = n2 - min_interior
        if not threads and 0 < leftover < 3:
            return  # a cycle needs at least 3 vertices
        # build the witness: slack ids 0..s-1, then 2-vertices as needed
        adj: list[set[int]] = [set() for _ in range(len(seq))]
        nxt = s
        for i, j in directs:
            adj[i].add(j); adj[j].add(i)
        extra = leftover if threads else 0
        for t, (i, j) in enumerate(threads):
            k = (2 if i == j else 1) + (extra if t == 0 else 0)
            chain = list(range(nxt, nxt + k))
            nxt += k
            hop = [i] + chain + [j]
            for a, b in zip(hop, hop[1:]):
                adj[a].add(b); adj[b].add(a)
        if not threads and leftover:
            cyc = list(range(nxt, nxt + leftover))
            nxt += leftover
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                adj[a].add(b); adj[b].add(a)
        g = _graph_from_adj(len(seq), adj)
        best[0], best[1] = val, g

    def rec(idx: int, threads, directs, val, interior):
        if interior > n2:
            return
        if idx == len(pair_list):
            if val > best[0]:
                finish(threads, directs, val)
            return
        i, j = pair_list[idx]
        row_ub = unit_ub[i]
        if val + sum(rem[k] * row_ub[k] for k in range(i, s)) <= best[0]:
            return
        if j > i and rem[i] > sum(rem[k] for k in range(j, s)):
            return  # row i's leftover capacity has no partners left
        last_of_row = j == s - 1
        cap_direct = 1 if i != j else 0
        if cap_direct and not allow_leaf_pairs \
                and slack[i] == 1 and slack[j] == 1:
            cap_direct = 0  # no edge joining two pendant vertices
        cap_thread = (min(rem[i], rem[j]) if i != j else rem[i] // 2)
        for direct in range(min(cap_direct, rem[i], rem[j]) + 1):
            for threads_here in range(cap_thread - direct + 1):
                use_i = direct + threads_here if i != j else 2 * threads_here
                use_j = direct + threads_here
                if last_of_row and use_i != rem[i]:
                    continue  # no later pair can consume i's capacity
                if i != j:
                    if rem[i] < use_i or rem[j] < use_j:
                        continue
                    rem[i] -= use_i
                    rem[j] -= use_j
                else:
                    if rem[i] < use_i:
                        continue
                    rem[i] -= use_i
                step = direct * 2 * slack[i] * slack[j]
                if i != j:
                    step += threads_here * (4 * (slack[i] + slack[j]) - 8)
                else:
                    step += threads_here * (8 * slack[i] - 8)
                rec(idx + 1,
                    threads + [(i, j)] * threads_here,
                    directs + [(i, j)] * direct,
                    val + step,
                    interior + threads_here * (2 if i == j else 1))
                if i != j:
                    rem[i] += use_i
                    rem[j] += use_j
                else:
                    rem[i] += use_i

    rec(0, [], [], base, 0)
    if best[1] is None and best[0] == -1:
        raise PreconditionError("no realization in the requested class")
    return best[0], best[1]


_W3_SHAPES = {
    (4, 4, 3, 3, 1, 1): 106,
    (5, 5, 4, 4, 4, 1, 1): 346,
    (5, 5, 5, 3, 3, 3, 1, 1): 340,
    (6, 4, 4, 4, 3, 3, 1, 1): 332,
}


def w3_shape_target(pi: Sequence[int]) -> int | None:
    """Known maximum w3 for the four near-path shapes, or None.

    The shapes are keyed by their non-2 degrees; the target is 8n + const
    where n is the inner order plus 2 (the sequence excludes a dominating
    pair).
    """
    seq = sorted((int(d) for d in pi), reverse=True)
    head = tuple(d for d in seq if d != 2)
    const = _W3_SHAPES.get(head)
    if const is None:
        return None
    return 8 * (len(seq) + 2) + const


def max_w3_degseq(pi: Sequence[int], budget_restarts: int = 200,
                  seed: int = 0, time_budget: float | None = None,
                  allow_leaf_pairs: bool = False) -> tuple[int, Graph]:
    """Best w3 over realizations of the degree sequence found within budget.

    By default the search runs over realizations where no two degree-1
    vertices are adjacent: 1-vertices hang pendant from the rest, as they
    do in the near-path shapes this search is built for (a 1-1 edge is a
    K2 component and trades the two pendant attachments for a constant +2,
    a degeneracy the intended family excludes).  Pass allow_leaf_pairs=True
    to search all realizations.

    The result is a certified lower bound for the class maximum, and its
    exact value whenever at most 8 degrees differ from 2 and those degrees
    total at most 32: the witness realizes pi exactly and its w3 equals the
    returned value.  Strategy: shuffled Havel-Hakimi seeds plus exhaustive
    2-swap hill climbing (the witness on ties of value is the first found,
    under a fixed seed schedule, preferring the lexicographically smaller
    graph6 form); exhaustive core-pattern enumeration when the sequence is
    nearly 2-regular, either outright (order at most 14) or as a
    certification pass seeded with the climb value.
    """
    seq = sorted((int(d) for d in pi), reverse=True)
    if not seq or seq[-1] < 0:
        raise PreconditionError("degrees must be non-negative")
    if not erdos_gallai(seq):
        raise PreconditionError("degree sequence is not graphical")
    n = len(seq)
    slack = sum(1 for d in seq if d != 2)
    if n <= _EXHAUSTIVE_N and slack <= _EXHAUSTIVE_SLACK:
        val, g = _exhaustive_max_w3(seq, allow_leaf_pairs)
        return val, g

    deadline = None if time_budget is None else time.monotonic() + time_budget
    best_val = -1
    best_key: str | None = None
    best_graph: Graph | None = None

    for restart in range(max(1, int(budget_restarts))):
        sub = np.random.default_rng((seed, restart)) if restart else None
        g0 = havel_hakimi(seq, rng=sub)
        adj = [set(int(u) for u in g0.neighbors(v)) for v in range(n)]
        if not allow_leaf_pairs and not _strip_leaf_pairs(seq, adj):
            continue
        _two_swap_climb(seq, adj, allow_leaf_pairs)
        val = _w3_of_adj(seq, adj)
        if val >= best_val:
            g = _graph_from_adj(n, adj)
            key = g.to_graph6()
            if val > best_val or best_key is None or key < best_key:
                best_val, best_key, best_graph = val, key, g
        if deadline is not None and time.monotonic() > deadline:
            break

    certifiable = (slack <= _EXHAUSTIVE_SLACK
                   and sum(d for d in seq if d != 2) <= _EXHAUSTIVE_UNITS
                   and (deadline is None or time.monotonic() < deadline))
    if certifiable:
        val, g = _exhaustive_max_w3(seq, allow_leaf_pairs,
                                    seed_bound=best_val)
        if g is not None and val > best_val:
            return val, g
    if best_graph is None:
        raise PreconditionError("no realization in the requested class")
    return best_val, best_graph
