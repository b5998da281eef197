"""Simple undirected graphs on dense 0-based ids, plus the graph families used
throughout the package and graph6 / JSON interchange.

Two storage backends answer identical queries: python-int bitset rows for
n <= 64, CSR index arrays otherwise.  Instances are immutable once built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import Graph6Error, PreconditionError

BITSET_MAX = 64

_GRAPH6_MAX_SHORT = 62
_GRAPH6_MAX_MEDIUM = 258047
_GRAPH6_MAX_LONG = 68719476735


def _canonical_edge_array(n: int, edges, trusted: bool) -> np.ndarray:
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int32)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise PreconditionError("edge array must have shape (m, 2)")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    if not trusted:
        if lo.min() < 0 or hi.max() >= n:
            raise PreconditionError("edge endpoint out of range")
        if (lo == hi).any():
            raise PreconditionError("loops are not allowed")
    key = lo * np.int64(n) + hi
    order = np.argsort(key, kind="stable")
    key = key[order]
    if not trusted and key.size > 1 and (np.diff(key) == 0).any():
        raise PreconditionError("duplicate edges are not allowed")
    out = np.empty((arr.shape[0], 2), dtype=np.int32)
    out[:, 0] = lo[order]
    out[:, 1] = hi[order]
    return out


_CSR_CHUNK = 1 << 22


def _csr_from_sorted_edges(n: int, edges: np.ndarray):
    """CSR over both edge directions; rows come out sorted ascending.

    Works in fixed-size edge chunks so peak memory stays near the size of the
    output even at ~4e7 edges.
    """
    m = edges.shape[0]
    us = edges[:, 0]
    vs = edges[:, 1]
    deg_in = np.bincount(vs, minlength=n)   # neighbours smaller than the row id
    deg_out = np.bincount(us, minlength=n)  # neighbours larger than the row id
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg_in + deg_out, out=indptr[1:])
    indices = np.empty(2 * m, dtype=np.int32)
    if m:
        # row layout: smaller neighbours first, then larger, both ascending.
        # Larger half: `edges` is already sorted by (u, v), so within each
        # chunk the per-row ranks follow from a running fill counter.
        fill = np.zeros(n, dtype=np.int64)
        base = indptr[:-1] + deg_in
        for lo in range(0, m, _CSR_CHUNK):
            u_c = us[lo:lo + _CSR_CHUNK].astype(np.int64)
            first = np.searchsorted(u_c, u_c)  # u_c is sorted
            pos = base[u_c] + fill[u_c] + (np.arange(u_c.shape[0]) - first)
            indices[pos] = vs[lo:lo + _CSR_CHUNK]
            fill += np.bincount(u_c, minlength=n)
        # smaller half: chunks arrive in ascending u, so a stable per-chunk
        # sort by v keeps every row's entries ascending overall.
        fill[:] = 0
        for lo in range(0, m, _CSR_CHUNK):
            v_c = vs[lo:lo + _CSR_CHUNK]
            order = np.argsort(v_c, kind="stable")
            v_s = v_c[order].astype(np.int64)
            first = np.searchsorted(v_s, v_s)
            pos = indptr[v_s] + fill[v_s] + (np.arange(v_s.shape[0]) - first)
            indices[pos] = us[lo:lo + _CSR_CHUNK][order]
            fill += np.bincount(v_s, minlength=n)
    indices.setflags(write=False)
    indptr.setflags(write=False)
    return indptr, indices


class Graph:
    """Immutable simple graph; vertices are 0..n-1."""

    __slots__ = ("_n", "_edges", "_backend", "_rows", "_indptr", "_indices")

    def __init__(self, n: int, edges=(), *, backend: str | None = None,
                 _trusted: bool = False, _presorted: bool = False):
        if n < 1:
            raise PreconditionError("graph order must be >= 1")
        self._n = int(n)
        if _presorted:
            # builder-supplied int32 array, already u<v and lex-sorted
            self._edges = edges
        else:
            self._edges = _canonical_edge_array(n, edges, _trusted)
        self._edges.setflags(write=False)
        if backend is None:
            backend = "bitset" if n <= BITSET_MAX else "adjlist"
        if backend not in ("bitset", "adjlist"):
            raise PreconditionError(f"unknown backend {backend!r}")
        if backend == "bitset" and n > BITSET_MAX:
            raise PreconditionError("bitset backend is limited to n <= 64")
        self._backend = backend
        self._rows = None
        self._indptr = None
        self._indices = None

    # ── construction helpers ────────────────────────────────────────────

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   backend: str | None = None) -> "Graph":
        return cls(n, edges, backend=backend)

    # ── basic accessors ─────────────────────────────────────────────────

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._edges.shape[0]

    @property
    def backend(self) -> str:
        return self._backend

    def edge_array(self) -> np.ndarray:
        return self._edges

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self._edges:
            yield (int(u), int(v))

    def _bitset_rows(self):
        if self._rows is None:
            rows = [0] * self._n
            for u, v in self._edges:
                rows[u] |= 1 << int(v)
                rows[v] |= 1 << int(u)
            self._rows = rows
        return self._rows

    def csr(self):
        if self._indptr is None:
            self._indptr, self._indices = _csr_from_sorted_edges(self._n, self._edges)
        return self._indptr, self._indices

    def row_bits(self, v: int) -> int:
        return self._bitset_rows()[v] if self._n <= BITSET_MAX else sum(
            1 << int(u) for u in self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        if self._backend == "bitset":
            return bool(self._bitset_rows()[u] >> v & 1)
        indptr, indices = self.csr()
        row = indices[indptr[u]:indptr[u + 1]]
        i = np.searchsorted(row, v)
        return bool(i < row.shape[0] and row[i] == v)

    def neighbors(self, v: int) -> np.ndarray:
        if self._backend == "bitset":
            bits = self._bitset_rows()[v]
            out = []
            while bits:
                low = bits & -bits
                out.append(low.bit_length() - 1)
                bits ^= low
            return np.asarray(out, dtype=np.int64)
        indptr, indices = self.csr()
        return indices[indptr[v]:indptr[v + 1]]

    def degree(self, v: int) -> int:
        if self._backend == "bitset":
            return int(self._bitset_rows()[v]).bit_count()
        indptr, _ = self.csr()
        return int(indptr[v + 1] - indptr[v])

    def degrees(self) -> np.ndarray:
        if self._backend == "bitset":
            return np.asarray([int(r).bit_count() for r in self._bitset_rows()],
                              dtype=np.int64)
        indptr, _ = self.csr()
        return np.diff(indptr)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((int(d) for d in self.degrees()), reverse=True))

    # ── structure ───────────────────────────────────────────────────────

    def components(self) -> list[list[int]]:
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.neighbors(v):
                    u = int(u)
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def component_labels(self) -> tuple[int, np.ndarray]:
        """(count, labels) — scipy-backed so it stays cheap at 1e7 vertices."""
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import connected_components

        indptr, indices = self.csr()
        if indptr[-1] < np.iinfo(np.int32).max:
            indptr = indptr.astype(np.int32)  # match index dtypes, no upcast
        mat = csr_matrix((np.ones(indices.shape[0], dtype=np.int8), indices, indptr),
                         shape=(self._n, self._n))
        count, labels = connected_components(mat, directed=False)
        return int(count), labels

    def is_connected(self) -> bool:
        if self._n <= 2048:
            return len(self.components()) == 1
        return self.component_labels()[0] == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph relabelled by ascending old id."""
        vs = sorted(set(int(v) for v in vertices))
        if not vs:
            raise PreconditionError("induced subgraph needs at least one vertex")
        if vs[0] < 0 or vs[-1] >= self._n:
            raise PreconditionError("vertex out of range")
        remap = {v: i for i, v in enumerate(vs)}
        keep = [(remap[u], remap[v]) for u, v in self.edges()
                if u in remap and v in remap]
        return Graph(len(vs), keep, _trusted=True)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self._n)):
            raise PreconditionError("relabel needs a permutation of 0..n-1")
        p = np.asarray(perm, dtype=np.int64)
        e = self._edges
        return Graph(self._n, np.stack([p[e[:, 0]], p[e[:, 1]]], axis=1),
                     _trusted=True)

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """A new graph with extra edges (duplicates rejected)."""
        extra = list(extra)
        if not extra:
            return self
        combined = np.concatenate([self._edges,
                                   np.asarray(extra, dtype=np.int64)], axis=0)
        return Graph(self._n, combined)

    # ── identity ────────────────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self._n == other._n
                and self._edges.shape == other._edges.shape
                and bool((self._edges == other._edges).all()))

    def __hash__(self) -> int:
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    # ── interchange ─────────────────────────────────────────────────────

    def to_graph6(self) -> str:
        return to_graph6(self)

    def to_adjacency_json(self) -> dict:
        return {"n": self._n, "edges": [[int(u), int(v)] for u, v in self._edges]}


def from_adjacency_json(payload: dict) -> Graph:
    try:
        n = int(payload["n"])
        edges = payload["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"bad adjacency payload: {exc}") from exc
    return Graph(n, edges)


# ── graph6 ──────────────────────────────────────────────────────────────


def _g6_header(n: int) -> str:
    if n <= _GRAPH6_MAX_SHORT:
        return chr(63 + n)
    if n <= _GRAPH6_MAX_MEDIUM:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= _GRAPH6_MAX_LONG:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise PreconditionError("graph6 caps the order at 68719476735")


def to_graph6(g: Graph) -> str:
    n = g.n
    header = _g6_header(n)
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return header
    bits = np.zeros(-(-nbits // 6) * 6, dtype=np.uint8)
    e = g.edge_array().astype(np.int64)
    if e.size:
        # column-major upper triangle: bit index of (u,v), u<v, is C(v,2)+u
        idx = e[:, 1] * (e[:, 1] - 1) // 2 + e[:, 0]
        bits[idx] = 1
    groups = bits.reshape(-1, 6)
    vals = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
    return header + "".join(chr(63 + int(v)) for v in vals)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error("character out of graph6 range", offset=i)
    if s.startswith("~~"):
        if len(s) < 8:
            raise Graph6Error("truncated order field", offset=len(s))
        n = 0
        for ch in s[2:8]:
            n = n << 6 | (ord(ch) - 63)
        body, body_off = s[8:], 8
    elif s.startswith("~"):
        if len(s) < 4:
            raise Graph6Error("truncated order field", offset=len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body, body_off = s[4:], 4
    else:
        n = ord(s[0]) - 63
        body, body_off = s[1:], 1
    if n < 1:
        raise Graph6Error("graph6 order must be >= 1", offset=0)
    nbits = n * (n - 1) // 2
    expect = -(-nbits // 6)
    if len(body) != expect:
        raise Graph6Error(f"body length {len(body)}, expected {expect}",
                          offset=body_off + min(len(body), expect))
    if expect == 0:
        return Graph(n)
    vals = np.frombuffer(body.encode("ascii"), dtype=np.uint8).astype(np.int64) - 63
    bits = (vals[:, None] >> np.array([5, 4, 3, 2, 1, 0])) & 1
    flat = bits.reshape(-1)
    if flat[nbits:].any():
        bad = nbits // 6
        raise Graph6Error("nonzero padding bits", offset=body_off + bad)
    idx = np.nonzero(flat[:nbits])[0]
    v = np.floor((1 + np.sqrt(1 + 8 * idx.astype(np.float64))) / 2).astype(np.int64)
    # guard the float inverse of C(v,2) near cell boundaries
    v -= (v * (v - 1) // 2 > idx)
    v += ((v + 1) * v // 2 <= idx)
    u = idx - v * (v - 1) // 2
    return Graph(n, np.stack([u, v], axis=1), _trusted=True)


# ── families ────────────────────────────────────────────────────────────


def empty_graph(n: int) -> Graph:
    return Graph(n)


def build_path(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    i = np.arange(n - 1, dtype=np.int32)
    return Graph(n, np.stack([i, i + 1], axis=1), _presorted=True)


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    i = np.arange(n, dtype=np.int64)
    return Graph(n, np.stack([i, (i + 1) % n], axis=1))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    u, v = np.triu_indices(n, k=1)
    return Graph(n, np.stack([u, v], axis=1), _trusted=True)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise PreconditionError("complete bipartite parts must be >= 1")
    u = np.repeat(np.arange(a, dtype=np.int64), b)
    v = np.tile(np.arange(a, a + b, dtype=np.int64), a)
    return Graph(a + b, np.stack([u, v], axis=1), _trusted=True)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise PreconditionError("part sizes must be >= 1")
    bounds = np.cumsum([0] + list(sizes))
    n = int(bounds[-1])
    part = np.empty(n, dtype=np.int64)
    for i, s in enumerate(sizes):
        part[bounds[i]:bounds[i + 1]] = i
    u, v = np.triu_indices(n, k=1)
    keep = part[u] != part[v]
    return Graph(n, np.stack([u[keep], v[keep]], axis=1), _trusted=True)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    e1 = g1.edge_array().astype(np.int64)
    e2 = g2.edge_array().astype(np.int64) + g1.n
    return Graph(g1.n + g2.n, np.concatenate([e1, e2], axis=0), _trusted=True)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge; g2's ids shift by g1.n."""
    n1, n2 = g1.n, g2.n
    cross_u = np.repeat(np.arange(n1, dtype=np.int64), n2)
    cross_v = np.tile(np.arange(n1, n1 + n2, dtype=np.int64), n1)
    e1 = g1.edge_array().astype(np.int64)
    e2 = g2.edge_array().astype(np.int64) + n1
    edges = np.concatenate([e1, e2, np.stack([cross_u, cross_v], axis=1)], axis=0)
    return Graph(n1 + n2, edges, _trusted=True)


def k2_join(inner: Graph) -> Graph:
    """K2 joined to `inner`; ids 0 and 1 are the dominating pair.

    Emits the edge array pre-sorted so the builder never re-sorts it — this
    is the construction path that must scale to n ~ 1.3e7.
    """
    n = inner.n + 2
    i = np.arange(2, n, dtype=np.int32)
    blocks = [np.array([[0, 1]], dtype=np.int32),
              np.stack([np.zeros(inner.n, dtype=np.int32), i], axis=1),
              np.stack([np.ones(inner.n, dtype=np.int32), i], axis=1),
              inner.edge_array() + np.int32(2)]
    return Graph(n, np.concatenate(blocks, axis=0), _presorted=True)


def attach_paths(h0: Graph, u: int, v: int, a: int, b: int) -> Graph:
    """H0 with pendant paths of lengths a and b hanging at u and v."""
    if u == v:
        raise PreconditionError("attachment vertices must be distinct")
    if not (0 <= u < h0.n and 0 <= v < h0.n):
        raise PreconditionError("attachment vertex out of range")
    if a < 0 or b < 0:
        raise PreconditionError("path lengths must be >= 0")
    n = h0.n + a + b
    edges = [tuple(e) for e in h0.edges()]
    prev = u
    for i in range(a):
        nxt = h0.n + i
        edges.append((prev, nxt))
        prev = nxt
    prev = v
    for i in range(b):
        nxt = h0.n + a + i
        edges.append((prev, nxt))
        prev = nxt
    return Graph(n, edges)


def kr_pendant(r: int, n: int) -> tuple[Graph, tuple[int, ...]]:
    """K_r with two pendant paths of lengths floor/ceil((n-r)/2) at vertices 0, 1.

    Returns the graph and a spanning-path labelling (tip of the short side,
    through the clique, out the long side).
    """
    if r < 3:
        raise PreconditionError("clique order must be >= 3")
    if n < r:
        raise PreconditionError("total order must be >= the clique order")
    a = (n - r) // 2
    b = n - r - a
    g = attach_paths(complete_graph(r), 0, 1, a, b)
    side_a = list(range(r + a - 1, r - 1, -1))          # tip .. attach side of 0
    side_b = list(range(r + a, n))                       # attach side of 1 .. tip
    path = tuple(side_a + [0] + list(range(2, r)) + [1] + side_b)
    return g, path


# ── spanning-path witnesses ─────────────────────────────────────────────


@dataclass(frozen=True)
class SpanningPathWitness:
    """A dominating pair plus an order of the remaining vertices forming a path."""

    dominating_pair: tuple[int, int]
    path_order: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        p, q = (int(x) for x in self.dominating_pair)
        rest = np.asarray(self.path_order, dtype=np.int64)
        cover = np.concatenate([np.array([p, q], dtype=np.int64), rest])
        cover.sort()
        if cover.shape[0] != g.n or not np.array_equal(
                cover, np.arange(g.n, dtype=np.int64)):
            raise PreconditionError("witness does not cover the vertex set exactly")
        if not g.has_edge(p, q):
            raise PreconditionError("dominating pair must be adjacent")
        for w in (p, q):
            if g.degree(w) != g.n - 1:
                raise PreconditionError(f"vertex {w} does not dominate the graph")
        if rest.shape[0] < 2:
            return
        # bulk membership against the lex-sorted edge array, chunked so the
        # key/position temporaries stay small at ten-million-vertex orders
        ea = g.edge_array()
        keys = ea[:, 0].astype(np.int64) * np.int64(g.n) + ea[:, 1]
        step = 1 << 21
        for s in range(0, rest.shape[0] - 1, step):
            seg = rest[s:s + step + 1]
            lo = np.minimum(seg[:-1], seg[1:])
            hi = np.maximum(seg[:-1], seg[1:])
            want = lo * np.int64(g.n) + hi
            pos = np.searchsorted(keys, want)
            ok = (pos < keys.shape[0]) & (
                keys[np.minimum(pos, keys.shape[0] - 1)] == want)
            if not bool(ok.all()):
                k = int(np.argmin(ok)) + s
                raise PreconditionError(
                    f"path order breaks at {int(rest[k])}-{int(rest[k + 1])}: "
                    "edge missing")

    def to_json(self) -> dict:
        return {"dominating_pair": [int(x) for x in self.dominating_pair],
                "path_order": [int(x) for x in self.path_order]}


def witness_from_json(payload: dict) -> SpanningPathWitness:
    return SpanningPathWitness(tuple(payload["dominating_pair"]),
                               tuple(payload["path_order"]))


# ── degree sequences ────────────────────────────────────────────────────


def erdos_gallai(seq: Sequence[int]) -> bool:
    """Graphicality of a non-increasing degree sequence."""
    d = sorted((int(x) for x in seq), reverse=True)
    if not d:
        return True
    if d[-1] < 0 or sum(d) % 2:
        return False
    n = len(d)
    pre = np.cumsum(d)
    for k in range(1, n + 1):
        rhs = k * (k - 1) + sum(min(dx, k) for dx in d[k:])
        if pre[k - 1] > rhs:
            return False
    return True


def havel_hakimi(seq: Sequence[int], rng: np.random.Generator | None = None) -> Graph:
    """One realization of a graphical sequence (order shuffled under `rng`)."""
    if not erdos_gallai(seq):
        raise PreconditionError("degree sequence is not graphical")
    n = len(seq)
    remaining = [[int(d), i] for i, d in enumerate(seq)]
    edges: list[tuple[int, int]] = []
    while True:
        if rng is not None:
            order = rng.permutation(len(remaining))
            remaining = [remaining[i] for i in order]
        remaining.sort(key=lambda t: -t[0])
        if not remaining or remaining[0][0] == 0:
            break
        d, v = remaining[0]
        if d > len(remaining) - 1:
            raise PreconditionError("degree sequence is not graphical")
        for slot in remaining[1:d + 1]:
            slot[0] -= 1
            if slot[0] < 0:
                raise PreconditionError("degree sequence is not graphical")
            edges.append((v, slot[1]))
        remaining[0][0] = 0
    return Graph(n, edges)


# ── canonical forms ─────────────────────────────────────────────────────


def _refine(g: Graph, colors: list[int]) -> list[int]:
    n = g.n
    nbrs = [tuple(int(u) for u in g.neighbors(v)) for v in range(n)]
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
               for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return new
        colors = new


def _cert_for_order(g: Graph, order: list[int]) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    n = g.n
    bits = bytearray((n * (n - 1) // 2 + 7) // 8)
    for u, v in g.edges():
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        k = j * (j - 1) // 2 + i
        bits[k >> 3] |= 1 << (k & 7)
    return bytes(bits)


def canonical_labeling(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """(canonical certificate, vertex order achieving it).

    Colour refinement with individualization; exact, intended for small or
    well-refined graphs (everything in this package is one or the other).
    """
    best: list = [None, None]

    def rec(colors: list[int]) -> None:
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(g.n), key=colors.__getitem__)
            cert = _cert_for_order(g, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        for v in target:
            nxt = [2 * c for c in colors]
            nxt[v] += 1
            rec(nxt)

    rec([0] * g.n)
    return best[0], tuple(best[1])


def canonical_graph6(g: Graph) -> str:
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return to_graph6(g.relabel(perm))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_labeling(g1)[0] == canonical_labeling(g2)[0]
