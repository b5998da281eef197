"""Embedding schemes (rotation + signature), face tracing, Euler-genus
certification, planar splicing, and brute-force minimum Euler genus for
tiny graphs.

A scheme assigns every vertex a cyclic order of its neighbours and every
edge a sign; faces are orbits of the standard next-corner rule, with the
traversal direction flipping across -1 edges.  Euler genus comes out of
n - e + f = 2 - genus, and orientability is signature balance (every cycle
has positive sign product), checked by spanning-tree sign propagation.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import PreconditionError, SpliceIntegrityError
from .graphs import Graph


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EmbeddingScheme:
    """Rotation system with edge signs describing a cellular embedding."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    signature: Mapping[tuple[int, int], int]

    def validate(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise PreconditionError("rotation list does not match order")
        for v in range(g.n):
            neigh = sorted(int(u) for u in g.neighbors(v))
            if sorted(self.rotation[v]) != neigh:
                raise PreconditionError(
                    f"rotation at vertex {v} is not a cyclic order of its "
                    "neighbours")
        edges = set(map(tuple, g.edge_array().tolist()))
        if set(self.signature.keys()) != edges:
            raise PreconditionError("signature keys do not match edge set")
        for key, val in self.signature.items():
            if val not in (-1, 1):
                raise PreconditionError(f"signature of {key} must be +-1")
        if g.n > 0 and not g.is_connected():
            raise PreconditionError(
                "scheme needs a connected graph (cellular embeddings only)")

    def sign(self, u: int, v: int) -> int:
        return self.signature[_edge_key(u, v)]

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "rotation": [list(r) for r in self.rotation],
            "signature": {f"{u}-{v}": s
                          for (u, v), s in sorted(self.signature.items())},
        }

    @staticmethod
    def from_json(payload: dict | str) -> "EmbeddingScheme":
        if isinstance(payload, str):
            payload = json.loads(payload)
        n = int(payload["n"])
        rotation = tuple(tuple(int(u) for u in row)
                         for row in payload["rotation"])
        if len(rotation) != n:
            raise PreconditionError("rotation list does not match order")
        edges = set()
        for v, row in enumerate(rotation):
            for u in row:
                if not 0 <= u < n or u == v:
                    raise PreconditionError("rotation entry out of range")
                edges.add(_edge_key(u, v))
        signature = {}
        for key, val in payload["signature"].items():
            a, b = key.split("-")
            signature[_edge_key(int(a), int(b))] = int(val)
        if set(signature.keys()) != edges:
            raise PreconditionError("signature keys do not match rotations")
        scheme = EmbeddingScheme(Graph(n, sorted(edges)), rotation, signature)
        scheme.validate()
        return scheme


def scheme_with_default_signs(g: Graph,
                              rotation: Sequence[Sequence[int]],
                              signature: Mapping[tuple[int, int], int]
                              | None = None) -> EmbeddingScheme:
    """Attach an all-+1 signature unless one is supplied."""
    if signature is None:
        signature = {tuple(e): 1 for e in g.edge_array().tolist()}
    scheme = EmbeddingScheme(g, tuple(tuple(r) for r in rotation),
                             dict(signature))
    scheme.validate()
    return scheme


@dataclass(frozen=True)
class FaceTrace:
    faces: tuple[tuple[int, ...], ...]
    f: int
    genus: int
    orientable: bool

    def to_json(self) -> dict:
        return {"f": self.f, "genus": self.genus,
                "orientable": self.orientable,
                "faces": [list(w) for w in self.faces]}


def _rotation_index(rotation: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    return [{u: k for k, u in enumerate(row)} for row in rotation]


def trace_faces(scheme: EmbeddingScheme) -> FaceTrace:
    """Face walks, face count, Euler genus, and orientability of a scheme.

    The walker carries (directed edge, side): crossing a -1 edge flips the
    side, and the side decides whether the rotation at the head is read
    forward or backward.  Orbits come in mirror pairs; one representative
    per pair is a face, so across all faces every edge is traversed
    exactly twice.
    """
    scheme.validate()
    g = scheme.graph
    n, e = g.n, g.m
    if n == 0:
        raise PreconditionError("empty scheme has no faces")
    rotation = scheme.rotation
    index = _rotation_index(rotation)
    sign = scheme.sign

    if e == 0:
        # single vertex on the sphere
        return FaceTrace(((),), 1, 0, True)

    def step(u: int, v: int, s: int) -> tuple[int, int, int]:
        s2 = s * sign(u, v)
        row = rotation[v]
        k = index[v][u]
        w = row[(k + 1) % len(row)] if s2 == 1 else row[(k - 1) % len(row)]
        return v, w, s2

    states = [(u, v, s)
              for u in range(n) for v in rotation[u] for s in (1, -1)]
    seen: dict[tuple[int, int, int], int] = {}
    orbits: list[list[tuple[int, int, int]]] = []
    for start in states:
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen[cur] = len(orbits)
            orbit.append(cur)
            cur = step(*cur)
        if cur != start:
            raise PreconditionError("rotation system is not a permutation")
        orbits.append(orbit)

    def mirror(state: tuple[int, int, int]) -> tuple[int, int, int]:
        u, v, s = state
        return (v, u, -s * sign(u, v))

    paired: dict[int, int] = {}
    for idx, orbit in enumerate(orbits):
        j = seen[mirror(orbit[0])]
        if j == idx:
            raise PreconditionError("self-mirrored face orbit; scheme broken")
        paired[idx] = j
    reps = []
    for idx, orbit in enumerate(orbits):
        if idx < paired[idx]:
            a, b = orbit, orbits[paired[idx]]
            reps.append(min(a, b, key=lambda o: min(o)))
    walked = Counter(_edge_key(u, v) for orbit in reps for (u, v, _s) in orbit)
    if len(walked) != e or any(c != 2 for c in walked.values()):
        raise PreconditionError("face walks do not traverse each edge "
                                "exactly twice; scheme broken")
    faces = tuple(tuple(u for (u, _v, _s) in orbit) for orbit in reps)
    f = len(faces)
    genus = 2 - n + e - f
    # balance: propagate vertex signs over a spanning tree, then check
    # every co-tree edge agrees
    sigma = [0] * n
    sigma[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in rotation[u]:
            if sigma[v] == 0:
                sigma[v] = sigma[u] * sign(u, v)
                stack.append(v)
    orientable = all(sign(u, v) == sigma[u] * sigma[v]
                     for u, v in g.edge_array().tolist())
    return FaceTrace(faces, f, genus, orientable)


# ── planar scheme for a K2 join of a path ───────────────────────────────


def planar_k2_path_scheme(m: int) -> EmbeddingScheme:
    """Sphere triangulation scheme for the join of K2 with a path P_m.

    Layout: dominating pair 0 (top) and 1 (bottom), path 2..m+1 left to
    right; faces are the left cap (0,1,2), the strips above and below the
    path, and the right cap (0,1,m+1).
    """
    if m < 1:
        raise PreconditionError("path must have at least one vertex")
    from .graphs import build_path, k2_join

    g = k2_join(build_path(m))
    rot: list[list[int]] = [[] for _ in range(m + 2)]
    # counterclockwise orders read off the drawing
    rot[0] = list(range(2, m + 2)) + [1]
    rot[1] = list(range(m + 1, 1, -1)) + [0]
    if m == 1:
        rot[2] = [0, 1]
    else:
        rot[2] = [3, 0, 1]
        for i in range(3, m + 1):
            rot[i] = [i + 1, 0, i - 1, 1]
        rot[m + 1] = [0, m, 1]
    return scheme_with_default_signs(g, rot)


# ── splicing a planar patch into a triangular face ──────────────────────


def _find_triangle_face(trace: FaceTrace, x: int, y: int,
                        z: int) -> tuple[int, ...] | None:
    want = {x, y, z}
    for walk in trace.faces:
        if len(walk) == 3 and set(walk) == want:
            return walk
    return None


def switch_scheme(scheme: EmbeddingScheme,
                  vertices: set[int] | Sequence[int]) -> EmbeddingScheme:
    """Full switching at `vertices`: reverse those rotations and negate
    the signs of edges with exactly one end inside.  The embedding — its
    faces, genus, and orientability — is unchanged."""
    flips = set(int(v) for v in vertices)
    rot = tuple(tuple(reversed(r)) if v in flips else tuple(r)
                for v, r in enumerate(scheme.rotation))
    sig = {e: (-s if (e[0] in flips) != (e[1] in flips) else s)
           for e, s in scheme.signature.items()}
    return EmbeddingScheme(scheme.graph, rot, sig)


def _normalize_triangle(scheme: EmbeddingScheme,
                        tri: tuple[int, int, int]) -> EmbeddingScheme:
    """Switch so all three edges of the (traced) triangle carry +1; the
    sign product around a traced face is +1, so two switches suffice."""
    x, y, z = tri
    flips = set()
    if scheme.sign(x, y) == -1:
        flips.add(y)
    if scheme.sign(x, z) == -1:
        flips.add(z)
    out = switch_scheme(scheme, flips) if flips else scheme
    if out.sign(y, z) != 1:
        raise SpliceIntegrityError("face triangle has negative sign product")
    return out


def _walk_directions(rotation: Sequence[Sequence[int]],
                     tri: tuple[int, int, int]) -> list[tuple[int, ...]]:
    """Cyclic directions in which the sign-normalized triangle is walked
    on its +1 side: at every corner, the rotation successor of the walk's
    previous vertex is its next vertex.  Usually one direction; two when
    every corner has degree 2."""
    out = []
    for cand in (tri, (tri[0], tri[2], tri[1])):
        ok = True
        for i, v in enumerate(cand):
            prev, nxt = cand[i - 1], cand[(i + 1) % 3]
            row = rotation[v]
            if row[(row.index(prev) + 1) % len(row)] != nxt:
                ok = False
                break
        if ok:
            out.append(cand)
    return out


def _fan_between(row: Sequence[int], prev: int, nxt: int) -> list[int]:
    """Entries of the cyclic row strictly after prev and before nxt,
    reading forward."""
    fan = []
    pos = (row.index(prev) + 1) % len(row)
    while row[pos] != nxt:
        fan.append(row[pos])
        pos = (pos + 1) % len(row)
    return fan


def splice_into_face(host: EmbeddingScheme, face: tuple[int, int, int],
                     inner: EmbeddingScheme,
                     outer: tuple[int, int, int]) -> EmbeddingScheme:
    """Glue a genus-0 patch into a triangular face of the host.

    The patch's designated outer triangle is identified with the host face
    (x with x', y with y', z with z'); remaining patch vertices get fresh
    ids.  The merged scheme is re-traced and must keep the host's Euler
    genus, else the splice is rejected.
    """
    x, y, z = face
    host_trace = trace_faces(host)
    if _find_triangle_face(host_trace, x, y, z) is None:
        raise PreconditionError("host face is not a traced 3-face")
    inner_trace = trace_faces(inner)
    if inner_trace.genus != 0:
        raise PreconditionError("patch must be planar (genus 0)")
    xp, yp, zp = outer
    if _find_triangle_face(inner_trace, xp, yp, zp) is None:
        raise PreconditionError("patch outer face is not a traced 3-face")

    host_n = _normalize_triangle(host, (x, y, z))
    inner_n = _normalize_triangle(inner, (xp, yp, zp))
    for hdir in _walk_directions(host_n.rotation, (x, y, z)):
        merged = _splice_once(host_n, (x, y, z), inner_n, (xp, yp, zp), hdir)
        if merged is None:
            continue
        trace = trace_faces(merged)
        if trace.genus == host_trace.genus \
                and trace.f == host_trace.f + inner_trace.f - 2:
            return merged
    raise SpliceIntegrityError(
        "splice changed the Euler genus in both orientations")


def _succ_map(walk: tuple[int, ...]) -> dict[int, int]:
    return {walk[i]: walk[(i + 1) % 3] for i in range(3)}


def _splice_once(host: EmbeddingScheme, face, inner: EmbeddingScheme,
                 outer, hdir: tuple[int, ...]) -> EmbeddingScheme | None:
    x, y, z = face
    xp, yp, zp = outer
    gi = inner.graph
    ident = {xp: x, yp: y, zp: z}
    to_patch = {h: p for p, h in ident.items()}

    # the patch must walk its outer face opposite to the host's walk;
    # reflect it (reverse every rotation) if it runs the same way
    needed = _succ_map(tuple(to_patch[v] for v in reversed(hdir)))
    inner_rot = [list(r) for r in inner.rotation]
    pdirs = [_succ_map(w) for w in _walk_directions(inner_rot, (xp, yp, zp))]
    if needed not in pdirs:
        inner_rot = [list(reversed(r)) for r in inner_rot]
        pdirs = [_succ_map(w)
                 for w in _walk_directions(inner_rot, (xp, yp, zp))]
        if needed not in pdirs:
            return None

    fresh = {}
    nxt = host.graph.n
    for v in range(gi.n):
        if v not in ident:
            fresh[v] = nxt
            nxt += 1
    relab = {**ident, **fresh}

    host_edges = set(map(tuple, host.graph.edge_array().tolist()))
    new_edges = []
    signature = dict(host.signature)
    for u, v in gi.edge_array().tolist():
        a, b = relab[int(u)], relab[int(v)]
        key = _edge_key(a, b)
        if key in host_edges:
            continue  # shared triangle edge, not duplicated
        new_edges.append(key)
        signature[key] = inner.sign(int(u), int(v))

    rotation = [list(r) for r in host.rotation]
    hsucc = _succ_map(hdir)
    for i, v in enumerate(hdir):
        prev, nxt_v = hdir[i - 1], hsucc[v]
        # interior fan of the patch corner, read forward from the
        # identified previous vertex
        fan = _fan_between(inner_rot[to_patch[v]],
                           to_patch[prev], to_patch[nxt_v])
        chain = [relab[w] for w in fan]
        row = rotation[v]
        k = row.index(prev)
        if row[(k + 1) % len(row)] != nxt_v:
            return None
        rotation[v] = row[:k + 1] + chain + row[k + 1:]
    for v in range(gi.n):
        if v in ident:
            continue
        rotation.append([relab[w] for w in inner_rot[v]])

    n_new = host.graph.n + len(fresh)
    g_new = Graph(n_new, sorted(host_edges | set(new_edges)))
    try:
        return scheme_with_default_signs(g_new, rotation, signature)
    except PreconditionError:
        return None


# ── brute-force minimum Euler genus ─────────────────────────────────────


@dataclass(frozen=True)
class GenusResult:
    genus: int
    scheme: EmbeddingScheme
    exhaustive: bool

    def to_json(self) -> dict:
        return {"genus": self.genus, "exhaustive": self.exhaustive,
                "scheme": self.scheme.to_json()}


def genus_floor(n: int, e: int) -> int:
    """Edge-count lower bound on Euler genus (girth-3 form)."""
    if n < 3:
        return 0
    return max(0, (e - 3 * (n - 2) + 2) // 3)


def _rotation_space(g: Graph) -> int:
    total = 1
    for v in range(g.n):
        d = g.degree(v)
        for k in range(2, d):
            total *= k
            if total > 1 << 62:
                return total
    return total


def min_euler_genus(g: Graph, orientable_only: bool = False,
                    limit_schemes: int = 2_000_000,
                    seed: int = 0) -> GenusResult:
    """Smallest Euler genus over enumerated schemes of a tiny graph.

    Exhaustive (rotations x co-tree signatures, tree edges pinned +1 by
    switching) when the space fits the cap; otherwise seeded random
    sampling, flagged non-exhaustive.  Orientable-first ordering; early
    exit when the edge-count floor is reached.
    """
    if g.n == 0:
        raise PreconditionError("genus of the empty graph is undefined")
    if not g.is_connected():
        raise PreconditionError("genus search needs a connected graph")
    if g.m == 0:
        scheme = scheme_with_default_signs(g, [[]] * g.n, {})
        return GenusResult(0, scheme, True)

    floor = genus_floor(g.n, g.m)
    edges = [tuple(e) for e in g.edge_array().tolist()]
    # spanning tree via BFS to pin signs
    tree = set()
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for v in g.neighbors(u):
            v = int(v)
            if v not in seen:
                seen.add(v)
                tree.add(_edge_key(u, v))
                queue.append(v)
    cotree = [e for e in edges if e not in tree]
    n_sig = 0 if orientable_only else len(cotree)

    rot_space = _rotation_space(g)
    sig_space = 1 << n_sig
    exhaustive = rot_space * sig_space <= limit_schemes

    best: list = [None, None]

    def consider(rotation, signature) -> bool:
        scheme = EmbeddingScheme(g, rotation, signature)
        try:
            trace = trace_faces(scheme)
        except PreconditionError:
            return False
        if best[0] is None or trace.genus < best[0]:
            best[0], best[1] = trace.genus, scheme
        return best[0] <= floor

    def all_rotations():
        pools = []
        for v in range(g.n):
            neigh = sorted(int(u) for u in g.neighbors(v))
            if len(neigh) <= 2:
                pools.append([tuple(neigh)])
            else:
                head, rest = neigh[0], neigh[1:]
                pools.append([(head,) + p
                              for p in itertools.permutations(rest)])
        yield from itertools.product(*pools)

    def signature_for(mask: int):
        sig = {e: 1 for e in edges}
        for k, e in enumerate(cotree):
            if mask >> k & 1:
                sig[e] = -1
        return sig

    if exhaustive:
        for mask in range(sig_space):
            sig = signature_for(mask)
            for rotation in all_rotations():
                if consider(rotation, sig):
                    return GenusResult(best[0], best[1], True)
        return GenusResult(best[0], best[1], True)

    rng = np.random.default_rng(seed)
    tries = max(1, limit_schemes // max(1, 4 * g.m))
    for _ in range(tries):
        rotation = []
        for v in range(g.n):
            neigh = [int(u) for u in g.neighbors(v)]
            rng.shuffle(neigh)
            rotation.append(tuple(neigh))
        mask = 0 if orientable_only or rng.random() < 0.5 \
            else int(rng.integers(0, sig_space))
        if consider(tuple(rotation), signature_for(mask)):
            break
    return GenusResult(best[0], best[1], False)


def load_certificate(name: str) -> EmbeddingScheme:
    """Load a shipped embedding certificate ("k6-projective", "k7-torus").

    Validity is established by tracing, never assumed from the file.
    """
    from importlib import resources

    path = resources.files("spexsurf").joinpath("data").joinpath(
        f"{name}.json")
    try:
        payload = path.read_text()
    except FileNotFoundError:
        raise PreconditionError(f"unknown certificate {name!r}") from None
    return EmbeddingScheme.from_json(payload)


# ── triangulation face-count report ─────────────────────────────────────


@dataclass(frozen=True)
class TriangulationReport:
    genus: int
    avoiding_faces: int
    avoiding_expected: int
    private_faces: dict
    wheel_ok: bool

    def to_json(self) -> dict:
        return {"genus": self.genus,
                "avoiding_faces": self.avoiding_faces,
                "avoiding_expected": self.avoiding_expected,
                "private_faces": {str(k): v
                                  for k, v in sorted(self.private_faces.items())},
                "wheel_ok": self.wheel_ok}


def verify_triangulation_facecounts(scheme: EmbeddingScheme, u1: int,
                                    u2: int) -> TriangulationReport:
    """Face bookkeeping for a triangulation with a dominating pair.

    Reports how many faces avoid both dominating vertices (expected twice
    the Euler genus), the per-vertex counts of faces avoiding the pair,
    and whether the faces around every vertex close into a single wheel
    (each consecutive rotation pair adjacent).
    """
    trace = trace_faces(scheme)
    if any(len(w) != 3 for w in trace.faces):
        raise PreconditionError("scheme is not a triangulation")
    g = scheme.graph
    for v in range(g.n):
        if v not in (u1, u2) and (not g.has_edge(u1, v)
                                  or not g.has_edge(u2, v)):
            raise PreconditionError("the chosen pair is not dominating")
    avoiding = [w for w in trace.faces if u1 not in w and u2 not in w]
    private: dict[int, int] = {}
    for v in range(g.n):
        if v in (u1, u2):
            continue
        private[v] = sum(1 for w in avoiding if v in w)
    wheel_ok = True
    for v in range(g.n):
        row = scheme.rotation[v]
        if len(row) < 2:
            wheel_ok = False
            break
        for k, a in enumerate(row):
            b = row[(k + 1) % len(row)]
            if not g.has_edge(a, b):
                wheel_ok = False
                break
        if not wheel_ok:
            break
    return TriangulationReport(trace.genus, len(avoiding), 2 * trace.genus,
                               private, wheel_ok)
