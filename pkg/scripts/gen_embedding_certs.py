"""Generate the shipped embedding certificates.

K6 in the projective plane comes from the icosahedron: antipodal vertex
classes inherit the icosahedral rotation, and the edge signs are found by
searching co-tree sign masks until the trace shows the ten-triangle face
vector.  K7 on the torus uses the classical difference rotation, the same
cyclic pattern at every vertex.

Writes src/spexsurf/data/*.json and mirrors the files to data/ at the
repository root.  Idempotent; run from anywhere inside the repo.
"""
from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from spexsurf.embeddings import EmbeddingScheme, trace_faces  # noqa: E402
from spexsurf.graphs import Graph, complete_graph  # noqa: E402


def icosahedron() -> tuple[list[list[int]], dict[int, int]]:
    """Rotation system (counterclockwise from coordinates) and the
    antipodal involution of the icosahedron."""
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a, b in itertools.product((1.0, -1.0), repeat=2):
        pts.append((0.0, a, b * phi))
        pts.append((a, b * phi, 0.0))
        pts.append((a * phi, 0.0, b))
    coords = np.array(pts)
    n = len(coords)
    d2 = ((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=2)
    adj = [[w for w in range(n) if abs(d2[v, w] - 4.0) < 1e-9]
           for v in range(n)]
    rot = []
    for v in range(n):
        nv = coords[v] / np.linalg.norm(coords[v])
        ref = coords[adj[v][0]] - coords[v]
        t1 = ref - nv * (ref @ nv)
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(nv, t1)
        ang = {}
        for w in adj[v]:
            rel = coords[w] - coords[v]
            ang[w] = np.arctan2(rel @ t2, rel @ t1)
        rot.append(sorted(adj[v], key=ang.get))
    antipode = {}
    for v in range(n):
        w = int(np.argmin(((coords + coords[v]) ** 2).sum(axis=1)))
        antipode[v] = w
    return rot, antipode


def k6_projective() -> EmbeddingScheme:
    rot, antipode = icosahedron()
    reps = sorted(v for v in antipode if v < antipode[v])
    cls = {}
    for k, v in enumerate(reps):
        cls[v] = k
        cls[antipode[v]] = k
    rotation = tuple(tuple(cls[w] for w in rot[v]) for v in reps)
    g = complete_graph(6)
    edges = [tuple(e) for e in g.edge_array().tolist()]
    # the quotient fixes the rotations only up to per-class reversal, so
    # search the full sign space (pinning a tree is only sound when the
    # rotations are searched too)
    for mask in range(1 << len(edges)):
        sig = {e: 1 - 2 * (mask >> k & 1) for k, e in enumerate(edges)}
        scheme = EmbeddingScheme(g, rotation, sig)
        t = trace_faces(scheme)
        if t.f == 10 and t.genus == 1 and not t.orientable:
            return scheme
    raise RuntimeError("no sign mask produced the projective trace")


def k7_torus() -> EmbeddingScheme:
    g = complete_graph(7)
    edges = [tuple(e) for e in g.edge_array().tolist()]
    sig = {e: 1 for e in edges}
    for pattern in itertools.permutations(range(1, 7)):
        rotation = tuple(tuple((v + d) % 7 for d in pattern)
                         for v in range(7))
        t = trace_faces(EmbeddingScheme(g, rotation, sig))
        if t.f == 14 and t.genus == 2 and t.orientable:
            return EmbeddingScheme(g, rotation, sig)
    raise RuntimeError("no difference pattern produced the torus trace")


def main() -> None:
    out_pkg = ROOT / "src" / "spexsurf" / "data"
    out_top = ROOT / "data"
    out_pkg.mkdir(parents=True, exist_ok=True)
    out_top.mkdir(parents=True, exist_ok=True)
    for name, scheme in (("k6-projective", k6_projective()),
                         ("k7-torus", k7_torus())):
        t = trace_faces(scheme)
        print(f"{name}: f={t.f} genus={t.genus} orientable={t.orientable}")
        payload = json.dumps(scheme.to_json(), indent=1, sort_keys=True)
        for base in (out_pkg, out_top):
            (base / f"{name}.json").write_text(payload + "\n")


if __name__ == "__main__":
    main()
