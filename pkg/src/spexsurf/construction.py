"""Extremal-family constructions: the two local gadgets, the surgery that
raises the genus budget of a dominated spanning-path graph by two while
keeping the edge count at 3(n - 2 + gamma), the closed-form family
builder, and the small-n spliced embedding candidates.

All graphs here carry a dominating pair (ids 0 and 1) plus a spanning
path on the rest; each surgery consumes the triangle (0, 1, z) at the
current path end and grafts four new vertices whose tail z-v4-v7-v3-v6
extends the path, so the witness survives every step.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .embeddings import (EmbeddingScheme, load_certificate,
                         planar_k2_path_scheme, splice_into_face,
                         trace_faces)
from .errors import PreconditionError
from .graphs import Graph, SpanningPathWitness, build_path, k2_join

# the two 1-skeleton gadgets used by the surgery overlay, frozen as edge
# lists (7 vertices / 15 edges and 6 vertices / 12 edges)
_H_EDGES = ((0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4),
            (0, 4), (0, 6), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6))
_HPRIME_EDGES = ((0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (4, 5), (2, 4),
                 (2, 5), (0, 5), (2, 3), (1, 5), (1, 3))


def gadget(kind: str) -> Graph:
    """One of the two frozen local gadgets: "H" (order 7) or "H'" (order 6)."""
    key = kind.strip().lower().replace("prime", "'")
    if key == "h":
        return Graph(7, _H_EDGES)
    if key == "h'":
        return Graph(6, _HPRIME_EDGES)
    raise PreconditionError(f"unknown gadget kind {kind!r}")


@dataclass(frozen=True)
class SurgeryStep:
    label: int
    triangle: tuple[int, int, int]
    new_vertices: tuple[int, int, int, int]  # v3, v4, v6, v7

    @property
    def path_tail(self) -> tuple[int, int, int, int]:
        """Order in which the new vertices extend the spanning path."""
        v3, v4, v6, v7 = self.new_vertices
        return (v4, v7, v3, v6)

    @property
    def next_anchor(self) -> int:
        """The new path end; the next surgery's triangle is (x, y, here)."""
        return self.new_vertices[2]

    def to_json(self) -> dict:
        return {"label": self.label, "triangle": list(self.triangle),
                "new_vertices": list(self.new_vertices)}


def _overlay_edges(x: int, y: int, z: int,
                   nv: tuple[int, int, int, int]) -> list[tuple[int, int]]:
    v3, v4, v6, v7 = nv
    return [
        (x, v3), (y, v3), (x, v4), (y, v4),
        (x, v6), (y, v6), (x, v7), (y, v7),
        (z, v4), (v4, v7), (v3, v7), (v3, v6),
        (v3, z), (v3, v4), (z, v6), (z, v7), (v4, v6), (v6, v7),
    ]


def surgery(g: Graph, x: int, y: int, z: int,
            label: int = 0) -> tuple[Graph, SurgeryStep]:
    """Graft four vertices onto the triangle (x, y, z).

    The 18 overlay edges give all four new vertices to x and y, hang the
    tail z-v4-v7-v3-v6 off the old path end z, and close the pattern with
    six chords; net effect is +4 vertices, +18 edges, and a spanning path
    that now ends at v6.
    """
    for u, v in ((x, y), (x, z), (y, z)):
        if not g.has_edge(u, v):
            raise PreconditionError(
                f"surgery needs a triangle: edge {u}-{v} missing")
    nv = (g.n, g.n + 1, g.n + 2, g.n + 3)
    new_edges = np.asarray(_overlay_edges(x, y, z, nv), dtype=np.int64)
    combined = np.concatenate([g.edge_array().astype(np.int64), new_edges])
    return (Graph(g.n + 4, combined),
            SurgeryStep(label, (x, y, z), nv))


def _off_path_edges(z: int,
                    nv: tuple[int, int, int, int]) -> list[tuple[int, int]]:
    """The six chords a surgery adds beyond the path-plus-dominators
    skeleton (used for added-edge bookkeeping)."""
    v3, v4, v6, v7 = nv
    return [(v3, z), (v3, v4), (z, v6), (z, v7), (v4, v6), (v6, v7)]


@dataclass(frozen=True)
class ConstructionTrace:
    graph: Graph
    witness: SpanningPathWitness
    steps: tuple[SurgeryStep, ...]
    added_edges: tuple[tuple[int, int], ...]
    gamma: int

    def to_json(self, include_graph: bool | None = None) -> dict:
        n = self.graph.n
        if include_graph is None:
            include_graph = n <= 2000
        payload = {
            "n": n,
            "gamma": self.gamma,
            "edge_count": self.graph.m,
            "steps": [s.to_json() for s in self.steps],
            "added_edges": [list(e) for e in self.added_edges],
        }
        if include_graph:
            payload["graph6"] = self.graph.to_graph6()
            payload["witness"] = self.witness.to_json()
        else:
            payload["graph6"] = None
            payload["witness"] = None
        return payload


def construct_ex(n: int, gamma: int) -> ConstructionTrace:
    """The extremal family member of order n with genus budget gamma.

    gamma = 0 is the path join; even gamma runs gamma/2 surgeries on the
    path join of order n - 2*gamma; odd gamma starts instead from the
    complete graph K6 sharing a triangle with the path join and runs
    (gamma - 1)/2 surgeries.  Every output has 3(n - 2 + gamma) edges, a
    dominating pair (0, 1), and a validated spanning-path witness; vertex
    ids match the step-by-step surgery chain exactly.

    Builds the inner graph directly and joins K2 once, so it stays fast
    and lean at n around 1e7.
    """
    if gamma < 0:
        raise PreconditionError("gamma must be nonnegative")
    if n < 2 * gamma + 4:
        raise PreconditionError(
            f"order {n} is below the minimum 2*gamma+4 = {2 * gamma + 4}")

    # inner ids (final id = inner id + 2)
    blocks: list[np.ndarray] = []
    added: list[tuple[int, int]] = []
    steps: list[SurgeryStep] = []
    if gamma % 2 == 0:
        m = n - 2 * gamma - 2  # base path order, >= 2
        base = np.stack([np.arange(0, m - 1, dtype=np.int64),
                         np.arange(1, m, dtype=np.int64)], axis=1)
        blocks.append(base)
        order = [np.arange(m, dtype=np.int64)]
        z = m - 1
        rounds = gamma // 2
        block_start = m
    else:
        t = n - 2 * gamma - 3  # order of the path sharing v3 with the K6
        k4 = np.asarray([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                        dtype=np.int64)
        blocks.append(k4)
        added.extend([(3, 5), (2, 5), (2, 4)])  # K6 chords off the path
        if t > 1:
            cont = np.stack(
                [np.concatenate([[0], np.arange(4, t + 2)]),
                 np.arange(4, t + 3)], axis=1).astype(np.int64)
            blocks.append(cont)
        order = [np.asarray([3, 2, 1, 0], dtype=np.int64),
                 np.arange(4, t + 3, dtype=np.int64)]
        z = t + 2 if t > 1 else 0
        rounds = (gamma - 1) // 2
        block_start = t + 3

    for i in range(rounds):
        b = block_start + 4 * i
        nv = (b, b + 1, b + 2, b + 3)  # v3, v4, v6, v7 (inner ids)
        v3, v4, v6, v7 = nv
        blocks.append(np.asarray(
            [(z, v4), (v4, v7), (v3, v7), (v3, v6)], dtype=np.int64))
        off = _off_path_edges(z, nv)
        blocks.append(np.asarray(off, dtype=np.int64))
        order.append(np.asarray([v4, v7, v3, v6], dtype=np.int64))
        steps.append(SurgeryStep(i + 1, (0, 1, z + 2),
                                 tuple(v + 2 for v in nv)))
        added.extend(tuple(sorted((a + 2, c + 2))) for a, c in off)
        z = v6

    inner = Graph(n - 2, np.concatenate(blocks, axis=0))
    g = k2_join(inner)
    witness = SpanningPathWitness(
        (0, 1), np.concatenate(order) + np.int64(2))
    assert g.m == 3 * (n - 2 + gamma)
    added_final = tuple(tuple(int(v) for v in sorted(e)) for e in added)
    return ConstructionTrace(g, witness, tuple(steps), added_final, gamma)


def build_extremal_candidates(n: int, gamma: int) -> EmbeddingScheme:
    """Embedded candidate of order n for gamma in {1, 2}: the shipped
    minimal-surface certificate (K6 projective or K7 torus) with two
    planar path-join patches spliced into the two faces along the edge
    (0, 1).

    The result is a triangulation of the same surface whose graph is the
    K2 join of a clique of order gamma + 3 with two pendant paths; the
    Euler genus is re-verified by tracing at every splice.
    """
    if gamma not in (1, 2):
        raise PreconditionError("candidates exist for gamma in {1, 2} only")
    if n > 200:
        raise PreconditionError("candidate splicing is capped at n <= 200")
    if n < gamma + 5:
        raise PreconditionError(
            f"order {n} cannot hold K2 joined to a clique of order "
            f"{gamma + 3}")
    cert = load_certificate("k6-projective" if gamma == 1 else "k7-torus")
    trace = trace_faces(cert)
    anchors = sorted({w for walk in trace.faces if 0 in walk and 1 in walk
                      for w in walk} - {0, 1})
    if len(anchors) != 2:
        raise PreconditionError("certificate lost its dominating-edge faces")
    pendant = n - 2 - (gamma + 3)
    lengths = (pendant - pendant // 2, pendant // 2)
    scheme = cert
    for v, length in zip(anchors, lengths):
        if length == 0:
            continue
        patch = planar_k2_path_scheme(length + 1)
        scheme = splice_into_face(scheme, (0, 1, v), patch, (0, 1, 2))
    if scheme.graph.n != n:
        raise PreconditionError("splice bookkeeping lost vertices")
    return scheme
