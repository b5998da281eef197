"""Spectral extremal graph analysis on surfaces of small Euler genus.

The package builds dominating-pair graph families, solves for adjacency
spectral radii at scale, compares graphs by walk counts, verifies cellular
embeddings through rotation schemes, and tests small minors exactly.  A
FastAPI service (``spexsurf.service``) wraps the library; the ``spexsurf``
console script is a thin client of that service.

Submodules load lazily so that ``import spexsurf`` stays cheap and the CLI
can pin BLAS thread counts before numpy comes in.
"""
from __future__ import annotations

from importlib import import_module

from .errors import (Graph6Error, NonConvergenceError, PreconditionError,
                     ScaleRefusalError, SpexError, SpliceIntegrityError)

__version__ = "0.1.0"

_EXPORTS = {
    # graphs
    "BITSET_MAX": ".graphs",
    "Graph": ".graphs",
    "SpanningPathWitness": ".graphs",
    "attach_paths": ".graphs",
    "build_cycle": ".graphs",
    "build_path": ".graphs",
    "canonical_graph6": ".graphs",
    "canonical_labeling": ".graphs",
    "complete_bipartite": ".graphs",
    "complete_graph": ".graphs",
    "complete_multipartite": ".graphs",
    "disjoint_union": ".graphs",
    "empty_graph": ".graphs",
    "erdos_gallai": ".graphs",
    "from_adjacency_json": ".graphs",
    "from_graph6": ".graphs",
    "havel_hakimi": ".graphs",
    "is_isomorphic": ".graphs",
    "join": ".graphs",
    "k2_join": ".graphs",
    "kr_pendant": ".graphs",
    "to_graph6": ".graphs",
    "witness_from_json": ".graphs",
    # spectral
    "DEFAULT_TOL": ".spectral",
    "ITERATION_CAP": ".spectral",
    "BoundEnvelope": ".spectral",
    "SpectralResult": ".spectral",
    "bounds": ".spectral",
    "rayleigh_delta": ".spectral",
    "rho0": ".spectral",
    "rho_complete_split": ".spectral",
    "spectral_radius": ".spectral",
    # walks
    "WalkComparison": ".walks",
    "WalkProfile": ".walks",
    "check_w2_w3": ".walks",
    "max_w3_degseq": ".walks",
    "w3_shape_target": ".walks",
    "walk_compare": ".walks",
    "walk_counts": ".walks",
    "zhang_rho": ".walks",
    # embeddings
    "EmbeddingScheme": ".embeddings",
    "FaceTrace": ".embeddings",
    "GenusResult": ".embeddings",
    "TriangulationReport": ".embeddings",
    "genus_floor": ".embeddings",
    "load_certificate": ".embeddings",
    "min_euler_genus": ".embeddings",
    "planar_k2_path_scheme": ".embeddings",
    "scheme_with_default_signs": ".embeddings",
    "splice_into_face": ".embeddings",
    "switch_scheme": ".embeddings",
    "trace_faces": ".embeddings",
    "verify_triangulation_facecounts": ".embeddings",
    # construction
    "ConstructionTrace": ".construction",
    "SurgeryStep": ".construction",
    "build_extremal_candidates": ".construction",
    "construct_ex": ".construction",
    "gadget": ".construction",
    "surgery": ".construction",
    # extremal
    "BRUTEFORCE_MAX": ".extremal",
    "MINOR_HOST_MAX": ".extremal",
    "MINOR_PATTERN_MAX": ".extremal",
    "RebalanceReport": ".extremal",
    "StructureReport": ".extremal",
    "SweepReport": ".extremal",
    "SweepRow": ".extremal",
    "SwitchResult": ".extremal",
    "candidate_sweep": ".extremal",
    "contract_switch": ".extremal",
    "has_minor": ".extremal",
    "is_planar": ".extremal",
    "rebalance_check": ".extremal",
    "spex_bruteforce": ".extremal",
    "structure_report": ".extremal",
}

__all__ = sorted(set(_EXPORTS) | {
    "Graph6Error", "NonConvergenceError", "PreconditionError",
    "ScaleRefusalError", "SpexError", "SpliceIntegrityError", "__version__",
})


def __getattr__(name: str):
    try:
        module = _EXPORTS[name]
    except KeyError:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    value = getattr(import_module(module, __name__), name)
    globals()[name] = value
    return value


def __dir__():
    return __all__
