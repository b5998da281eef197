"""Request/response schemas for the service.

Every response carries ``schema_version`` so downstream parsers can detect
format changes.  Exact walk counts travel as decimal strings (they exceed
64-bit integers quickly); everything else is plain JSON scalars.
"""
from __future__ import annotations

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


# ── requests ────────────────────────────────────────────────────────────


class ConstructRequest(BaseModel):
    n: int
    gamma: int
    include_graph: bool | None = Field(
        None, description="force graph6/witness in the trace; default: "
        "included up to order 2000")


class RhoRequest(BaseModel):
    graph6: str | None = None
    n: int | None = None
    gamma: int = 0
    tol: float = 1e-10
    perron_summary: bool = False


class BoundsRequest(BaseModel):
    n: list[int]
    gamma: list[int]
    tol: float = 1e-10
    with_rho: bool = True


class WalksRequest(BaseModel):
    graph6: str
    lmax: int
    mode: str = "exact"


class ZhangPart(BaseModel):
    n: int
    graph6: str | None = None


class ZhangRequest(BaseModel):
    parts: list[ZhangPart]
    tol: float = 1e-10


class CompareRequest(BaseModel):
    g1: str
    g2: str
    lmax: int = 64
    with_rho: bool = True


class GenusRequest(BaseModel):
    graph6: str
    orientable_only: bool = False
    limit_schemes: int = 2_000_000
    seed: int = 0


class VerifyEmbeddingRequest(BaseModel):
    scheme: dict | None = None
    certificate: str | None = None
    dominating_pair: tuple[int, int] | None = None


class SpliceRequest(BaseModel):
    host: dict
    face: tuple[int, int, int]
    inner: dict
    outer: tuple[int, int, int]


class SearchRequest(BaseModel):
    n: int
    gamma: int
    window: int = 8
    keep_top: int = 25


class W3MaxRequest(BaseModel):
    degrees: list[int]
    budget_restarts: int = 200
    seed: int = 0
    time_budget: float | None = None


class ReportRequest(BaseModel):
    n: list[int]
    gamma: list[int]
    tol: float = 1e-10


# ── responses ───────────────────────────────────────────────────────────


class HealthResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    status: str
    version: str


class ConstructResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    gamma: int
    edge_count: int
    steps: list[dict]
    added_edges: list[list[int]]
    graph6: str | None
    witness: dict | None


class RhoResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    edge_count: int
    rho: float
    residual: float
    iterations: int
    perron_min: float | None = None
    perron_max: float | None = None


class BoundsRow(BaseModel):
    n: int
    gamma: int
    rho: float | None
    rho0: float
    lower: float
    upper: float
    ellingham_zha: float
    inside_sandwich: bool | None
    above_threshold: bool


class BoundsResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    rows: list[BoundsRow]


class WalksResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    edge_count: int
    mode: str
    scale: float
    counts: list[str] | list[float]


class ZhangResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    rho: float
    parts: int
    order: int


class CompareResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    equal: bool
    first_index: int | None
    sign: int
    inconclusive_at: int | None
    rho_joined_1: float | None = None
    rho_joined_2: float | None = None
    rho_order_matches: bool | None = None


class GenusResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    genus: int
    exhaustive: bool
    scheme: dict


class VerifyEmbeddingResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    edge_count: int
    f: int
    genus: int
    orientable: bool
    faces: list[list[int]]
    triangulation: dict | None = None


class SpliceResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    scheme: dict
    f: int
    genus: int
    orientable: bool


class SearchRow(BaseModel):
    rank: int
    graph6: str
    rho: float
    edges: int
    degrees: str
    flags: list[str]


class SearchResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    gamma: int
    space: str
    candidates: int
    winner_rank: int
    winner_inner_graph6: str
    rows: list[SearchRow]


class W3MaxResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    value: int
    graph6: str
    shape_target: int | None


class ReportRow(BaseModel):
    n: int
    gamma: int
    edge_count: int
    witness_ok: bool
    rho: float
    rho0: float
    lower: float
    upper: float
    ellingham_zha: float
    inside_sandwich: bool
    above_threshold: bool
    w2: str
    w3: str
    genus_floor: int


class ReportResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    rows: list[ReportRow]
