"""FastAPI service exposing the library: one endpoint per operation.

Domain errors surface as HTTP 422 with ``{"error": {"code", "message"}}``;
the code string maps onto the CLI exit codes (precondition/scale/
nonconvergence).  Handlers hold no state, so the app is safe to share
between workers.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..construction import construct_ex
from ..embeddings import (EmbeddingScheme, load_certificate, splice_into_face,
                          trace_faces, verify_triangulation_facecounts)
from ..errors import PreconditionError, SpexError
from ..extremal import candidate_sweep
from ..graphs import Graph, from_graph6, k2_join, to_graph6
from ..spectral import bounds, spectral_radius
from ..walks import (max_w3_degseq, w3_shape_target, walk_compare,
                     walk_counts, zhang_rho)
from . import models as m


def _graph_from_request(graph6: str) -> Graph:
    return from_graph6(graph6)


def _scheme_from_request(payload: m.VerifyEmbeddingRequest) -> EmbeddingScheme:
    if (payload.certificate is None) == (payload.scheme is None):
        raise PreconditionError(
            "provide exactly one of 'scheme' and 'certificate'")
    if payload.certificate is not None:
        return load_certificate(payload.certificate)
    return EmbeddingScheme.from_json(payload.scheme)


def build_app() -> FastAPI:
    app = FastAPI(title="spexsurf", version=__version__)

    @app.exception_handler(SpexError)
    async def _domain_error(_: Request, exc: SpexError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"error": {"code": exc.code, "message": str(exc)}})

    @app.get("/health", response_model=m.HealthResponse)
    def health() -> m.HealthResponse:
        return m.HealthResponse(status="ok", version=__version__)

    @app.post("/construct", response_model=m.ConstructResponse)
    def construct(req: m.ConstructRequest) -> m.ConstructResponse:
        trace = construct_ex(req.n, req.gamma)
        payload = trace.to_json(include_graph=req.include_graph)
        return m.ConstructResponse(**payload)

    @app.post("/rho", response_model=m.RhoResponse)
    def rho(req: m.RhoRequest) -> m.RhoResponse:
        if (req.graph6 is None) == (req.n is None):
            raise PreconditionError(
                "provide exactly one of 'graph6' and 'n' (+'gamma')")
        if req.graph6 is not None:
            g = _graph_from_request(req.graph6)
        else:
            g = construct_ex(req.n, req.gamma).graph
        res = spectral_radius(g, tol=req.tol)
        extremes = {}
        if req.perron_summary and g.n:
            extremes = {"perron_min": float(res.perron.min()),
                        "perron_max": float(res.perron.max())}
        return m.RhoResponse(n=g.n, edge_count=g.m, rho=res.rho,
                             residual=res.residual,
                             iterations=res.iterations, **extremes)

    @app.post("/bounds", response_model=m.BoundsResponse)
    def bounds_sweep(req: m.BoundsRequest) -> m.BoundsResponse:
        if not req.n or not req.gamma:
            raise PreconditionError("n and gamma grids must be non-empty")
        rows = []
        for gamma in req.gamma:
            for n in req.n:
                env = bounds(n, gamma)
                rho_val = None
                inside = None
                if req.with_rho:
                    g = construct_ex(n, gamma).graph
                    rho_val = spectral_radius(g, tol=req.tol).rho
                    inside = env.lower < rho_val < env.upper
                rows.append(m.BoundsRow(
                    n=n, gamma=gamma, rho=rho_val, rho0=env.rho0,
                    lower=env.lower, upper=env.upper,
                    ellingham_zha=env.ellingham_zha,
                    inside_sandwich=inside,
                    above_threshold=n >= env.n_threshold))
        return m.BoundsResponse(rows=rows)

    @app.post("/walks", response_model=m.WalksResponse)
    def walks(req: m.WalksRequest) -> m.WalksResponse:
        g = _graph_from_request(req.graph6)
        prof = walk_counts(g, req.lmax, mode=req.mode)
        payload = prof.to_json()
        return m.WalksResponse(n=g.n, edge_count=g.m, mode=prof.mode,
                               scale=payload.get("scale", 1.0),
                               counts=payload["counts"])

    @app.post("/zhang", response_model=m.ZhangResponse)
    def zhang(req: m.ZhangRequest) -> m.ZhangResponse:
        parts = [(p.n, None if p.graph6 is None
                  else _graph_from_request(p.graph6)) for p in req.parts]
        value = zhang_rho(parts, tol=req.tol)
        return m.ZhangResponse(rho=value, parts=len(parts),
                               order=sum(p.n for p in req.parts))

    @app.post("/compare", response_model=m.CompareResponse)
    def compare(req: m.CompareRequest) -> m.CompareResponse:
        h1 = _graph_from_request(req.g1)
        h2 = _graph_from_request(req.g2)
        cmp = walk_compare(h1, h2, req.lmax)
        extra = {}
        if req.with_rho:
            r1 = spectral_radius(k2_join(h1)).rho
            r2 = spectral_radius(k2_join(h2)).rho
            matches = None
            if cmp.sign != 0:
                matches = (r1 > r2) == (cmp.sign > 0)
            extra = {"rho_joined_1": r1, "rho_joined_2": r2,
                     "rho_order_matches": matches}
        return m.CompareResponse(equal=cmp.equal, first_index=cmp.first_index,
                                 sign=cmp.sign,
                                 inconclusive_at=cmp.inconclusive_at, **extra)

    @app.post("/genus", response_model=m.GenusResponse)
    def genus(req: m.GenusRequest) -> m.GenusResponse:
        from ..embeddings import min_euler_genus
        g = _graph_from_request(req.graph6)
        res = min_euler_genus(g, orientable_only=req.orientable_only,
                              limit_schemes=req.limit_schemes, seed=req.seed)
        return m.GenusResponse(genus=res.genus, exhaustive=res.exhaustive,
                               scheme=res.scheme.to_json())

    @app.post("/verify-embedding", response_model=m.VerifyEmbeddingResponse)
    def verify_embedding(req: m.VerifyEmbeddingRequest
                         ) -> m.VerifyEmbeddingResponse:
        scheme = _scheme_from_request(req)
        trace = trace_faces(scheme)
        tri = None
        if req.dominating_pair is not None:
            u1, u2 = req.dominating_pair
            tri = verify_triangulation_facecounts(scheme, u1, u2).to_json()
        return m.VerifyEmbeddingResponse(
            n=scheme.graph.n, edge_count=scheme.graph.m, f=trace.f,
            genus=trace.genus, orientable=trace.orientable,
            faces=[list(w) for w in trace.faces], triangulation=tri)

    @app.post("/splice", response_model=m.SpliceResponse)
    def splice(req: m.SpliceRequest) -> m.SpliceResponse:
        host = EmbeddingScheme.from_json(req.host)
        inner = EmbeddingScheme.from_json(req.inner)
        merged = splice_into_face(host, tuple(req.face), inner,
                                  tuple(req.outer))
        trace = trace_faces(merged)
        return m.SpliceResponse(scheme=merged.to_json(), f=trace.f,
                                genus=trace.genus,
                                orientable=trace.orientable)

    @app.post("/search", response_model=m.SearchResponse)
    def search(req: m.SearchRequest) -> m.SearchResponse:
        report = candidate_sweep(req.n, req.gamma, window=req.window,
                                 keep_top=req.keep_top)
        rows = [m.SearchRow(**r.to_json()) for r in report.rows]
        return m.SearchResponse(
            n=report.n, gamma=report.gamma, space=report.space,
            candidates=report.candidates, winner_rank=report.winner_rank,
            winner_inner_graph6=report.winner_inner_graph6, rows=rows)

    @app.post("/w3max", response_model=m.W3MaxResponse)
    def w3max(req: m.W3MaxRequest) -> m.W3MaxResponse:
        value, witness = max_w3_degseq(
            req.degrees, budget_restarts=req.budget_restarts, seed=req.seed,
            time_budget=req.time_budget)
        return m.W3MaxResponse(value=value, graph6=to_graph6(witness),
                               shape_target=w3_shape_target(req.degrees))

    @app.post("/report", response_model=m.ReportResponse)
    def report(req: m.ReportRequest) -> m.ReportResponse:
        from ..embeddings import genus_floor
        if not req.n or not req.gamma:
            raise PreconditionError("n and gamma grids must be non-empty")
        rows = []
        for gamma in req.gamma:
            for n in req.n:
                trace = construct_ex(n, gamma)
                g = trace.graph
                trace.witness.validate(g)
                env = bounds(n, gamma)
                rho_val = spectral_radius(g, tol=req.tol).rho
                prof = walk_counts(g, 3, mode="exact")
                rows.append(m.ReportRow(
                    n=n, gamma=gamma, edge_count=g.m, witness_ok=True,
                    rho=rho_val, rho0=env.rho0, lower=env.lower,
                    upper=env.upper, ellingham_zha=env.ellingham_zha,
                    inside_sandwich=env.lower < rho_val < env.upper,
                    above_threshold=n >= env.n_threshold,
                    w2=str(prof.counts[1]), w3=str(prof.counts[2]),
                    genus_floor=genus_floor(g.n, g.m)))
        return m.ReportResponse(rows=rows)

    return app


app = build_app()
