"""Command-line client of the service.

Every subcommand issues one HTTP request — against an in-process ASGI
instance by default, or a live server with ``--server`` — and renders the
JSON reply.  Numeric output is printed with 12 significant digits so that
cross-run diffs are meaningful near tolerance 1e-9; under a fixed seed and
``--threads 1`` the rendered bytes are reproducible.

Exit codes: 0 success, 2 precondition violation, 3 scale refusal,
4 non-convergence.

BLAS thread pinning must happen before numpy loads, which is why this
module defers every numeric import until after ``--threads`` is handled.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

from .errors import PreconditionError, SpexError

_EXIT_CODES = {"precondition": 2, "scale": 3, "nonconvergence": 4}
_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "VECLIB_MAXIMUM_THREADS", "NUMEXPR_NUM_THREADS")
_TABULAR = {"bounds": "bounds", "search": "search", "report": "report"}

_BOUNDS_COLUMNS = ("n", "gamma", "rho", "rho0", "lower", "upper",
                   "ellingham_zha", "inside_sandwich", "above_threshold")
_SEARCH_COLUMNS = ("graph6", "rho", "edges", "degrees", "flags")
_REPORT_COLUMNS = ("n", "gamma", "edge_count", "witness_ok", "rho", "rho0",
                   "lower", "upper", "ellingham_zha", "inside_sandwich",
                   "above_threshold", "w2", "w3", "genus_floor")


class _ServiceError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# ── small parsers ───────────────────────────────────────────────────────


def _int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of ints: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return values


def _single(values: list[int] | None, flag: str) -> int:
    if values is None:
        raise PreconditionError(f"{flag} is required here")
    if len(values) != 1:
        raise PreconditionError(f"{flag} takes a single value here")
    return values[0]


def _triple(text: str, flag: str) -> list[int]:
    values = _int_list(text)
    if len(values) != 3:
        raise PreconditionError(f"{flag} needs exactly three vertices")
    return values


def _parse_parts(text: str) -> list[dict]:
    # "n" or "n:graph6", comma separated; ':' and ',' are outside the
    # graph6 byte range, so the split is unambiguous
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ":" in tok:
            size, graph6 = tok.split(":", 1)
            parts.append({"n": int(size), "graph6": graph6})
        else:
            parts.append({"n": int(tok)})
    if not parts:
        raise PreconditionError("--parts is empty")
    return parts


def _graph6_arg(args) -> str:
    if (args.graph6 is None) == (getattr(args, "infile", None) is None):
        raise PreconditionError("provide exactly one of --graph6 and --in")
    if args.graph6 is not None:
        return args.graph6
    with open(args.infile, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                return line
    raise PreconditionError(f"{args.infile} holds no graph6 line")


# ── rendering ───────────────────────────────────────────────────────────


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    return obj


def _render_json(payload: dict) -> str:
    return json.dumps(_round_floats(payload), indent=2) + "\n"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, list):
        return ";".join(str(v) for v in value)
    return str(value)


def _render_rows(payload: dict, columns, preamble: list[str]) -> str:
    lines = [f"# schema_version={payload['schema_version']}"]
    lines += preamble
    lines.append(",".join(columns))
    for row in payload["rows"]:
        lines.append(",".join(_csv_cell(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _render_csv(command: str, payload: dict) -> str:
    if command == "bounds":
        return _render_rows(payload, _BOUNDS_COLUMNS, [])
    if command == "report":
        return _render_rows(payload, _REPORT_COLUMNS, [])
    meta = (f"# n={payload['n']} gamma={payload['gamma']} "
            f"space={payload['space']} candidates={payload['candidates']} "
            f"winner_rank={payload['winner_rank']} "
            f"winner_inner_graph6={payload['winner_inner_graph6']}")
    return _render_rows(payload, _SEARCH_COLUMNS, [meta])


# ── transport ───────────────────────────────────────────────────────────


async def _asgi_post(path: str, payload: dict):
    import httpx

    from .service.app import build_app

    transport = httpx.ASGITransport(app=build_app())
    async with httpx.AsyncClient(transport=transport, timeout=None,
                                 base_url="http://spexsurf.internal") as client:
        return await client.post(path, json=payload)


def _call(server: str | None, path: str, payload: dict) -> dict:
    if server is None:
        response = asyncio.run(_asgi_post(path, payload))
    else:
        import httpx
        with httpx.Client(base_url=server, timeout=None) as client:
            response = client.post(path, json=payload)
    if response.status_code != 200:
        try:
            body = response.json()
        except ValueError:
            raise _ServiceError("precondition",
                                f"HTTP {response.status_code}")
        error = body.get("error")
        if error:
            raise _ServiceError(error.get("code", "precondition"),
                                error.get("message", "request rejected"))
        raise _ServiceError("precondition", json.dumps(body))
    return response.json()


# ── argument grammar ────────────────────────────────────────────────────


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spexsurf",
        description="spectral extremal graph analysis on small-genus "
                    "surfaces")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_int_list, default=None,
                        help="order, or comma list of orders for grids")
    common.add_argument("--gamma", type=_int_list, default=None,
                        help="Euler genus, or comma list for grids")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None,
                        help="BLAS thread count (env SPEXSURF_THREADS, "
                             "else machine default)")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None,
                        help="write the report here instead of stdout")
    common.add_argument("--server", default=None,
                        help="base URL of a running service (default: "
                             "in-process)")

    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("construct", parents=[common],
                   help="extremal family member: graph6 plus trace JSON")

    p = sub.add_parser("rho", parents=[common],
                       help="adjacency spectral radius")
    p.add_argument("--graph6", default=None)
    p.add_argument("--in", dest="infile", default=None)

    sub.add_parser("bounds", parents=[common],
                   help="sandwich/ceiling sweep over an (n, gamma) grid")

    p = sub.add_parser("walks", parents=[common], help="walk-count profile")
    p.add_argument("--graph6", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "scaled"), default="exact")

    p = sub.add_parser("zhang", parents=[common],
                       help="join spectral radius from the walk series")
    p.add_argument("--parts", required=True,
                   help="comma list of 'n' or 'n:graph6'")

    p = sub.add_parser("compare", parents=[common],
                       help="first differing walk count of two graphs")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--lmax", type=int, default=64)
    p.add_argument("--no-rho", action="store_true",
                   help="skip the eigensolver cross-check")

    p = sub.add_parser("genus", parents=[common],
                       help="minimum Euler genus of a tiny graph")
    p.add_argument("--graph6", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--orientable-only", action="store_true")
    p.add_argument("--limit-schemes", type=int, default=2_000_000)

    p = sub.add_parser("verify-embedding", parents=[common],
                       help="trace faces of a rotation scheme")
    p.add_argument("scheme", nargs="?", default=None,
                   help="scheme JSON file")
    p.add_argument("--cert", default=None,
                   help="bundled certificate name instead of a file")
    p.add_argument("--pair", default=None,
                   help="dominating pair 'u,v' for triangulation counts")

    p = sub.add_parser("splice", parents=[common],
                       help="glue a planar patch into a 3-face")
    p.add_argument("--host", required=True, help="host scheme JSON file")
    p.add_argument("--inner", required=True, help="patch scheme JSON file")
    p.add_argument("--face", required=True, help="host face 'x,y,z'")
    p.add_argument("--outer", required=True, help="patch outer face 'x,y,z'")

    p = sub.add_parser("search", parents=[common],
                       help="rank path-plus-chords candidates by rho")
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--keep-top", type=int, default=25)

    p = sub.add_parser("w3max", parents=[common],
                       help="maximum 3-walk count over a degree sequence")
    p.add_argument("--degrees", required=True, help="comma list of degrees")
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--time-budget", type=float, default=None)

    p = sub.add_parser("serve", parents=[common],
                       help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    sub.add_parser("report", parents=[common],
                   help="construction + bounds + walk summary per grid point")
    return top


# ── request builders ────────────────────────────────────────────────────


def _build_request(args) -> tuple[str, dict]:
    cmd = args.command
    if cmd == "construct":
        return "/construct", {"n": _single(args.n, "--n"),
                              "gamma": _single(args.gamma, "--gamma")}
    if cmd == "rho":
        if args.graph6 is None and args.infile is None:
            if args.n is None:
                raise PreconditionError(
                    "rho needs --graph6, --in, or --n/--gamma")
            return "/rho", {"n": _single(args.n, "--n"),
                            "gamma": _single(args.gamma, "--gamma"),
                            "tol": args.tol}
        return "/rho", {"graph6": _graph6_arg(args), "tol": args.tol}
    if cmd == "bounds":
        if args.n is None or args.gamma is None:
            raise PreconditionError("bounds needs --n and --gamma grids")
        return "/bounds", {"n": args.n, "gamma": args.gamma, "tol": args.tol}
    if cmd == "walks":
        return "/walks", {"graph6": _graph6_arg(args), "lmax": args.lmax,
                          "mode": args.mode}
    if cmd == "zhang":
        return "/zhang", {"parts": _parse_parts(args.parts), "tol": args.tol}
    if cmd == "compare":
        return "/compare", {"g1": args.g1, "g2": args.g2, "lmax": args.lmax,
                            "with_rho": not args.no_rho}
    if cmd == "genus":
        return "/genus", {"graph6": _graph6_arg(args),
                          "orientable_only": args.orientable_only,
                          "limit_schemes": args.limit_schemes,
                          "seed": args.seed}
    if cmd == "verify-embedding":
        if (args.scheme is None) == (args.cert is None):
            raise PreconditionError(
                "provide a scheme file or --cert, not both")
        payload: dict = {}
        if args.cert is not None:
            payload["certificate"] = args.cert
        else:
            with open(args.scheme, "r", encoding="utf-8") as fh:
                payload["scheme"] = json.load(fh)
        if args.pair is not None:
            u, v = _int_list(args.pair)[:2]
            payload["dominating_pair"] = [u, v]
        return "/verify-embedding", payload
    if cmd == "splice":
        with open(args.host, "r", encoding="utf-8") as fh:
            host = json.load(fh)
        with open(args.inner, "r", encoding="utf-8") as fh:
            inner = json.load(fh)
        return "/splice", {"host": host, "inner": inner,
                           "face": _triple(args.face, "--face"),
                           "outer": _triple(args.outer, "--outer")}
    if cmd == "search":
        return "/search", {"n": _single(args.n, "--n"),
                           "gamma": _single(args.gamma, "--gamma"),
                           "window": args.window, "keep_top": args.keep_top}
    if cmd == "w3max":
        return "/w3max", {"degrees": _int_list(args.degrees),
                          "budget_restarts": args.restarts,
                          "seed": args.seed,
                          "time_budget": args.time_budget}
    if cmd == "report":
        if args.n is None or args.gamma is None:
            raise PreconditionError("report needs --n and --gamma grids")
        return "/report", {"n": args.n, "gamma": args.gamma, "tol": args.tol}
    raise PreconditionError(f"unknown command {cmd!r}")


# ── output ──────────────────────────────────────────────────────────────


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_construct(args, payload: dict) -> None:
    if args.out is None:
        _emit(_render_json(payload), None)
        return
    base = args.out
    trace_path = base + ".trace.json"
    with open(trace_path, "w", encoding="utf-8") as fh:
        fh.write(_render_json(payload))
    if payload.get("graph6") is not None:
        with open(base + ".g6", "w", encoding="ascii") as fh:
            fh.write(payload["graph6"] + "\n")


def _pin_threads(args) -> None:
    threads = args.threads
    if threads is None:
        env = os.environ.get("SPEXSURF_THREADS")
        threads = int(env) if env else None
    if threads is None:
        return
    if threads < 1:
        raise PreconditionError("--threads must be >= 1")
    for var in _THREAD_VARS:
        os.environ[var] = str(threads)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        _pin_threads(args)
        if args.command == "serve":
            import uvicorn

            from .service.app import build_app
            uvicorn.run(build_app(), host=args.host, port=args.port)
            return 0
        path, payload = _build_request(args)
        reply = _call(args.server, path, payload)
        if args.command == "construct":
            _emit_construct(args, reply)
            return 0
        fmt = args.format
        if fmt is None:
            fmt = "csv" if args.command in _TABULAR else "json"
        if fmt == "csv":
            if args.command not in _TABULAR:
                raise PreconditionError(
                    "csv output is available for bounds, search, and "
                    "report only")
            text = _render_csv(args.command, reply)
        else:
            text = _render_json(reply)
        _emit(text, args.out)
        return 0
    except (SpexError, _ServiceError) as exc:
        code = _EXIT_CODES.get(exc.code, 1)
        sys.stderr.write(f"spexsurf: {exc} [{exc.code}]\n")
        return code
    except OSError as exc:
        sys.stderr.write(f"spexsurf: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
