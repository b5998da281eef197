"""Spectral radius and Perron vector by shifted power iteration, closed-form
radii for the two anchor families, and the bound envelope around them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergenceError, PreconditionError
from .graphs import Graph

DEFAULT_TOL = 1e-10
ITERATION_CAP = 1_000_000


@dataclass(frozen=True)
class SpectralResult:
    """rho estimate with its Perron vector (max entry normalized to 1)."""

    rho: float
    perron: np.ndarray
    residual: float
    iterations: int


@dataclass(frozen=True)
class BoundEnvelope:
    rho0: float
    lower: float
    upper: float
    ellingham_zha: float
    n_threshold: int

    def to_json(self) -> dict:
        return {"rho0": self.rho0, "lower": self.lower, "upper": self.upper,
                "ellingham_zha": self.ellingham_zha,
                "n_threshold": self.n_threshold}


# ── closed forms ────────────────────────────────────────────────────────


def rho_complete_split(n: int) -> float:
    """Spectral radius of K2 joined to n-2 isolated vertices."""
    if n < 3:
        raise PreconditionError("closed form needs n >= 3")
    return (1.0 + math.sqrt(8.0 * n - 15.0)) / 2.0


def rho0(n: int) -> float:
    """Spectral radius of K2 joined to the cycle on n-2 vertices."""
    if n < 5:
        raise PreconditionError("cycle anchor needs n >= 5")
    return 1.5 + math.sqrt(2.0 * n - 3.75)


def bounds(n: int, gamma: int) -> BoundEnvelope:
    """Sandwich interval at Euler genus gamma plus the global ceiling.

    The lower/upper pair brackets extremal spectral radii for gamma >= 1
    (and large n); at gamma = 0 the formulas still evaluate but the lower
    one is not a bound for anything.
    """
    if n < 5:
        raise PreconditionError("bound envelope needs n >= 5")
    if gamma < 0:
        raise PreconditionError("genus must be >= 0")
    r0 = rho0(n)
    return BoundEnvelope(
        rho0=r0,
        lower=r0 + (3.0 * gamma - 1.0) / n,
        upper=r0 + (3.0 * gamma - 0.95) / n,
        ellingham_zha=2.0 + math.sqrt(2.0 * n + 8.0 * gamma - 6.0),
        n_threshold=50 * (300 + 180 * gamma + 24 * gamma * gamma) ** 2,
    )


# ── power iteration ─────────────────────────────────────────────────────


class _CsrMatvec:
    """y = A @ x in row blocks of bounded gather size.

    Each block's reduceat boundaries are the starts of its nonempty rows:
    including empty rows in the boundary list would bleed segments into
    their neighbours.

    reduceat sums each segment left to right, so a row of length L carries
    O(eps * L) rounding — at ten-million-entry dominator rows that floor
    swamps tight tolerances.  Rows longer than HEAVY_ROW are therefore
    pulled out of the blocked plan and summed with np.sum, whose pairwise
    reduction keeps the error at O(eps * log L).
    """

    HEAVY_ROW = 1 << 16

    def __init__(self, indptr: np.ndarray, indices: np.ndarray,
                 block_entries: int = 1 << 23):
        self.indices = indices
        n = indptr.shape[0] - 1
        deg = np.diff(indptr)
        heavy_rows = [int(r) for r in np.nonzero(deg > self.HEAVY_ROW)[0]]
        del deg
        self.heavy = [(r, int(indptr[r]), int(indptr[r + 1]))
                      for r in heavy_rows]
        # blocked plans cover the runs of rows between heavy ones, in place
        edges_of_runs = [0] + [e for r in heavy_rows for e in (r, r + 1)] + [n]
        self.plans = []
        for a, b in zip(edges_of_runs[0::2], edges_of_runs[1::2]):
            if a >= b:
                continue
            if indptr[b] - indptr[a] <= block_entries:
                cuts = [a, b]
            else:
                cuts = [a]
                while cuts[-1] < b:
                    nxt = int(np.searchsorted(
                        indptr, indptr[cuts[-1]] + block_entries,
                        side="right")) - 1
                    cuts.append(min(b, max(nxt, cuts[-1] + 1)))
            for r0, r1 in zip(cuts[:-1], cuts[1:]):
                lo, hi = int(indptr[r0]), int(indptr[r1])
                starts = (indptr[r0:r1] - lo).astype(np.int64)
                row_deg = np.diff(indptr[r0:r1 + 1])
                nz = None
                if (row_deg == 0).any():
                    nz = np.nonzero(row_deg)[0]
                    starts = starts[nz]
                self.plans.append((r0, r1, lo, hi, starts, nz))

    def __call__(self, x: np.ndarray, out: np.ndarray) -> np.ndarray:
        for r0, r1, lo, hi, starts, nz in self.plans:
            gathered = x[self.indices[lo:hi]]
            if nz is None:
                out[r0:r1] = np.add.reduceat(gathered, starts)
            else:
                out[r0:r1] = 0.0
                if gathered.shape[0]:
                    out[r0:r1][nz] = np.add.reduceat(gathered, starts)
        for r, lo, hi in self.heavy:
            out[r] = np.sum(x[self.indices[lo:hi]])
        return out


def _power_iteration(indptr, indices, n: int, tol: float,
                     cap: int) -> SpectralResult:
    mv = _CsrMatvec(indptr, indices)
    x = np.full(n, 1.0 / math.sqrt(n))
    z = np.empty(n)
    tmp = np.empty(n)
    rq = 0.0
    res = math.inf
    floor = math.inf
    stalled = 0
    for it in range(cap + 1):
        mv(x, z)
        # np.sum is a pairwise reduction; a BLAS dot accumulates nearly
        # sequentially and its O(eps*n*rho) error would floor the residual
        np.multiply(x, z, out=tmp)
        rq = float(np.sum(tmp))
        np.multiply(x, rq, out=tmp)
        np.subtract(z, tmp, out=tmp)
        xmax = float(x.max())
        res = float(np.max(np.abs(tmp))) / xmax
        if res <= tol * max(1.0, rq):
            return SpectralResult(rho=rq, perron=x / xmax, residual=res,
                                  iterations=it)
        # the residual of an exactly-converged vector is not zero in float64
        # (row sums round); once it plateaus above tol, more iterations only
        # burn time, so fail fast with the best iterate attached
        if res < 0.9 * floor:
            floor, stalled = res, 0
        else:
            stalled += 1
            if stalled >= 60:
                raise NonConvergenceError(
                    f"residual stalled at {res:.3e} after {it} iterations; "
                    f"tolerance {tol:g} is below the rounding floor at this "
                    f"size", best=SpectralResult(rho=rq, perron=x / xmax,
                                                 residual=res, iterations=it))
        # shift tracks the Rayleigh estimate: any positive value converges,
        # but rq/2 keeps the most negative eigenvalue of A + shift*I well
        # inside the top one, which a fixed small shift cannot do for the
        # nearly-bipartite join families
        shift = max(1.0, rq / 2.0)
        z += shift * x
        nrm = float(np.linalg.norm(z))
        np.multiply(z, 1.0 / nrm, out=z)
        x, z = z, x
    best = SpectralResult(rho=rq, perron=x / float(x.max()), residual=res,
                          iterations=cap)
    raise NonConvergenceError(
        f"no convergence within {cap} iterations (residual {res:.3e})",
        best=best)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL,
                    cap: int = ITERATION_CAP) -> SpectralResult:
    """Largest adjacency eigenvalue with its eigenvector.

    Deterministic (all-ones start); disconnected inputs are handled per
    component and the reported vector is supported on a maximizing component.
    """
    if not tol > 0.0:
        raise PreconditionError("tolerance must be positive")
    n = g.n
    if g.m == 0:
        return SpectralResult(rho=0.0, perron=np.ones(n), residual=0.0,
                              iterations=0)
    # a dominating vertex certifies connectivity without a components pass —
    # this is every large graph this package builds
    if n == 1 or int(g.degrees().max()) == n - 1:
        count, labels = 1, None
    else:
        count, labels = g.component_labels()
    if count == 1:
        indptr, indices = g.csr()
        return _power_iteration(indptr, indices, n, tol, cap)
    # per-component solve keeps near-tied components from stalling a global
    # iteration; the winner's vector is scattered back, zeros elsewhere
    best: SpectralResult | None = None
    best_comp = None
    iterations = 0
    for c in range(count):
        comp = np.nonzero(labels == c)[0]
        if comp.shape[0] == 1:
            sub = SpectralResult(0.0, np.ones(1), 0.0, 0)
        else:
            sub_g = g.induced_subgraph(comp)
            if sub_g.m == 0:
                sub = SpectralResult(0.0, np.ones(sub_g.n), 0.0, 0)
            else:
                indptr, indices = sub_g.csr()
                sub = _power_iteration(indptr, indices, sub_g.n, tol, cap)
        iterations += sub.iterations
        if best is None or sub.rho > best.rho:
            best, best_comp = sub, comp
    perron = np.zeros(n)
    perron[best_comp] = best.perron
    return SpectralResult(rho=best.rho, perron=perron, residual=best.residual,
                          iterations=iterations)


def rayleigh_delta(g: Graph, x: np.ndarray, add, delete) -> float:
    """Sign certificate for an edge switch: (2/x.x)(sum_add - sum_del) of
    Perron-entry products.  Positive means the switch strictly raises rho.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise PreconditionError("vector length must equal the graph order")
    if not (x > 0).all():
        raise PreconditionError("vector must be strictly positive")
    add = [(int(u), int(v)) for u, v in add]
    delete = [(int(u), int(v)) for u, v in delete]
    for u, v in add:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise PreconditionError(f"bad edge ({u},{v})")
        if g.has_edge(u, v):
            raise PreconditionError(f"edge ({u},{v}) to add already present")
    if len({tuple(sorted(e)) for e in add}) != len(add):
        raise PreconditionError("duplicate edges in the add set")
    for u, v in delete:
        if not g.has_edge(u, v):
            raise PreconditionError(f"edge ({u},{v}) to delete is absent")
    gain = sum(x[u] * x[v] for u, v in add)
    loss = sum(x[u] * x[v] for u, v in delete)
    return float(2.0 * (gain - loss) / (x @ x))
