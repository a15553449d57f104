"""Adjacency spectral radius and comparison against integer-radicand bounds.

The radius is found by the power method on ``A + n*I``. Shifting by ``n``
makes every eigenvalue positive, so the dominant one is ``mu + n`` and the
bipartite +mu/-mu oscillation disappears. Powers are taken by repeated
squaring (iteration ``j`` applies the matrix ``2**j`` times), which keeps
the loop count logarithmic even for nearly degenerate spectra, and the whole
thing is vectorised over a stack of same-order matrices so that exhaustive
sweeps can push millions of graphs through it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, bits

DEFAULT_TOL = 1e-10
DEFAULT_BAND = 1e-6
MAX_SQUARINGS = 64
START_PERTURBATION = 1e-4


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    residual: float
    iterations: int
    shift: float


class SpectralConvergenceError(ArithmeticError):
    def __init__(self, estimate: SpectralEstimate):
        super().__init__(f"power iteration did not converge (best estimate {estimate.value!r})")
        self.estimate = estimate


class Verdict(enum.Enum):
    BELOW = "Below"
    EQUAL = "Equal"
    ABOVE = "Above"


@dataclass(frozen=True)
class BoundComparison:
    verdict: Verdict
    mu_squared: float
    radicand: int


def _start_vector(n: int) -> np.ndarray:
    return 1.0 + START_PERTURBATION * np.arange(n, dtype=np.float64)


def spectral_radius_batch(adjacency: np.ndarray, tol: float = DEFAULT_TOL):
    """Largest eigenvalue of each matrix in a ``(B, n, n)`` stack of 0/1 adjacency matrices.

    Returns ``(values, residuals, iterations, converged)`` arrays. Each entry is
    frozen at the first squaring where its Rayleigh quotient moved by less than
    ``tol / 4``, so a matrix's result does not depend on its batch mates.
    """
    a = np.asarray(adjacency, dtype=np.float64)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError("expected a (B, n, n) stack")
    if tol <= 0:
        raise ValueError("tol must be positive")
    batch, n = a.shape[0], a.shape[1]
    values = np.zeros(batch)
    residuals = np.zeros(batch)
    iterations = np.zeros(batch, dtype=np.int64)
    converged = np.zeros(batch, dtype=bool)
    if batch == 0 or n == 0:
        converged[:] = True
        return values, residuals, iterations, converged

    v0 = _start_vector(n)
    m = a + n * np.eye(n)
    prev = np.full(batch, -np.inf)
    active = np.arange(batch)
    for it in range(1, MAX_SQUARINGS + 1):
        m = m @ m
        m /= m.max(axis=(1, 2), keepdims=True)
        x = m @ v0
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        ax = np.einsum("bij,bj->bi", a[active], x)
        rho = np.einsum("bi,bi->b", x, ax)
        res = np.abs(ax - rho[:, None] * x).max(axis=1)
        done = np.abs(rho - prev) <= tol / 4
        idx = active[done]
        values[idx] = rho[done]
        residuals[idx] = res[done]
        iterations[idx] = it
        converged[idx] = True
        keep = ~done
        values[active[keep]] = rho[keep]
        residuals[active[keep]] = res[keep]
        iterations[active[keep]] = it
        if not keep.any():
            break
        active, m, prev = active[keep], m[keep], rho[keep]
    np.clip(values, 0.0, None, out=values)
    return values, residuals, iterations, converged


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    if g.n < 1:
        raise ValueError("spectral radius of the null graph is undefined")
    values, residuals, iterations, converged = spectral_radius_batch(
        g.adjacency_matrix()[None], tol)
    est = SpectralEstimate(float(values[0]), float(residuals[0]), int(iterations[0]), float(g.n))
    if not converged[0]:
        raise SpectralConvergenceError(est)
    return est


def min_edge_geometric_degree(g: Graph) -> float:
    """Minimum of sqrt(d(u) d(v)) over the edges ``uv`` of ``g``."""
    deg = g.degrees()
    best = None
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            p = deg[u] * deg[v]
            if best is None or p < best:
                best = p
    if best is None:
        raise ValueError("graph has no edges")
    return math.sqrt(best)


def compare_to_bound(est: SpectralEstimate, radicand: int, band: float = DEFAULT_BAND) -> BoundComparison:
    """Compare ``est.value**2`` with an integer radicand, treating a band around it as equality."""
    if radicand < 0:
        raise ValueError("radicand must be nonnegative")
    mu2 = est.value * est.value
    diff = mu2 - radicand
    if abs(diff) <= band:
        verdict = Verdict.EQUAL
    elif diff < -band:
        verdict = Verdict.BELOW
    else:
        verdict = Verdict.ABOVE
    return BoundComparison(verdict, mu2, radicand)


def adjacency_stack(graphs: Sequence[Graph]) -> np.ndarray:
    n = graphs[0].n
    out = np.zeros((len(graphs), n, n))
    for b, g in enumerate(graphs):
        if g.n != n:
            raise ValueError("all graphs in a stack must share the same order")
        for u, v in g.edges():
            out[b, u, v] = out[b, v, u] = 1.0
    return out
