"""The k-closure operator and the closure parameter attached to each property."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, bits
from .params import Theorem, TheoremParams


@dataclass(frozen=True, eq=False)
class ClosureResult:
    closed: Graph
    added_edges: list[tuple[int, int]] = field(default_factory=list)
    k: int = 0

    # The log is order dependent; only the closed graph is canonical.
    def __eq__(self, other):
        if not isinstance(other, ClosureResult):
            return NotImplemented
        return self.closed == other.closed and self.k == other.k

    def __hash__(self):
        return hash((self.closed, self.k))


def k_closure(g: Graph, k: int, rng: Optional[random.Random] = None) -> ClosureResult:
    """Join nonadjacent pairs with degree sum >= k until none remain.

    ``rng`` shuffles the initial scan order; the result is the same for every
    order, which the tests exercise.
    """
    if k < 0:
        raise ValueError("closure parameter must be nonnegative")
    n = g.n
    adj = list(g.adj)
    deg = [nb.bit_count() for nb in adj]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not adj[u] >> v & 1]
    if rng is not None:
        rng.shuffle(pairs)
    work = deque(pairs)
    added = []
    while work:
        u, v = work.popleft()
        if adj[u] >> v & 1 or deg[u] + deg[v] < k:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        added.append((u, v) if u < v else (v, u))
        full = (1 << n) - 1
        for x in (u, v):
            # Pairs at x may have crossed the threshold.
            for w in bits(full & ~adj[x] & ~(1 << x)):
                work.append((x, w))
    return ClosureResult(Graph._trusted(n, tuple(adj)), added, k)


def closure_parameter_for(theorem: Theorem, n: int, s_or_beta: int) -> int:
    if theorem in (Theorem.S_CONN, Theorem.S_EDGE_CONN):
        return n + s_or_beta - 2
    if theorem is Theorem.DEFICIENT:
        return n - s_or_beta - 1
    if theorem is Theorem.PATH_COVER:
        return n - s_or_beta
    return n + s_or_beta


def closure_parameter(params: TheoremParams, n: int) -> int:
    return closure_parameter_for(params.theorem, n, params.s_or_beta)
