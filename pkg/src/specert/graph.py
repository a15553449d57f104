"""Undirected simple graphs stored as tuples of neighbour bitmasks.

Vertex ``v``'s neighbourhood is the integer ``adj[v]`` whose bit ``u`` is set
iff ``u`` and ``v`` are adjacent. Every analytic routine in the package works on
this representation directly, which keeps the exhaustive small-graph sweeps
cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np


def _bits_slow(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_TABLE_BITS = 12
_BITS = [_bits_slow(m) for m in range(1 << _TABLE_BITS)]


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < 4096:
        return _BITS[mask]
    return _bits_slow(mask)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} neighbourhoods, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full or nb < 0:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee a symmetric irreflexive relation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        adj = tuple(sum(1 << u for u in range(n) if a[v, u]) for v in range(n))
        return cls(n, adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            adj.append(sum(1 << pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph._trusted(len(vs), tuple(adj))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = sum(1 << perm[u] for u in bits(self.adj[v]))
        return Graph._trusted(self.n, tuple(adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors -----------------------------------------------------------

def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph._trusted(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g2``'s vertices are shifted up by ``g1.n``."""
    shift = g1.n
    return Graph._trusted(g1.n + g2.n, g1.adj + tuple(nb << shift for nb in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    shift = g1.n
    left = ((1 << g1.n) - 1)
    right = ((1 << g2.n) - 1) << shift
    adj = tuple(nb | right for nb in g1.adj) + tuple((nb << shift) | left for nb in g2.adj)
    return Graph._trusted(g1.n + g2.n, adj)


# -- predicates ---------------------------------------------------------------

def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the null graph is undefined")
    return min(nb.bit_count() for nb in g.adj)


def reach(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, allowed: Optional[int] = None) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced on ``allowed``."""
    left = g.full_mask if allowed is None else allowed
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g.adj, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph, allowed: Optional[int] = None) -> bool:
    left = g.full_mask if allowed is None else allowed
    if not left:
        return True
    v = (left & -left).bit_length() - 1
    return reach(g.adj, v, left) == left


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if every vertex has the same degree, else ``None``."""
    if g.n == 0:
        return None
    degs = {nb.bit_count() for nb in g.adj}
    return degs.pop() if len(degs) == 1 else None


@dataclass(frozen=True)
class BipartitionWitness:
    side_x: frozenset
    side_y: frozenset
    deg_x: int
    deg_y: int


def two_coloring(g: Graph, allowed: Optional[int] = None) -> Optional[list[tuple[int, int]]]:
    """Per-component colour classes ``(a, b)`` as bitmasks, or ``None`` if not bipartite."""
    out = []
    for comp in components(g, allowed):
        v = (comp & -comp).bit_length() - 1
        a, b = 1 << v, 0
        frontier, side = 1 << v, 0
        seen = frontier
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            nxt &= comp
            if side == 0 and nxt & a or side == 1 and nxt & b:
                return None
            nxt &= ~seen
            seen |= nxt
            side ^= 1
            if side:
                b |= nxt
            else:
                a |= nxt
            frontier = nxt
        out.append((a, b))
    return out


def is_semiregular_bipartite(g: Graph) -> Optional[BipartitionWitness]:
    """Bipartition with uniform degree on each side, or ``None``.

    Isolated vertices are not allowed. When several components are present the
    sides of each component are oriented so that the degrees agree globally.
    """
    if g.n == 0 or min_degree(g) == 0:
        return None
    coloring = two_coloring(g)
    if coloring is None:
        return None
    deg = g.degrees()

    def side_degree(mask):
        ds = {deg[v] for v in bits(mask)}
        return ds.pop() if len(ds) == 1 else None

    oriented = []
    for a, b in coloring:
        da, db = side_degree(a), side_degree(b)
        if da is None or db is None:
            return None
        oriented.append((a, b, da, db))
    dx, dy = oriented[0][2], oriented[0][3]
    side_x = side_y = 0
    for a, b, da, db in oriented:
        if (da, db) == (dx, dy):
            side_x |= a
            side_y |= b
        elif (da, db) == (dy, dx):
            side_x |= b
            side_y |= a
        else:
            return None
    return BipartitionWitness(frozenset(bits(side_x)), frozenset(bits(side_y)), dx, dy)
