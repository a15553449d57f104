"""Exceptional graph families: generators, membership search and witness checks.

EP: ``G1 v G2`` with ``G1`` r-regular of order ``n-k+r`` and ``G2`` any graph on
``k-r`` vertices.

EC / ES: ``complement(F) v G2`` where ``F = (X, Y)`` is semi-regular bipartite
with degree ``a`` on X and ``n-k-1`` on Y; ``a = k-s+2`` for EC and ``a = k-s``
for ES. Writing ``|X| = n-k-1+m`` and ``|Y| = a+t``, the join part has
``s-1-(m+t)`` (EC) or ``s+1-(m+t)`` (ES) vertices, so the family's ``r`` is
``m + t``.

UnionCliques: ``K_{k+1} + K_{n-k-1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import (Graph, bits, complement, complete, components, empty, is_regular,
                    join, min_degree, two_coloring, union)
from .params import Theorem, TheoremParams

MEMBERSHIP_CAP = 16


class Family(enum.Enum):
    EP = "EP"
    EC = "EC"
    ES = "ES"
    UNION_CLIQUES = "UnionCliques"


class MembershipCapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"membership search capped at n={cap}, got n={n}")
        self.cap = cap


@dataclass(frozen=True)
class FamilyWitness:
    family: Family
    core: frozenset
    join_part: frozenset
    r: int
    m: Optional[int] = None
    t: Optional[int] = None
    side_x: Optional[frozenset] = None


# -- generators -----------------------------------------------------------------

def circulant_regular(order: int, r: int) -> Graph:
    """r-regular circulant on ``order`` vertices: offsets 1..r//2, plus the antipode for odd r."""
    if not 0 <= r < max(order, 1):
        raise ValueError(f"no {r}-regular graph on {order} vertices")
    if r % 2 and order % 2:
        raise ValueError(f"odd degree {r} needs an even order, got {order}")
    edges = set()
    for i in range(order):
        for d in range(1, r // 2 + 1):
            j = (i + d) % order
            edges.add((min(i, j), max(i, j)))
        if r % 2:
            j = (i + order // 2) % order
            edges.add((min(i, j), max(i, j)))
    g = Graph.from_edges(order, edges)
    if is_regular(g) != r and order > 0:
        raise ValueError(f"circulant construction is not {r}-regular for order {order}")
    return g


def _mask_graph(order: int, g2_edges: Optional[int]) -> Graph:
    if g2_edges is None:
        return complete(order)
    pairs = list(combinations(range(order), 2))
    if g2_edges >> len(pairs):
        raise ValueError(f"edge mask selects pairs beyond K_{order}")
    return Graph.from_edges(order, [p for i, p in enumerate(pairs) if g2_edges >> i & 1])


def gen_EP(n: int, k: int, r: int, core: Optional[Graph] = None,
           g2: Optional[Graph] = None, g2_edges: Optional[int] = None) -> Graph:
    """``core v g2``; the defaults are a circulant core and a complete ``g2``."""
    if not 0 <= r <= k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    order = n - k + r
    if core is None:
        core = circulant_regular(order, r)
    if core.n != order:
        raise ValueError(f"core must have order n-k+r={order}, got {core.n}")
    if order and is_regular(core) != r:
        raise ValueError(f"core is not {r}-regular")
    if g2 is None:
        g2 = _mask_graph(k - r, g2_edges)
    if g2.n != k - r:
        raise ValueError(f"join part must have k-r={k - r} vertices, got {g2.n}")
    return join(core, g2)


def biregular_bipartite(nx_: int, ny: int, dx: int, dy: int) -> Graph:
    """Bipartite graph, X = 0..nx-1 with degree dx and Y = nx.. with degree dy.

    Uses K_{nx,ny} when it fits, otherwise the cyclic rule joining X vertex i
    to Y vertices (i*dx + j) mod ny, and validates the result.
    """
    if nx_ * dx != ny * dy:
        raise ValueError(f"handshake fails: {nx_}*{dx} != {ny}*{dy}")
    if dx > ny or dy > nx_ or dx < 0 or dy < 0:
        raise ValueError("side degrees exceed the opposite side")
    if dx == ny and dy == nx_:
        return join(empty(nx_), empty(ny))
    edges = set()
    for i in range(nx_):
        for j in range(dx):
            edges.add((i, nx_ + (i * dx + j) % ny))
    g = Graph.from_edges(nx_ + ny, edges)
    deg = g.degrees()
    if any(deg[i] != dx for i in range(nx_)) or any(deg[nx_ + j] != dy for j in range(ny)):
        raise ValueError("cyclic construction did not produce a biregular graph")
    return g


def _gen_bipartite_family(n, k, s, m, t, f, g2_edges, g2, x_degree, join_size) -> Graph:
    nx_, ny = n - k - 1 + m, x_degree + t
    if m < 0 or t < 0:
        raise ValueError("m and t must be nonnegative")
    if join_size < 0:
        raise ValueError(f"join part size {join_size} is negative")
    if nx_ + ny + join_size != n:
        raise ValueError("part sizes do not add up to n")
    if f is None:
        f = biregular_bipartite(nx_, ny, x_degree, n - k - 1)
    else:
        if f.n != nx_ + ny:
            raise ValueError(f"bipartite part must have {nx_ + ny} vertices, got {f.n}")
        deg = f.degrees()
        xs, ys = range(nx_), range(nx_, nx_ + ny)
        if any(deg[v] != x_degree for v in xs) or any(deg[v] != n - k - 1 for v in ys):
            raise ValueError("supplied bipartite graph has the wrong side degrees")
        xmask = (1 << nx_) - 1
        if any(f.adj[v] & xmask for v in xs) or any(f.adj[v] & ~xmask for v in ys):
            raise ValueError("supplied graph is not bipartite on the expected sides")
    if g2 is None:
        g2 = _mask_graph(join_size, g2_edges)
    if g2.n != join_size:
        raise ValueError(f"join part must have {join_size} vertices, got {g2.n}")
    return join(complement(f), g2)


def gen_EC(n: int, k: int, s: int, m: int = 0, t: int = 0, f: Optional[Graph] = None,
           g2_edges: Optional[int] = None, g2: Optional[Graph] = None) -> Graph:
    return _gen_bipartite_family(n, k, s, m, t, f, g2_edges, g2, k - s + 2, s - 1 - m - t)


def gen_ES(n: int, k: int, s: int, m: int = 0, t: int = 0, f: Optional[Graph] = None,
           g2_edges: Optional[int] = None, g2: Optional[Graph] = None) -> Graph:
    return _gen_bipartite_family(n, k, s, m, t, f, g2_edges, g2, k - s, s + 1 - m - t)


def gen_union_cliques(n: int, k: int) -> Graph:
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    return union(complete(k + 1), complete(n - k - 1))


# -- membership --------------------------------------------------------------------

def _x_degree(family: Family, k: int, s: int) -> int:
    return k - s + 2 if family is Family.EC else k - s


def _find_ep(g: Graph, k: int) -> Optional[FamilyWitness]:
    n = g.n
    deg = g.degrees()
    for r in range(0, k + 1):
        order, jsize = n - k + r, k - r
        if order <= 0 or order > n:
            continue
        forced = [v for v in range(n) if deg[v] != k]
        if len(forced) > jsize:
            continue
        # A join vertex sees the whole core, so it needs degree >= order.
        optional = [v for v in range(n) if deg[v] == k and k >= order]
        for extra in combinations(optional, jsize - len(forced)):
            jmask = 0
            for v in forced:
                jmask |= 1 << v
            for v in extra:
                jmask |= 1 << v
            cmask = g.full_mask & ~jmask
            if all(g.adj[v] & cmask == cmask for v in bits(jmask)) and \
                    all((g.adj[v] & cmask).bit_count() == r for v in bits(cmask)):
                return FamilyWitness(Family.EP, frozenset(bits(cmask)), frozenset(bits(jmask)), r)
    return None


def _find_bipartite_family(g: Graph, family: Family, k: int, s: int) -> Optional[FamilyWitness]:
    n = g.n
    dx, dy = _x_degree(family, k, s), n - k - 1
    if dx < 1 or dy < 1:
        return None
    gc = complement(g)
    cdeg = gc.degrees()
    side_x = core = 0
    for comp in components(gc):
        if comp.bit_count() < 2:
            continue
        coloring = two_coloring(gc, comp)
        if coloring is None:
            continue
        (a, b), = coloring
        da = {cdeg[v] for v in bits(a)}
        db = {cdeg[v] for v in bits(b)}
        if da == {dx} and db == {dy}:
            side_x |= a
        elif da == {dy} and db == {dx}:
            side_x |= b
        else:
            continue
        core |= comp
    if not core:
        return None
    jmask = g.full_mask & ~core
    m = side_x.bit_count() - dy
    t = (core & ~side_x).bit_count() - dx
    jsize = (s - 1 if family is Family.EC else s + 1) - (m + t)
    if m < 0 or t < 0 or jsize < 0 or jsize != jmask.bit_count():
        return None
    return FamilyWitness(family, frozenset(bits(core)), frozenset(bits(jmask)), m + t, m, t,
                         frozenset(bits(side_x)))


def _find_union_cliques(g: Graph, k: int) -> Optional[FamilyWitness]:
    n = g.n
    if not 0 <= k <= n - 1:
        return None
    comps = components(g)
    sizes = sorted(c.bit_count() for c in comps)
    if sorted(x for x in (k + 1, n - k - 1) if x) != sizes:
        return None
    for c in comps:
        if any(g.adj[v] != c & ~(1 << v) for v in bits(c)):
            return None
    first = next(c for c in comps if c.bit_count() == k + 1)
    return FamilyWitness(Family.UNION_CLIQUES, frozenset(bits(first)),
                         frozenset(bits(g.full_mask & ~first)), k + 1)


def membership(g: Graph, family: Family, params: TheoremParams,
               cap: int = MEMBERSHIP_CAP) -> Optional[FamilyWitness]:
    """Witness that ``g`` lies in ``family`` for the given parameters, or ``None``.

    The minimum-degree hypothesis ``delta(g) >= k`` is part of membership.
    """
    if g.n > cap:
        raise MembershipCapExceeded(g.n, cap)
    if g.n == 0 or min_degree(g) < params.k:
        return None
    if family is Family.EP:
        return _find_ep(g, params.k)
    if family is Family.UNION_CLIQUES:
        return _find_union_cliques(g, params.k)
    if params.s is None:
        raise ValueError(f"{family.value} needs s")
    return _find_bipartite_family(g, family, params.k, params.s)


# -- witness re-validation ------------------------------------------------------------

def validate_witness(g: Graph, w: FamilyWitness, params: TheoremParams) -> bool:
    """Check a witness against the family definition directly, without the search code."""
    n, k = g.n, params.k
    core, jp = set(w.core), set(w.join_part)
    if core & jp or core | jp != set(range(n)):
        return False
    if any(g.degree(v) < k for v in range(n)):
        return False
    cross = all(g.has_edge(u, v) for u in core for v in jp)
    no_cross = not any(g.has_edge(u, v) for u in core for v in jp)
    if w.family is Family.UNION_CLIQUES:
        sizes = sorted((len(core), len(jp)))
        return (no_cross and sizes == sorted((k + 1, n - k - 1))
                and all(g.has_edge(u, v) for part in (core, jp) for u in part for v in part if u != v))
    if not cross:
        return False
    if w.family is Family.EP:
        if len(core) != n - k + w.r or len(jp) != k - w.r or not 0 <= w.r <= k:
            return False
        return all(sum(g.has_edge(u, v) for v in core) == w.r for u in core)
    s = params.s
    dx, dy = _x_degree(w.family, k, s), n - k - 1
    xs = set(w.side_x or ())
    ys = core - xs
    if not xs <= core:
        return False
    # Complement of the core: edges only across X/Y, with the right degrees.
    for u in core:
        non = [v for v in core if v != u and not g.has_edge(u, v)]
        if any((v in xs) == (u in xs) for v in non):
            return False
        if len(non) != (dx if u in xs else dy):
            return False
    m, t = len(xs) - dy, len(ys) - dx
    extra = s - 1 if w.family is Family.EC else s + 1
    return (m, t) == (w.m, w.t) and w.r == m + t and len(jp) == extra - w.r >= 0 \
        and len(core) == (n - s + 1 if w.family is Family.EC else n - s - 1) + w.r


def families_for(params: TheoremParams) -> list[Family]:
    """Exceptional families named in the theorem's conclusion, in search order."""
    t = params.theorem
    if t in (Theorem.S_CONN, Theorem.S_EDGE_CONN):
        return [Family.EP, Family.EC]
    if t in (Theorem.S_HAM, Theorem.S_EDGE_HAM):
        return [Family.EP, Family.ES]
    # The clique union is a single graph and the more specific description, so
    # it is reported ahead of EP when both apply (K_{k+1} + K_{n-k-1} can be
    # k-regular and then lies in EP with an empty join part).
    if t is Theorem.DEFICIENT:
        return [Family.UNION_CLIQUES, Family.EP] if params.beta == 0 else [Family.EP]
    return [Family.UNION_CLIQUES, Family.EP] if params.s == 1 else [Family.EP]
