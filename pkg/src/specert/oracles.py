"""Exact deciders for the six graph properties, each returning a checkable witness.

All of these are exponential-time and meant for desk-scale graphs.
Conventions the definitions leave open:

* a graph on fewer than 3 vertices has no cycle and so is not Hamiltonian;
  consequently ``is_s_hamiltonian(g, s)`` is false whenever ``n - s < 3``;
* the complete graph K_n is (n-1)-connected but not n-connected;
* in the s-edge-Hamiltonian check the empty path system counts, so the
  property includes plain Hamiltonicity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Optional

from .graph import Graph, bits, is_connected, min_degree
from .params import Theorem

EXACT_CAP = 18
EDGE_HAM_CAP = 4
FLOW_THRESHOLD = 12


class OracleCapExceeded(ValueError):
    def __init__(self, what: str, cap: int, got: int):
        super().__init__(f"{what}: size cap {cap} exceeded (got {got})")
        self.cap = cap


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class TooFewVertices:
    n: int
    required: int


@dataclass(frozen=True)
class VertexCut:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MatchingWitness:
    matching: tuple[tuple[int, int], ...]
    unmatched: tuple[int, ...]
    barrier: tuple[int, ...]


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HamiltonianCycle:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class DeletionSet:
    removed: tuple[int, ...]


@dataclass(frozen=True)
class PathSystem:
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class OracleVerdict:
    prop: Theorem
    param: int
    holds: bool
    witness: Any = None
    value: Optional[int] = None


def _check_cap(g: Graph, what: str, cap: int = EXACT_CAP):
    if g.n > cap:
        raise OracleCapExceeded(what, cap, g.n)


# -- connectivity --------------------------------------------------------------

def _separates(g: Graph, removed: int) -> bool:
    rest = g.full_mask & ~removed
    return rest.bit_count() >= 2 and not is_connected(g, rest)


def find_vertex_cut(g: Graph, below: int) -> Optional[tuple[int, ...]]:
    """Smallest disconnecting vertex set of size < ``below``, first in lexicographic order."""
    for size in range(0, min(below, g.n)):
        for combo in combinations(range(g.n), size):
            removed = 0
            for v in combo:
                removed |= 1 << v
            if _separates(g, removed):
                return combo
    return None


def _is_complete(g: Graph) -> bool:
    return all(nb.bit_count() == g.n - 1 for nb in g.adj)


def _max_flow(cap: dict, source, sink):
    """Unit-capacity Edmonds-Karp on a residual dict-of-dicts. Returns (value, source side)."""
    flow = 0
    while True:
        parent = {source: None}
        q = deque([source])
        while q and sink not in parent:
            x = q.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    q.append(y)
        if sink not in parent:
            return flow, set(parent)
        y = sink
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1


def vertex_connectivity_flow(g: Graph) -> tuple[int, Optional[tuple[int, ...]]]:
    """Vertex connectivity by max-flow on the split graph, with a minimum cut."""
    n = g.n
    if n == 0:
        raise ValueError("connectivity of the null graph is undefined")
    if _is_complete(g):
        return n - 1, None
    best, best_cut = n - 1, None
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            cap = {}
            for x in range(n):
                cap.setdefault((x, 0), {})[(x, 1)] = 1 if x not in (u, v) else n
                cap.setdefault((x, 1), {})
                for y in bits(g.adj[x]):
                    cap[(x, 1)][(y, 0)] = n
            value, side = _max_flow(cap, (u, 1), (v, 0))
            if value < best:
                best = value
                best_cut = tuple(sorted(x for x in range(n) if (x, 0) in side and (x, 1) not in side))
    return best, best_cut


def vertex_connectivity(g: Graph) -> int:
    return _vertex_connectivity(g)[0]


def _vertex_connectivity(g: Graph) -> tuple[int, Optional[tuple[int, ...]]]:
    if g.n == 0:
        raise ValueError("connectivity of the null graph is undefined")
    if _is_complete(g):
        return g.n - 1, None
    if g.n > FLOW_THRESHOLD:
        return vertex_connectivity_flow(g)
    delta = min_degree(g)
    cut = find_vertex_cut(g, delta)
    if cut is not None:
        return len(cut), cut
    v = g.degrees().index(delta)
    return delta, tuple(bits(g.adj[v]))


def is_s_connected(g: Graph, s: int) -> OracleVerdict:
    kappa, cut = _vertex_connectivity(g)
    return _s_connected_verdict(g, s, kappa, cut)


def _s_connected_verdict(g, s, kappa, cut):
    if g.n <= s:
        return OracleVerdict(Theorem.S_CONN, s, False, TooFewVertices(g.n, s + 1), kappa)
    if kappa < s:
        return OracleVerdict(Theorem.S_CONN, s, False, VertexCut(cut), kappa)
    return OracleVerdict(Theorem.S_CONN, s, True, None, kappa)


def _cut_edges(g: Graph, side: int) -> tuple[tuple[int, int], ...]:
    out = []
    for u in bits(side):
        for v in bits(g.adj[u] & ~side):
            out.append((min(u, v), max(u, v)))
    return tuple(sorted(out))


def edge_connectivity_flow(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    best, best_side = None, 0
    for t in range(1, g.n):
        cap = {x: {y: 1 for y in bits(g.adj[x])} for x in range(g.n)}
        value, side = _max_flow(cap, 0, t)
        if best is None or value < best:
            best = value
            best_side = sum(1 << x for x in side)
    return best, _cut_edges(g, best_side)


def _edge_connectivity(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if g.n > FLOW_THRESHOLD:
        return edge_connectivity_flow(g)
    n, adj = g.n, g.adj
    deg = [nb.bit_count() for nb in adj]
    # Vertex 0 stays on side S; the other vertices toggle in Gray-code order so
    # each step updates the cut size in O(1): adding v changes it by
    # deg(v) - 2|N(v) & S|.
    side, cut = 1, deg[0]
    best, best_side = cut, side
    full = g.full_mask
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length()
        b = 1 << v
        if side & b:
            side ^= b
            cut -= deg[v] - 2 * (adj[v] & side).bit_count()
        else:
            cut += deg[v] - 2 * (adj[v] & side).bit_count()
            side |= b
        if cut < best and side != full:
            best, best_side = cut, side
            if cut == 0:
                break
    return best, _cut_edges(g, best_side)


def edge_connectivity(g: Graph) -> int:
    return _edge_connectivity(g)[0]


def is_s_edge_connected(g: Graph, s: int) -> OracleVerdict:
    lam, cut = _edge_connectivity(g)
    return _s_edge_verdict(s, lam, cut)


def _s_edge_verdict(s, lam, cut):
    if lam < s:
        return OracleVerdict(Theorem.S_EDGE_CONN, s, False, EdgeCut(cut), lam)
    return OracleVerdict(Theorem.S_EDGE_CONN, s, True, None, lam)


# -- matching --------------------------------------------------------------------

def _matching_number(adj: tuple[int, ...], mask: int, memo: dict) -> int:
    if mask.bit_count() < 2:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    best = _matching_number(adj, rest, memo)
    cand = adj[v] & rest
    while cand:
        b = cand & -cand
        cand ^= b
        val = 1 + _matching_number(adj, rest ^ b, memo)
        if val > best:
            best = val
            if 2 * best >= mask.bit_count() - 1:
                break
    memo[mask] = best
    return best


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    memo: dict = {}
    mask = g.full_mask
    target = _matching_number(g.adj, mask, memo)
    out = []
    while target > 0:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if _matching_number(g.adj, rest, memo) == target:
            mask = rest
            continue
        for u in bits(g.adj[v] & rest):
            if 1 + _matching_number(g.adj, rest & ~(1 << u), memo) == target:
                out.append((v, u))
                mask = rest & ~(1 << u)
                target -= 1
                break
    return out


def deficiency(g: Graph) -> int:
    return g.n - 2 * _matching_number(g.adj, g.full_mask, {})


def tutte_berge_barrier(g: Graph) -> tuple[int, ...]:
    """Gallai-Edmonds set A: neighbours of the inessential vertices, outside them."""
    memo: dict = {}
    nu = _matching_number(g.adj, g.full_mask, memo)
    inessential = 0
    for v in range(g.n):
        if _matching_number(g.adj, g.full_mask & ~(1 << v), memo) == nu:
            inessential |= 1 << v
    a = 0
    for v in bits(inessential):
        a |= g.adj[v]
    return tuple(bits(a & ~inessential))


def is_beta_deficient(g: Graph, beta: int) -> OracleVerdict:
    matching = maximum_matching(g)
    d = g.n - 2 * len(matching)
    if d <= beta:
        return OracleVerdict(Theorem.DEFICIENT, beta, True, None, d)
    matched = {x for e in matching for x in e}
    unmatched = tuple(v for v in range(g.n) if v not in matched)
    w = MatchingWitness(tuple(matching), unmatched, tutte_berge_barrier(g))
    return OracleVerdict(Theorem.DEFICIENT, beta, False, w, d)


# -- path cover -------------------------------------------------------------------

def _path_cover_tables(g: Graph):
    # best[m]: fewest paths partitioning m; ends[m]: vertices that can end a path
    # in some optimal partition. Any vertex can end a path with one extra path
    # (split its path after it), so the optimum plus this end set is enough state.
    size = 1 << g.n
    best = [0] * size
    ends = [0] * size
    adj = g.adj
    for m in range(1, size):
        b = None
        e = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            prev = m ^ low
            val = best[prev] + (0 if adj[u] & ends[prev] else 1)
            if b is None or val < b:
                b, e = val, low
            elif val == b:
                e |= low
        best[m] = b
        ends[m] = e
    return best, ends


def hamiltonian_path(g: Graph) -> Optional[tuple[int, ...]]:
    """A spanning path, found as a Hamiltonian cycle of ``g`` plus a universal vertex."""
    if g.n == 1:
        return (0,)
    apex = g.n
    cone = Graph._trusted(g.n + 1, tuple(nb | 1 << apex for nb in g.adj) + (g.full_mask,))
    cyc = hamiltonian_cycle(cone)
    if cyc is None:
        return None
    i = cyc.index(apex)
    return cyc[i + 1:] + cyc[:i]


def minimum_path_cover(g: Graph) -> PathCover:
    _check_cap(g, "minimum path cover")
    if g.n == 0:
        return PathCover(())
    trace = hamiltonian_path(g)
    if trace is not None:
        return PathCover((trace,))
    best, ends = _path_cover_tables(g)
    mask = g.full_mask
    end = (ends[mask] & -ends[mask]).bit_length() - 1
    # Unwind: each step peels the last vertex of the path ending at `end`.
    steps = []
    while mask:
        prev = mask & ~(1 << end)
        link = g.adj[end] & ends[prev]
        if link:
            nxt = (link & -link).bit_length() - 1
            steps.append((end, nxt))
        else:
            nxt = (ends[prev] & -ends[prev]).bit_length() - 1 if prev else -1
            steps.append((end, None))
        mask, end = prev, nxt
    paths: list[list[int]] = []
    open_path: dict[int, list[int]] = {}
    for v, attach in reversed(steps):
        if attach is None:
            p = [v]
            paths.append(p)
        else:
            p = open_path.pop(attach)
            p.append(v)
        open_path[v] = p
    return PathCover(tuple(tuple(p) for p in paths))


def min_path_cover(g: Graph) -> int:
    _check_cap(g, "minimum path cover")
    return len(minimum_path_cover(g).paths)


def is_s_path_coverable(g: Graph, s: int) -> OracleVerdict:
    cover = minimum_path_cover(g)
    return OracleVerdict(Theorem.PATH_COVER, s, len(cover.paths) <= s, cover, len(cover.paths))


# -- Hamiltonian cycles --------------------------------------------------------------

def hamiltonian_cycle(g: Graph, allowed: Optional[int] = None,
                      required: Optional[list[tuple[int, int]]] = None) -> Optional[tuple[int, ...]]:
    """A Hamiltonian cycle of the subgraph induced on ``allowed`` using every ``required`` edge.

    Backtracking from the lowest vertex; a vertex with a required edge still
    unused must take it next.
    """
    W = g.full_mask if allowed is None else allowed
    size = W.bit_count()
    if size < 3:
        return None
    adj = tuple(nb & W for nb in g.adj)
    req = [0] * g.n
    for u, v in required or ():
        if not (adj[u] >> v & 1):
            return None
        req[u] |= 1 << v
        req[v] |= 1 << u
    for v in bits(W):
        if adj[v].bit_count() < 2 or req[v].bit_count() > 2:
            return None
    start = (W & -W).bit_length() - 1
    start_bit = 1 << start
    order = [start]

    def extend(cur: int, prev: int, visited: int) -> bool:
        if visited == W:
            if not adj[cur] & start_bit:
                return False
            # cur's and start's required edges must be the ones in use.
            if req[cur] & ~((1 << prev) | start_bit):
                return False
            return not req[start] & ~((1 << order[1]) | (1 << cur))
        need = req[cur] & ~(1 << prev) if prev >= 0 else req[cur]
        if prev >= 0 and need.bit_count() > 1:
            return False
        if need and prev >= 0:
            if need & visited:
                return False
            cand = need
        elif need:
            cand = need & -need
        else:
            cand = adj[cur] & ~visited
        unvisited = W & ~visited
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            nv = visited | b
            # Every other unvisited vertex still needs two usable neighbours;
            # only cur's neighbours lose one when cur becomes interior.
            if cur != start:
                avail = unvisited | start_bit
                ok = True
                for x in bits(adj[cur] & unvisited & ~b):
                    if (adj[x] & avail).bit_count() < 2:
                        ok = False
                        break
                if not ok:
                    continue
            order.append(w)
            if extend(w, cur, nv):
                return True
            order.pop()
        return False

    if extend(start, -1, start_bit):
        return tuple(order)
    return None


def is_hamiltonian(g: Graph) -> OracleVerdict:
    _check_cap(g, "Hamiltonicity")
    cyc = hamiltonian_cycle(g)
    if cyc is None:
        return OracleVerdict(Theorem.S_HAM, 0, False, DeletionSet(()))
    return OracleVerdict(Theorem.S_HAM, 0, True, HamiltonianCycle(cyc))


_SMALL_HAM: dict[tuple[int, int], bool] = {}
_SMALL_HAM_MAX = 6


def _ham_induced(g: Graph, allowed: int) -> bool:
    """Hamiltonicity of the subgraph induced on ``allowed``.

    Small subgraphs recur constantly across a sweep, so their answers are kept
    keyed by the edge set after relabelling ``allowed`` to 0..size-1.
    """
    size = allowed.bit_count()
    if size > _SMALL_HAM_MAX:
        return hamiltonian_cycle(g, allowed) is not None
    vs = bits(allowed)
    key = 0
    pos = 0
    adj = g.adj
    for i, u in enumerate(vs):
        row = adj[u]
        for v in vs[i + 1:]:
            if row >> v & 1:
                key |= 1 << pos
            pos += 1
    hit = _SMALL_HAM.get((size, key))
    if hit is None:
        hit = _SMALL_HAM[(size, key)] = hamiltonian_cycle(g, allowed) is not None
    return hit


def _deletion_sets(n: int, size: int):
    for combo in combinations(range(n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield combo, mask


def is_s_hamiltonian(g: Graph, s: int) -> OracleVerdict:
    _check_cap(g, "s-Hamiltonicity")
    for size in range(0, s + 1):
        for combo, mask in _deletion_sets(g.n, size):
            if not _ham_induced(g, g.full_mask & ~mask):
                return OracleVerdict(Theorem.S_HAM, s, False, DeletionSet(combo))
    return OracleVerdict(Theorem.S_HAM, s, True, None)


def linear_forests(g: Graph, size: int):
    """Edge sets of exactly ``size`` edges forming vertex-disjoint paths, lexicographic order."""
    edges = g.edges()
    m = len(edges)
    n = g.n

    def rec(start, chosen, deg, comp):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, m - (size - len(chosen)) + 1):
            u, v = edges[i]
            if deg[u] == 2 or deg[v] == 2:
                continue
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            deg[u] += 1
            deg[v] += 1
            relabeled = [j for j in range(n) if comp[j] == cv]
            for j in relabeled:
                comp[j] = cu
            chosen.append(edges[i])
            yield from rec(i + 1, chosen, deg, comp)
            chosen.pop()
            for j in relabeled:
                comp[j] = cv
            deg[u] -= 1
            deg[v] -= 1

    yield from rec(0, [], [0] * n, list(range(n)))


class _CycleCache:
    """Hamiltonian cycles found so far, as edge-set bitmasks, to skip repeat searches."""

    def __init__(self, g: Graph):
        self.g = g
        self.index = {e: i for i, e in enumerate(g.edges())}
        self.masks: list[int] = []

    def _mask(self, cyc):
        out = 0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out |= 1 << self.index[(min(a, b), max(a, b))]
        return out

    def extendable(self, forest) -> bool:
        want = 0
        for e in forest:
            want |= 1 << self.index[e]
        for m in self.masks:
            if m & want == want:
                return True
        cyc = hamiltonian_cycle(self.g, required=list(forest))
        if cyc is None:
            return False
        self.masks.append(self._mask(cyc))
        return True


def is_s_edge_hamiltonian(g: Graph, s: int, cap: int = EDGE_HAM_CAP) -> OracleVerdict:
    _check_cap(g, "s-edge-Hamiltonicity")
    if s > cap:
        raise OracleCapExceeded("s-edge-Hamiltonicity path budget", cap, s)
    cache = _CycleCache(g)
    for size in range(0, s + 1):
        for forest in linear_forests(g, size):
            if not cache.extendable(forest):
                return OracleVerdict(Theorem.S_EDGE_HAM, s, False, PathSystem(forest))
    return OracleVerdict(Theorem.S_EDGE_HAM, s, True, None)


# -- cached evaluation of one graph ----------------------------------------------------

class GraphOracles:
    """Answers every property query for one graph, sharing work between parameters.

    Connectivity, deficiency and path cover are computed once; the Hamiltonian
    checks advance level by level and remember how far they got.
    """

    def __init__(self, g: Graph, edge_ham_cap: int = EDGE_HAM_CAP):
        self.g = g
        self.edge_ham_cap = edge_ham_cap
        self._kappa = None
        self._lambda = None
        self._matching = None
        self._cover = None
        self._ham_level = -1       # all deletion sets of size <= level pass
        self._ham_fail = None      # first failing deletion set, once found
        self._eham_level = -1
        self._eham_fail = None
        self._cycles = None
        self._cycle = False        # False until searched; then a cycle or None

    def cycle(self) -> Optional[tuple[int, ...]]:
        """A Hamiltonian cycle of the whole graph, or ``None``."""
        if self._cycle is False:
            self._cycle = hamiltonian_cycle(self.g)
        return self._cycle

    def kappa(self):
        if self._kappa is None:
            self._kappa = _vertex_connectivity(self.g)
        return self._kappa

    def lam(self):
        if self._lambda is None:
            self._lambda = _edge_connectivity(self.g)
        return self._lambda

    def deficiency(self) -> int:
        if self._matching is None:
            cyc = self.cycle() if self.g.n >= 3 else None
            if cyc is not None:
                # Alternate cycle edges leave at most one vertex exposed.
                self._matching = [(cyc[i], cyc[i + 1]) for i in range(0, len(cyc) - 1, 2)]
            else:
                self._matching = maximum_matching(self.g)
        return self.g.n - 2 * len(self._matching)

    def path_cover(self) -> PathCover:
        if self._cover is None:
            cyc = self.cycle() if self.g.n >= 3 else None
            if cyc is not None:
                self._cover = PathCover((tuple(cyc),))
            else:
                self._cover = minimum_path_cover(self.g)
        return self._cover

    def ham_holds(self, s: int) -> bool:
        _check_cap(self.g, "s-Hamiltonicity")
        g = self.g
        while self._ham_fail is None and self._ham_level < s:
            size = self._ham_level + 1
            if size == 0:
                if self.cycle() is None:
                    self._ham_fail = ()
                else:
                    self._ham_level = 0
                continue
            for combo, mask in _deletion_sets(g.n, size):
                if not _ham_induced(g, g.full_mask & ~mask):
                    self._ham_fail = combo
                    break
            else:
                self._ham_level = size
        return self._ham_level >= s

    def edge_ham_holds(self, s: int) -> bool:
        _check_cap(self.g, "s-edge-Hamiltonicity")
        if s > self.edge_ham_cap:
            raise OracleCapExceeded("s-edge-Hamiltonicity path budget", self.edge_ham_cap, s)
        if self._cycles is None:
            self._cycles = _CycleCache(self.g)
            if self.cycle() is not None:
                self._cycles.masks.append(self._cycles._mask(self.cycle()))
        while self._eham_fail is None and self._eham_level < s:
            size = self._eham_level + 1
            for forest in linear_forests(self.g, size):
                if not self._cycles.extendable(forest):
                    self._eham_fail = forest
                    break
            else:
                self._eham_level = size
        return self._eham_level >= s

    def holds(self, prop: Theorem, param: int) -> bool:
        g = self.g
        if prop is Theorem.S_CONN:
            return g.n > param and self.kappa()[0] >= param
        if prop is Theorem.S_EDGE_CONN:
            return self.lam()[0] >= param
        if prop is Theorem.DEFICIENT:
            return self.deficiency() <= param
        if prop is Theorem.PATH_COVER:
            return len(self.path_cover().paths) <= param
        if prop is Theorem.S_HAM:
            return self.ham_holds(param)
        return self.edge_ham_holds(param)

    def verdict(self, prop: Theorem, param: int) -> OracleVerdict:
        g = self.g
        if prop is Theorem.S_CONN:
            kappa, cut = self.kappa()
            return _s_connected_verdict(g, param, kappa, cut)
        if prop is Theorem.S_EDGE_CONN:
            lam, cut = self.lam()
            return _s_edge_verdict(param, lam, cut)
        if prop is Theorem.DEFICIENT:
            d = self.deficiency()
            if d <= param:
                return OracleVerdict(prop, param, True, None, d)
            return is_beta_deficient(g, param)
        if prop is Theorem.PATH_COVER:
            cover = self.path_cover()
            return OracleVerdict(prop, param, len(cover.paths) <= param, cover, len(cover.paths))
        if prop is Theorem.S_HAM:
            if self.ham_holds(param):
                return OracleVerdict(prop, param, True, None)
            return OracleVerdict(prop, param, False, DeletionSet(self._ham_fail))
        if self.edge_ham_holds(param):
            return OracleVerdict(prop, param, True, None)
        return OracleVerdict(prop, param, False, PathSystem(self._eham_fail))


def oracle(g: Graph, prop: Theorem, param: int) -> OracleVerdict:
    """Decide one property for one graph."""
    return GraphOracles(g).verdict(prop, param)
