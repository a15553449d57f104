"""Desk-scale validation of the certifiers against the exact oracles.

Exhaustive sweeps run over labelled graphs encoded as edge masks (bit ``i``
selects the ``i``-th vertex pair in lexicographic order). The cheap first
stage of the certifier is evaluated on whole numpy batches; graphs only
become ``Graph`` objects when an oracle or a family search needs them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .certify import (CODE_ABOVE, CODE_BELOW, CODE_EQUAL, CODE_UNMET, CertStatus,
                      batch_statuses, certify, radicand)
from .closure import closure_parameter_for, k_closure
from .families import (Family, circulant_regular, families_for, gen_EC, gen_EP, gen_ES,
                       gen_union_cliques)
from .formats import edge_mask_graph, to_graph6
from .graph import Graph, complement, is_semiregular_bipartite
from .oracles import GraphOracles, OracleCapExceeded
from .params import Theorem, TheoremParams, valid_params
from .spectral import (DEFAULT_BAND, DEFAULT_TOL, SpectralEstimate, Verdict, compare_to_bound,
                       spectral_radius, spectral_radius_batch)

EXHAUSTIVE_CAP = 7
CHUNK = 1 << 14


@dataclass
class Violation:
    graph6: str
    params: TheoremParams
    certifier: str
    oracle_holds: bool


@dataclass
class SweepReport:
    graphs_examined: int = 0
    parameterizations_examined: int = 0
    certified: int = 0
    exceptional: int = 0
    inconclusive: int = 0
    hypothesis_unmet: int = 0
    boundary_unknown: int = 0
    violations: list = field(default_factory=list)
    exceptional_log: list = field(default_factory=list)
    oracle_overflows: list = field(default_factory=list)
    wall_time: float = 0.0

    def count(self, status: CertStatus):
        name = {
            CertStatus.CERTIFIED: "certified",
            CertStatus.EXCEPTIONAL: "exceptional",
            CertStatus.INCONCLUSIVE: "inconclusive",
            CertStatus.HYPOTHESIS_UNMET: "hypothesis_unmet",
            CertStatus.BOUNDARY_UNKNOWN: "boundary_unknown",
        }[status]
        setattr(self, name, getattr(self, name) + 1)

    def records(self) -> list[str]:
        lines = []
        for v in self.violations:
            p = v.params
            lines.append(f"violation graph6={v.graph6} theorem={p.theorem.value} k={p.k} "
                         f"s_or_beta={p.s_or_beta} certifier={v.certifier} oracle={str(v.oracle_holds).lower()}")
        for g6, p, holds in self.exceptional_log:
            lines.append(f"exceptional graph6={g6} theorem={p.theorem.value} k={p.k} "
                         f"s_or_beta={p.s_or_beta} oracle={str(holds).lower()}")
        for g6, p, msg in self.oracle_overflows:
            lines.append(f"oracle_overflow graph6={g6} theorem={p.theorem.value} k={p.k} "
                         f"s_or_beta={p.s_or_beta} reason={msg!r}")
        lines += [
            "# summary",
            f"graphs_examined={self.graphs_examined}",
            f"parameterizations_examined={self.parameterizations_examined}",
            f"certified={self.certified}",
            f"exceptional={self.exceptional}",
            f"inconclusive={self.inconclusive}",
            f"hypothesis_unmet={self.hypothesis_unmet}",
            f"boundary_unknown={self.boundary_unknown}",
            f"violations={len(self.violations)}",
            f"wall_time={self.wall_time:.2f}",
        ]
        return lines


# -- graph sources -------------------------------------------------------------------

def enumerate_labeled(n: int) -> Iterator[Graph]:
    if n > EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive enumeration is capped at n={EXHAUSTIVE_CAP}")
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield edge_mask_graph(n, mask)


def sample_gnp(n: int, p: float, seed: int, count: int) -> Iterator[Graph]:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(count):
        keep = rng.random(len(pairs)) < p
        yield Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def _pair_index(n: int):
    us, vs = zip(*combinations(range(n), 2)) if n > 1 else ((), ())
    return np.array(us, dtype=np.intp), np.array(vs, dtype=np.intp)


def adjacency_from_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` uint8 adjacency stack for edge masks of order ``n``."""
    us, vs = _pair_index(n)
    out = np.zeros((len(masks), n, n), dtype=np.uint8)
    if len(us):
        bitvals = ((masks[:, None] >> np.arange(len(us), dtype=np.int64)) & 1).astype(np.uint8)
        out[:, us, vs] = bitvals
        out[:, vs, us] = bitvals
    return out


def batch_connected(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[1]
    if n <= 1:
        return np.ones(len(adj), dtype=bool)
    r = (adj | np.eye(n, dtype=np.uint8)).astype(np.float32)
    span = 1
    while span < n - 1:
        r = np.minimum(r @ r, 1.0)
        span *= 2
    return (r[:, 0, :] > 0).all(axis=1)


def batch_complement_mu(adj: np.ndarray, tol: float = DEFAULT_TOL):
    n = adj.shape[1]
    comp = 1 - adj - np.eye(n, dtype=np.uint8)[None]
    return spectral_radius_batch(comp.astype(np.float64), tol)


# -- soundness -------------------------------------------------------------------------

class _Checker:
    """Confirms certified verdicts for one graph, caching its oracles."""

    def __init__(self, report: SweepReport):
        self.report = report

    def confirm(self, g: Graph, oracles: GraphOracles, params: TheoremParams, status: CertStatus):
        try:
            holds = oracles.holds(params.theorem, params.s_or_beta)
        except OracleCapExceeded as exc:
            self.report.oracle_overflows.append((to_graph6(g), params, str(exc)))
            return
        if status is CertStatus.CERTIFIED and not holds:
            self.report.violations.append(Violation(to_graph6(g), params, status.value, holds))
        elif status is CertStatus.EXCEPTIONAL:
            self.report.exceptional_log.append((to_graph6(g), params, holds))


def soundness_sweep(source: Iterable[Graph], theorems: Sequence[Theorem] = tuple(Theorem),
                    param_ranges: Optional[Callable[[int], list[TheoremParams]]] = None,
                    relax_connectivity: bool = False, tol: float = DEFAULT_TOL,
                    band: float = DEFAULT_BAND) -> SweepReport:
    """Certify every graph under every parameterization and check certified ones with oracles."""
    report = SweepReport()
    checker = _Checker(report)
    start = time.perf_counter()
    ranges = param_ranges or (lambda n: valid_params(n, tuple(theorems)))
    for g in source:
        report.graphs_examined += 1
        oracles = GraphOracles(g)
        est = None
        for params in ranges(g.n):
            if params.theorem not in theorems:
                continue
            report.parameterizations_examined += 1
            if est is None and g.n:
                outcome = certify(g, params, relax_connectivity=relax_connectivity, tol=tol, band=band)
                est = outcome.mu
            else:
                outcome = certify(g, params, relax_connectivity=relax_connectivity, tol=tol,
                                  band=band, estimate=est)
            report.count(outcome.status)
            if outcome.status in (CertStatus.CERTIFIED, CertStatus.EXCEPTIONAL):
                checker.confirm(g, oracles, params, outcome.status)
    report.wall_time = time.perf_counter() - start
    return report


def exhaustive_sweep(n: int, theorems: Sequence[Theorem] = tuple(Theorem),
                     band: float = DEFAULT_BAND, tol: float = DEFAULT_TOL,
                     mask_range: Optional[range] = None, progress: Optional[Callable] = None) -> SweepReport:
    """``soundness_sweep`` over every labelled graph on ``n`` vertices, batched.

    Produces the same counts as ``soundness_sweep(enumerate_labeled(n))``; the
    hypothesis check and bound comparison run vectorised, and only graphs that
    reach an oracle or a family search are materialised.
    """
    if n > EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive enumeration is capped at n={EXHAUSTIVE_CAP}")
    report = SweepReport()
    checker = _Checker(report)
    start = time.perf_counter()
    plist = valid_params(n, tuple(theorems))
    total = 1 << (n * (n - 1) // 2)
    masks_all = mask_range or range(total)
    for lo in range(masks_all.start, masks_all.stop, CHUNK):
        hi = min(lo + CHUNK, masks_all.stop)
        masks = np.arange(lo, hi, dtype=np.int64)
        adj = adjacency_from_masks(n, masks)
        conn = batch_connected(adj)
        mindeg = adj.sum(axis=2, dtype=np.int64).min(axis=1) if n else np.zeros(len(masks), np.int64)
        live = np.flatnonzero(conn & (mindeg >= 1))
        mu = np.zeros(len(masks))
        res = np.zeros(len(masks))
        its = np.zeros(len(masks), dtype=np.int64)
        if len(live):
            v, r, i, ok = batch_complement_mu(adj[live], tol)
            if not ok.all():
                raise ArithmeticError("spectral radius did not converge inside a sweep batch")
            mu[live], res[live], its[live] = v, r, i
        report.graphs_examined += len(masks)
        report.parameterizations_examined += len(masks) * len(plist)
        graphs: dict[int, tuple[Graph, GraphOracles]] = {}

        def materialise(idx):
            hit = graphs.get(idx)
            if hit is None:
                g = edge_mask_graph(n, int(masks[idx]))
                hit = graphs[idx] = (g, GraphOracles(g))
            return hit

        pending = []
        for pi, params in enumerate(plist):
            codes = batch_statuses(n, params, conn, mindeg, mu, band)
            report.hypothesis_unmet += int((codes == CODE_UNMET).sum())
            report.inconclusive += int((codes == CODE_ABOVE).sum())
            below = np.flatnonzero(codes == CODE_BELOW)
            report.certified += len(below)
            for idx in below:
                pending.append((int(idx), pi, CertStatus.CERTIFIED))
            for idx in np.flatnonzero(codes == CODE_EQUAL):
                g, _ = materialise(int(idx))
                est = SpectralEstimate(float(mu[idx]), float(res[idx]), int(its[idx]), float(n))
                outcome = certify(g, params, band=band, estimate=est)
                report.count(outcome.status)
                if outcome.status in (CertStatus.CERTIFIED, CertStatus.EXCEPTIONAL):
                    pending.append((int(idx), pi, outcome.status))
        # Graph-major order keeps each graph's oracle cache hot and output canonical.
        pending.sort()
        current = None
        for idx, pi, status in pending:
            if current is not None and idx != current:
                graphs.pop(current, None)
            current = idx
            g, oracles = materialise(idx)
            checker.confirm(g, oracles, plist[pi], status)
        graphs.clear()
        if progress is not None:
            progress(hi - masks_all.start, len(masks_all), report)
    report.wall_time = time.perf_counter() - start
    return report


# -- closure and geometric-degree suites ----------------------------------------------------------

def closure_params(n: int, ham_cap: int) -> list[tuple[Theorem, int]]:
    """Every (property, parameter) pair checked against the closure equivalences at order ``n``."""
    out = []
    out += [(Theorem.S_CONN, s) for s in range(1, n + 1)]
    if n >= 2:
        out += [(Theorem.S_EDGE_CONN, s) for s in range(1, n + 1)]
    # Deficiency always has the parity of n, and the deficiency equivalence
    # fails for beta of the other parity (P_3 + K_1 at beta=1), so only
    # beta = n (mod 2) counts as valid.
    out += [(Theorem.DEFICIENT, b) for b in range(n % 2, n, 2)]
    out += [(Theorem.PATH_COVER, s) for s in range(1, n + 1)]
    out += [(Theorem.S_HAM, s) for s in range(0, min(max(n - 2, 1), ham_cap + 1))]
    out += [(Theorem.S_EDGE_HAM, s) for s in range(0, min(max(n - 2, 1), ham_cap + 1))]
    return out


@dataclass
class ClosureMismatch:
    graph6: str
    prop: Theorem
    param: int
    k: int
    original: bool
    closed: bool


def closure_equivalence(graphs: Iterable[Graph], ham_cap: int = 3) -> tuple[int, list[ClosureMismatch]]:
    """Compare each property on ``g`` and on its closure; returns (checks run, mismatches)."""
    checks = 0
    bad = []
    for g in graphs:
        cache: dict[tuple, GraphOracles] = {}
        closures: dict[int, Graph] = {}

        def oracles_for(h):
            o = cache.get(h.adj)
            if o is None:
                o = cache[h.adj] = GraphOracles(h)
            return o

        base = oracles_for(g)
        for prop, param in closure_params(g.n, ham_cap):
            k = closure_parameter_for(prop, g.n, param)
            h = closures.get(k)
            if h is None:
                h = closures[k] = k_closure(g, k).closed
            a = base.holds(prop, param)
            b = oracles_for(h).holds(prop, param)
            checks += 1
            if a != b:
                bad.append(ClosureMismatch(to_graph6(g), prop, param, k, a, b))
    return checks, bad


@dataclass
class GeometricDegreeResult:
    graphs: int
    inequality_failures: list
    equality_mismatches: list
    max_gap_in_equality_set: float
    min_gap_outside: float


def geometric_degree_sweep(n: int, tol: float = 1e-7) -> GeometricDegreeResult:
    """Spectral radius versus the minimum edge geometric degree, all connected graphs of order ``n``."""
    total = 1 << (n * (n - 1) // 2)
    us, vs = _pair_index(n)
    examined = 0
    ineq, mism = [], []
    max_in, min_out = 0.0, float("inf")
    for lo in range(0, total, CHUNK):
        masks = np.arange(lo, min(lo + CHUNK, total), dtype=np.int64)
        adj = adjacency_from_masks(n, masks)
        keep = np.flatnonzero(batch_connected(adj) & (adj.sum(axis=(1, 2)) > 0))
        if not len(keep):
            continue
        adj, masks = adj[keep], masks[keep]
        examined += len(keep)
        mu, _, _, ok = spectral_radius_batch(adj.astype(np.float64))
        if not ok.all():
            raise ArithmeticError("spectral radius did not converge")
        deg = adj.sum(axis=2, dtype=np.int64)
        prod = deg[:, us] * deg[:, vs]
        present = adj[:, us, vs].astype(bool)
        bound = np.sqrt(np.where(present, prod, np.iinfo(np.int64).max).min(axis=1).astype(np.float64))
        gap = mu - bound
        for i in np.flatnonzero(gap < -tol):
            ineq.append(to_graph6(edge_mask_graph(n, int(masks[i]))))
        equal = np.abs(gap) <= tol
        # Semi-regular bipartite graphs show at most two distinct degrees.
        distinct = (deg != deg[:, :1]).any(axis=1)
        two_vals = np.array([len(set(row)) <= 2 for row in deg.tolist()]) if distinct.any() else distinct
        for i in range(len(keep)):
            if not distinct[i]:
                structured = True
            elif two_vals[i]:
                g = edge_mask_graph(n, int(masks[i]))
                structured = is_semiregular_bipartite(g) is not None
            else:
                structured = False
            if structured != bool(equal[i]):
                mism.append(to_graph6(edge_mask_graph(n, int(masks[i]))))
            if structured:
                max_in = max(max_in, abs(gap[i]))
            else:
                min_out = min(min_out, abs(gap[i]))
    return GeometricDegreeResult(examined, ineq, mism, max_in, min_out)


# -- tightness ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TightInstance:
    graph: Graph
    family: Family
    mu: float
    radicand: int


def _family_instances(params: TheoremParams, n: int) -> Iterator[tuple[Family, Graph]]:
    k = params.k
    for fam in families_for(params):
        if fam is Family.EP:
            for r in range(0, k + 1):
                try:
                    core = circulant_regular(n - k + r, r)
                except ValueError:
                    continue
                yield fam, gen_EP(n, k, r, core=core)
        elif fam is Family.UNION_CLIQUES:
            if 0 <= k <= n - 1:
                yield fam, gen_union_cliques(n, k)
        else:
            s = params.s
            dx = k - s + 2 if fam is Family.EC else k - s
            dy = n - k - 1
            budget = s - 1 if fam is Family.EC else s + 1
            gen = gen_EC if fam is Family.EC else gen_ES
            for m in range(0, budget + 1):
                for t in range(0, budget + 1 - m):
                    if (dy + m) * dx != (dx + t) * dy:
                        continue
                    try:
                        yield fam, gen(n, k, s, m, t)
                    except ValueError:
                        continue


def tightness_search(theorem: Theorem, n: int, k: int, s_or_beta: int,
                     band: float = DEFAULT_BAND) -> list[TightInstance]:
    """Family instances whose complement spectral radius meets the theorem's bound."""
    if theorem is Theorem.DEFICIENT:
        params = TheoremParams(theorem, k, beta=s_or_beta)
    else:
        params = TheoremParams(theorem, k, s=s_or_beta)
    if not params.in_range():
        raise ValueError(f"parameters out of range for {theorem.value}: k={k}, s/beta={s_or_beta}")
    rad = radicand(params, n)
    out = []
    seen = set()
    for fam, g in _family_instances(params, n):
        if g.adj in seen:
            continue
        seen.add(g.adj)
        est = spectral_radius(complement(g))
        if compare_to_bound(est, rad, band).verdict is Verdict.EQUAL:
            out.append(TightInstance(g, fam, est.value, rad))
    return out
