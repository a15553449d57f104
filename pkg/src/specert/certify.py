"""Spectral certifiers: hypotheses, bound, comparison, exceptional-family dispatch."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .families import FamilyWitness, MembershipCapExceeded, MEMBERSHIP_CAP, families_for, membership
from .graph import Graph, complement, is_connected, min_degree
from .params import Theorem, TheoremParams, valid_params
from .spectral import (DEFAULT_BAND, DEFAULT_TOL, SpectralEstimate, Verdict, compare_to_bound,
                       spectral_radius)

__all__ = [
    "CertStatus", "CertOutcome", "Check", "HypothesisReport", "Theorem", "TheoremParams",
    "radicand", "check_hypotheses", "certify", "format_record", "batch_statuses", "valid_params",
]


class CertStatus(enum.Enum):
    HYPOTHESIS_UNMET = "HypothesisUnmet"
    CERTIFIED = "Certified"
    EXCEPTIONAL = "Exceptional"
    INCONCLUSIVE = "Inconclusive"
    BOUNDARY_UNKNOWN = "BoundaryUnknown"


class Check(NamedTuple):
    name: str
    required: str
    observed: str
    passed: bool


@dataclass(frozen=True)
class HypothesisReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class CertOutcome:
    status: CertStatus
    params: TheoremParams
    mu: Optional[SpectralEstimate]
    radicand: int
    witness: Optional[FamilyWitness]
    report: HypothesisReport


def radicand(params: TheoremParams, n: int) -> int:
    k = params.k
    t = params.theorem
    if t in (Theorem.S_CONN, Theorem.S_EDGE_CONN):
        return (k - params.s + 2) * (n - k - 1)
    if t is Theorem.DEFICIENT:
        return (params.beta + k + 1) * (n - k - 1)
    if t is Theorem.PATH_COVER:
        return (k + params.s) * (n - k - 1)
    return (k - params.s) * (n - k - 1)


def check_hypotheses(g: Graph, params: TheoremParams, relax_connectivity: bool = False) -> HypothesisReport:
    n, k = g.n, params.k
    checks = [Check(name, "true", observed, ok) for name, observed, ok in params.range_checks()]
    need = params.min_order()
    checks.append(Check("order", f"n>={need}", f"n={n}", n >= need))
    if params.theorem is Theorem.DEFICIENT:
        checks.append(Check("parity", f"n≡{params.beta} (mod 2)", f"n={n}",
                            (n - params.beta) % 2 == 0))
    if not relax_connectivity:
        conn = n >= 1 and is_connected(g)
        checks.append(Check("connected", "true", str(conn).lower(), conn))
    delta = min_degree(g) if n else 0
    checks.append(Check("min_degree", f"delta>={k}", f"delta={delta}", n >= 1 and delta >= k))
    return HypothesisReport(tuple(checks))


def certify(g: Graph, params: TheoremParams, *, relax_connectivity: bool = False,
            tol: float = DEFAULT_TOL, band: float = DEFAULT_BAND, cap: int = MEMBERSHIP_CAP,
            estimate: Optional[SpectralEstimate] = None) -> CertOutcome:
    """Run the theorem's spectral test on ``g``.

    ``estimate`` may carry a precomputed spectral radius of the complement, so
    that callers checking many parameterizations of one graph compute it once.
    """
    report = check_hypotheses(g, params, relax_connectivity)
    rad = radicand(params, g.n)
    if not report.passed:
        return CertOutcome(CertStatus.HYPOTHESIS_UNMET, params, None, rad, None, report)
    mu = estimate if estimate is not None else spectral_radius(complement(g), tol)
    cmp = compare_to_bound(mu, rad, band)
    if cmp.verdict is Verdict.BELOW:
        return CertOutcome(CertStatus.CERTIFIED, params, mu, rad, None, report)
    if cmp.verdict is Verdict.ABOVE:
        return CertOutcome(CertStatus.INCONCLUSIVE, params, mu, rad, None, report)
    # At equality the proofs force membership in one of the listed families,
    # so an exhaustive search that finds nothing still certifies.
    try:
        for fam in families_for(params):
            w = membership(g, fam, params, cap)
            if w is not None:
                return CertOutcome(CertStatus.EXCEPTIONAL, params, mu, rad, w, report)
    except MembershipCapExceeded:
        return CertOutcome(CertStatus.BOUNDARY_UNKNOWN, params, mu, rad, None, report)
    return CertOutcome(CertStatus.CERTIFIED, params, mu, rad, None, report)


# Integer codes used by the vectorised path; EQUAL defers to the full pipeline.
CODE_UNMET, CODE_BELOW, CODE_EQUAL, CODE_ABOVE = 0, 1, 2, 3


def batch_statuses(n: int, params: TheoremParams, connected: np.ndarray, min_degrees: np.ndarray,
                   mu: np.ndarray, band: float = DEFAULT_BAND,
                   relax_connectivity: bool = False) -> np.ndarray:
    """Vectorised first stage of ``certify`` for many graphs of order ``n``.

    Returns one of the ``CODE_*`` values per graph; ``CODE_EQUAL`` entries
    still need the family search of ``certify``.
    """
    out = np.full(len(mu), CODE_UNMET, dtype=np.int8)
    if not params.in_range() or n < params.min_order():
        return out
    if params.theorem is Theorem.DEFICIENT and (n - params.beta) % 2:
        return out
    ok = min_degrees >= params.k
    if not relax_connectivity:
        ok &= connected
    diff = mu * mu - radicand(params, n)
    out[ok & (diff < -band)] = CODE_BELOW
    out[ok & (np.abs(diff) <= band)] = CODE_EQUAL
    out[ok & (diff > band)] = CODE_ABOVE
    return out


def _fmt_partition(w: Optional[FamilyWitness]) -> str:
    if w is None:
        return "-"
    core = ",".join(map(str, sorted(w.core)))
    jp = ",".join(map(str, sorted(w.join_part)))
    return f"{core}|{jp}"


def format_record(outcome: CertOutcome) -> str:
    p = outcome.params
    mu = outcome.mu
    fields = [
        ("status", outcome.status.value),
        ("mu", "-" if mu is None else repr(mu.value)),
        ("mu_residual", "-" if mu is None else f"{mu.residual:.3e}"),
        ("radicand", str(outcome.radicand)),
        ("theorem", p.theorem.value),
        ("k", str(p.k)),
        ("s_or_beta", str(p.s_or_beta)),
        ("witness_family", outcome.witness.family.value if outcome.witness else "-"),
        ("witness_partition", _fmt_partition(outcome.witness)),
    ]
    if outcome.status is CertStatus.HYPOTHESIS_UNMET:
        failed = ";".join(c.name for c in outcome.report.failures())
        fields.append(("failed", failed))
    return " ".join(f"{k}={v}" for k, v in fields)
