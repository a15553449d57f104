"""Theorem identifiers and their (k, s) / (k, beta) parameters."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional


class Theorem(enum.Enum):
    S_CONN = "s-conn"
    S_EDGE_CONN = "s-edge-conn"
    DEFICIENT = "deficient"
    PATH_COVER = "path-cover"
    S_HAM = "s-ham"
    S_EDGE_HAM = "s-edge-ham"

    @classmethod
    def parse(cls, name: str) -> "Theorem":
        key = name.strip().lower().replace("_", "-")
        for t in cls:
            if t.value == key or t.name.lower().replace("_", "-") == key:
                return t
        raise ValueError(f"unknown theorem {name!r}; choose from {[t.value for t in cls]}")


@dataclass(frozen=True)
class TheoremParams:
    """Which theorem to apply, with its minimum-degree parameter ``k`` and ``s`` or ``beta``.

    Construction only checks that the right parameter is present; the range
    conditions each theorem imposes are reported by ``check_hypotheses``.
    """

    theorem: Theorem
    k: int
    s: Optional[int] = None
    beta: Optional[int] = None

    def __post_init__(self):
        if self.theorem is Theorem.DEFICIENT:
            if self.beta is None or self.s is not None:
                raise ValueError("the deficiency theorem takes beta, not s")
        elif self.s is None or self.beta is not None:
            raise ValueError(f"{self.theorem.value} takes s, not beta")

    @property
    def s_or_beta(self) -> int:
        return self.beta if self.theorem is Theorem.DEFICIENT else self.s

    def range_checks(self) -> list[tuple[str, str, bool]]:
        k, s, b = self.k, self.s, self.beta
        t = self.theorem
        if t in (Theorem.S_CONN, Theorem.S_EDGE_CONN):
            return [("s>=1", f"s={s}", s >= 1), ("k>=1", f"k={k}", k >= 1),
                    ("k-s+1>=0", f"k-s+1={k - s + 1}", k - s + 1 >= 0)]
        if t is Theorem.DEFICIENT:
            return [("k>=1", f"k={k}", k >= 1), ("k>=2beta", f"k={k},beta={b}", k >= 2 * b),
                    ("beta>=0", f"beta={b}", b >= 0)]
        if t is Theorem.PATH_COVER:
            return [("s>=1", f"s={s}", s >= 1), ("k>=1", f"k={k}", k >= 1)]
        return [("s>=0", f"s={s}", s >= 0), ("k>=s+1", f"k={k},s={s}", k >= s + 1)]

    def in_range(self) -> bool:
        return all(ok for _, _, ok in self.range_checks())

    def min_order(self) -> int:
        if self.theorem is Theorem.DEFICIENT:
            return 2 * self.k + self.beta + 2
        if self.theorem is Theorem.PATH_COVER:
            return 2 * self.k + self.s + 1
        return 2 * self.k + 1


def valid_params(n: int, theorems=tuple(Theorem)) -> list[TheoremParams]:
    """Every parameterization whose ranges, order bound and parity hold for order ``n``."""
    out = []
    for t in theorems:
        for k in range(1, (n - 1) // 2 + 1):
            if t is Theorem.DEFICIENT:
                cands = [TheoremParams(t, k, beta=b) for b in range(0, k // 2 + 1)]
            elif t in (Theorem.S_CONN, Theorem.S_EDGE_CONN):
                cands = [TheoremParams(t, k, s=s) for s in range(1, k + 2)]
            elif t is Theorem.PATH_COVER:
                cands = [TheoremParams(t, k, s=s) for s in range(1, n)]
            else:
                cands = [TheoremParams(t, k, s=s) for s in range(0, k)]
            for p in cands:
                if not p.in_range() or n < p.min_order():
                    continue
                if t is Theorem.DEFICIENT and (n - p.beta) % 2:
                    continue
                out.append(p)
    return out
