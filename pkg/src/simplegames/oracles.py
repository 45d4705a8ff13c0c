"""Exhaustive reference answers over all 2**n coalitions.

These do not share code with the fast decision procedures beyond the
hypergraph type and the exact LP; they are what ``oracle`` on the command
line and the test-suite compare against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    ORACLE_LIMIT,
    Hypergraph,
    brute_transversal_kernel,
    maximal_members,
    minimal_members,
    oracle_properties,
    transversal_vector,
    universe,
    win_vector,
)
from .lp import linear_feasibility


def pair_flags(h: Hypergraph, k: Hypergraph, limit: int = ORACLE_LIMIT) -> tuple[bool, bool]:
    """``(coherent, complete)``: ``nu(H) <= tau(K)`` and ``nu(H) >= tau(K)``."""
    w = win_vector(h, limit)
    t = transversal_vector(k, limit)
    return bool(np.all(t[w])), bool(np.all(w[t]))


def desirability(w: np.ndarray, n: int, a: int, b: int) -> bool:
    """Player ``a`` is at least as desirable as ``b``."""
    idx = universe(n)
    ba, bb = 1 << (a - 1), 1 << (b - 1)
    rest = (idx & (ba | bb)) == 0
    return bool(np.all(~w[idx[rest] | bb] | w[idx[rest] | ba]))


def brute_is_regular(h: Hypergraph, limit: int = ORACLE_LIMIT) -> bool:
    w = win_vector(h, limit)
    return all(desirability(w, h.n, b + 1, b) for b in range(1, h.n))


def brute_is_linear(h: Hypergraph, limit: int = ORACLE_LIMIT) -> bool:
    w = win_vector(h, limit)
    n = h.n
    return all(
        desirability(w, n, a, b) or desirability(w, n, b, a)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
    )


def _incidence(z: int, n: int) -> list[int]:
    return [(z >> i) & 1 for i in range(n)]


def brute_threshold(h: Hypergraph, homogeneous: bool = False, limit: int = ORACLE_LIMIT) -> Optional[list]:
    """Exact LP over every minimal winner and every maximal loser."""
    n = h.n
    w = win_vector(h, limit)
    cons = []
    for x in minimal_members(w, n):
        cons.append((_incidence(x, n) + [-1], "==" if homogeneous else ">=", 0))
    for y in maximal_members(~w, n):
        cons.append((_incidence(y, n) + [-1], "<=", -1))
    return linear_feasibility(cons, n + 1, nonnegative=True)


@dataclass(frozen=True)
class OracleReport:
    proper: bool
    strong: bool
    decisive: bool
    regular: bool
    linear: bool
    weighted: bool
    homogeneous: bool
    majority: bool
    submajority: bool
    dual: Hypergraph

    def verdicts(self) -> dict[str, bool]:
        return {k: v for k, v in self.__dict__.items() if isinstance(v, bool)}


def oracle_report(h: Hypergraph, limit: int = ORACLE_LIMIT) -> OracleReport:
    props = oracle_properties(h, limit)
    weighted = brute_threshold(h, limit=limit) is not None
    return OracleReport(
        proper=props.proper,
        strong=props.strong,
        decisive=props.decisive,
        regular=brute_is_regular(h, limit),
        linear=brute_is_linear(h, limit),
        weighted=weighted,
        homogeneous=weighted and brute_threshold(h, True, limit) is not None,
        majority=weighted and props.decisive,
        submajority=weighted and props.strong,
        dual=brute_transversal_kernel(h, limit),
    )
