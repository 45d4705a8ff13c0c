"""Regular games and the shift order.

Players are ranked by their label: a higher label means a more powerful
player.  ``X <=' Z`` (the shift order) holds iff for every player ``a`` the
number of members of ``X`` ranked at least ``a`` is at most the same count
for ``Z``.  A game is regular iff its winning family is upward closed under
this order, and then it is fully described by its shift-minimal winning
coalitions (its economic specification).
"""
from __future__ import annotations

import graphlib
import heapq
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    ORACLE_LIMIT,
    Hypergraph,
    NotAntichain,
    _check_limit,
    bits_of,
    full_mask,
    is_antichain,
    minimal_edges,
    responds,
    responds_many,
    universe,
)


class NotRegular(ValueError):
    pass


class RegularKernel(Hypergraph):
    """A hypergraph read under the shift order: winners are ``nu'(edges)``."""


def shift_leq(x: int, z: int, n: int) -> bool:
    """Decide ``x <=' z`` by comparing top-suffix counts."""
    cx = cz = 0
    for b in range(n - 1, -1, -1):
        bit = 1 << b
        if x & bit:
            cx += 1
        if z & bit:
            cz += 1
        if cx > cz:
            return False
    return True


def shift_lt(x: int, z: int, n: int) -> bool:
    return x != z and shift_leq(x, z, n)


def regularity_violation(h: Hypergraph, full_pairs: bool = False) -> Optional[tuple[int, int, int]]:
    """First ``(X, a, b)`` where shifting ``b`` out and ``a > b`` in loses.

    By default only adjacent shifts ``a = b + 1`` are tried; these generate
    every increasing shift once the winning family is upward closed.
    ``full_pairs=True`` tries every ``a > b`` instead.
    """
    if not is_antichain(h):
        raise NotAntichain("regularity is defined on minimal winning coalitions")
    n = h.n
    moves = []
    for x in h.edges:
        for b in range(1, n):
            bb = 1 << (b - 1)
            if not x & bb:
                continue
            tops = range(b + 1, n + 1) if full_pairs else (b + 1,)
            for a in tops:
                ab = 1 << (a - 1)
                if not x & ab:
                    moves.append((x, a, b, (x ^ bb) | ab))
    for (x, a, b, _), wins in zip(moves, responds_many(h, (m[3] for m in moves))):
        if not wins:
            return x, a, b
    return None


def is_regular(h: Hypergraph, full_pairs: bool = False) -> bool:
    return regularity_violation(h, full_pairs) is None


def _require_regular(h: Hypergraph):
    v = regularity_violation(h)
    if v is not None:
        x, a, b = v
        raise NotRegular(f"shifting player {b} to {a} in {x:0{h.n}b} loses")


@dataclass(frozen=True)
class PlayerOrdering:
    """A relabelling of players by power.

    ``rank[a - 1]`` is the new label of original player ``a``; in the new
    labelling the game is regular.
    """

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(1, len(self.rank) + 1)):
            raise ValueError(f"not a permutation: {self.rank}")

    @classmethod
    def from_weakest_first(cls, order: list[int]) -> "PlayerOrdering":
        rank = [0] * len(order)
        for new, a in enumerate(order, start=1):
            rank[a - 1] = new
        return cls(tuple(rank))

    @property
    def n(self) -> int:
        return len(self.rank)

    def is_identity(self) -> bool:
        return all(r == a for a, r in enumerate(self.rank, start=1))

    def apply(self, mask: int) -> int:
        out = 0
        for b in bits_of(mask):
            out |= 1 << (self.rank[b.bit_length() - 1] - 1)
        return out

    def invert(self, mask: int) -> int:
        inv = self.inverse()
        return inv.apply(mask)

    def inverse(self) -> "PlayerOrdering":
        inv = [0] * self.n
        for a, r in enumerate(self.rank, start=1):
            inv[r - 1] = a
        return PlayerOrdering(tuple(inv))

    def relabel(self, h: Hypergraph) -> Hypergraph:
        return Hypergraph(h.n, tuple(self.apply(e) for e in h.edges))

    def weakest_first(self) -> list[int]:
        return list(self.inverse().rank)


def _size_profiles(h: Hypergraph) -> dict[int, tuple[int, ...]]:
    # per player, how many minimal winners of each size (smallest first)
    # contain it; only a starting guess for the order, correctness does not
    # depend on it
    n = h.n
    prof = {a: [0] * (n + 1) for a in range(1, n + 1)}
    for x in h.edges:
        size = x.bit_count()
        for v in bits_of(x):
            prof[v.bit_length()][size] += 1
    return {a: tuple(p) for a, p in prof.items()}


def _linear_extension(n: int, stronger: dict[int, set[int]], key: dict) -> Optional[list[int]]:
    # stronger[b] = players that must rank below b; ties go to the smaller key
    ts = graphlib.TopologicalSorter({a: stronger.get(a, set()) for a in range(1, n + 1)})
    try:
        ts.prepare()
    except graphlib.CycleError:
        return None
    ready: list[int] = []
    order = []
    while ts.is_active():
        for a in ts.get_ready():
            heapq.heappush(ready, (key[a], a))
        _, a = heapq.heappop(ready)
        order.append(a)
        ts.done(a)
    return order


def find_regular_order(h: Hypergraph) -> Optional[PlayerOrdering]:
    """An ordering making ``h`` regular, or None when the game is not linear.

    Each violated shift ``(X, a, b)`` proves that ``b`` must outrank ``a``;
    the fact is recorded for good and the order recomputed.  A contradiction
    among recorded facts, or more than ``n(n-1)/2`` of them, means no
    ordering exists.
    """
    if not is_antichain(h):
        raise NotAntichain("linearity is defined on minimal winning coalitions")
    n = h.n
    stronger: dict[int, set[int]] = {}
    key = _size_profiles(h)
    order = _linear_extension(n, stronger, key)
    for _ in range(n * (n - 1) // 2 + 1):
        perm = PlayerOrdering.from_weakest_first(order)
        v = regularity_violation(perm.relabel(h))
        if v is None:
            return perm
        _, a_new, b_new = v
        a, b = order[a_new - 1], order[b_new - 1]
        if b in stronger.get(a, set()):
            return None
        stronger.setdefault(b, set()).add(a)
        nxt = _linear_extension(n, stronger, key)
        if nxt is None:
            return None
        order = nxt
    return None


def is_linear(h: Hypergraph) -> bool:
    return find_regular_order(h) is not None


def shift_minimal_edges(edges: list[int], n: int) -> list[int]:
    return [x for x in edges if not any(shift_lt(z, x, n) for z in edges)]


def shift_maximal_edges(edges: list[int], n: int) -> list[int]:
    return [x for x in edges if not any(shift_lt(x, z, n) for z in edges)]


def shift_minimize(h: Hypergraph) -> RegularKernel:
    """The shift-minimal winning coalitions of a regular game."""
    _require_regular(h)
    return RegularKernel(h.n, tuple(shift_minimal_edges(list(h.edges), h.n)))


def shift_responds(hp: Hypergraph, z: int) -> bool:
    return any(shift_leq(x, z, hp.n) for x in hp.edges)


def regular_transversal_kernel(h: Hypergraph) -> Hypergraph:
    """Minimal transversals of a regular kernel in polynomial time.

    Every maximal losing coalition ``Y`` of a regular game has the form
    ``(X - {c}) | {1, ..., c-1}`` for a minimal winner ``X`` and ``c`` in
    ``X`` (``c`` is the weakest player missing from ``Y``), and each such
    candidate that loses is automatically maximal because adding ``c``
    restores ``X``.  The minimal transversals are the complements of these
    losers, so there are at most ``n * |h| + 1`` of them.
    """
    if not is_antichain(h):
        raise NotAntichain("expected minimal winning coalitions")
    _require_regular(h)
    if not h.edges:
        return Hypergraph(h.n, (0,))
    full = h.full
    candidates = [(x ^ c) | (c - 1) for x in h.edges for c in bits_of(x)]
    out: dict[int, None] = {}
    for y, wins in zip(candidates, responds_many(h, candidates)):
        if not wins:
            out[full ^ y] = None
    return Hypergraph(h.n, tuple(out))


def regular_is_decisive(h: Hypergraph) -> bool:
    return regular_transversal_kernel(h) == h


def regular_is_strong(h: Hypergraph) -> bool:
    return all(responds(h, y) for y in regular_transversal_kernel(h).edges)


def regular_is_proper(h: Hypergraph) -> bool:
    # a transversal family containing every winner
    _require_regular(h)
    return all(x & y for x in h.edges for y in h.edges)


# -- exhaustive shift-order oracles ----------------------------------------


def suffix_counts(n: int) -> np.ndarray:
    """``S[z, j]`` = number of members of ``z`` among the top ``j + 1`` players."""
    idx = universe(n)
    bits = np.stack([(idx >> b) & 1 for b in range(n - 1, -1, -1)], axis=1)
    return np.cumsum(bits, axis=1).astype(np.int8)


def shift_win_vector(hp: Hypergraph, limit: int = ORACLE_LIMIT, counts: Optional[np.ndarray] = None) -> np.ndarray:
    """Boolean vector of ``nu'(hp)`` over all ``2**n`` coalitions."""
    _check_limit(hp.n, limit)
    if counts is None:
        counts = suffix_counts(hp.n)
    w = np.zeros(1 << hp.n, dtype=bool)
    for x in hp.edges:
        w |= np.all(counts >= counts[x], axis=1)
    return w


def _shift_minimal_members(vec: np.ndarray, n: int) -> list[int]:
    # members of a shift-upward-closed family with no immediate predecessor in it
    idx = universe(n)
    keep = vec.copy()
    if n:
        keep &= ~(((idx & 1) != 0) & vec[idx ^ 1])
    for b in range(1, n):
        hi, lo = 1 << b, 1 << (b - 1)
        movable = ((idx & hi) != 0) & ((idx & lo) == 0)
        keep &= ~(movable & vec[idx ^ hi ^ lo])
    return [int(z) for z in np.flatnonzero(keep)]


def shift_transversal_kernel_oracle(hp: Hypergraph, limit: int = ORACLE_LIMIT) -> Hypergraph:
    """``lambda'(hp)`` by exhaustive scan: shift-minimal members of ``tau'(hp)``."""
    w = shift_win_vector(hp, limit)
    tau = ~w[::-1]  # z is in tau' iff A \ z is not in nu'
    return Hypergraph(hp.n, tuple(_shift_minimal_members(tau, hp.n)))


def shift_kernel_to_kernel(hp: Hypergraph, limit: int = ORACLE_LIMIT) -> Hypergraph:
    """Expand an economic specification to ``mu(nu'(hp))`` by exhaustive scan."""
    from .core import minimal_members

    return Hypergraph(hp.n, tuple(minimal_members(shift_win_vector(hp, limit), hp.n)))


def shift_is_coherent(hp: Hypergraph, kp: Hypergraph) -> bool:
    """``nu'(hp)`` inside ``tau'(kp)``: no ``X <=' A \\ Y`` over edge pairs."""
    full = full_mask(hp.n)
    return not any(shift_leq(x, full ^ y, hp.n) for x in hp.edges for y in kp.edges)


def shift_is_complete_oracle(hp: Hypergraph, kp: Hypergraph, limit: int = ORACLE_LIMIT) -> bool:
    counts = suffix_counts(hp.n)
    wh = shift_win_vector(hp, limit, counts)
    wk = shift_win_vector(kp, limit, counts)
    return bool(np.all(wh | wk[::-1]))

