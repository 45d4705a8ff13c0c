"""Coalitions, hypergraphs and the basic operator algebra.

A coalition over ``n`` players is stored as a plain ``int`` bitmask: player
``a`` (1-based) is present iff bit ``a - 1`` is set.  Written as a row of
``n`` characters the leftmost character is player ``n``, so ``int(row, 2)``
recovers the mask and ``format(mask, f"0{n}b")`` writes it back.

The operators mirror the usual set-family notation:

    complement_family   X -> A \\ X for every edge
    minimize            inclusion-minimal edges
    responds            Z contains some edge          (membership in nu)
    transversal         Z meets every edge            (membership in tau)
    transversal_kernel  minimal transversals          (lambda = mu . tau)

The ``brute_*`` and ``oracle_*`` functions scan all ``2**n`` coalitions with
numpy and are meant as independent checks for small ground sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np

Coalition = int

ORACLE_LIMIT = 20

# batch subset tests go through numpy above this many edges
_VECTOR_EDGES = 32
_INT64_PLAYERS = 62
_BLOCK = 4096


class GroundSetTooLarge(ValueError):
    pass


class NotAntichain(ValueError):
    pass


def bits_of(mask: int) -> Iterator[int]:
    """Yield the single-bit masks contained in ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def players(mask: int) -> list[int]:
    """1-based player labels present in ``mask``, ascending."""
    return [b.bit_length() for b in bits_of(mask)]


def coalition(members: Iterable[int]) -> int:
    mask = 0
    for a in members:
        if a < 1:
            raise ValueError(f"player labels start at 1, got {a}")
        mask |= 1 << (a - 1)
    return mask


def row(mask: int, n: int) -> str:
    return format(mask, f"0{n}b") if n else ""


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A family of distinct coalitions over players ``1..n``.

    Duplicate edges are dropped on construction (first occurrence wins) and
    the remaining order is kept so files round-trip.  Equality and hashing
    ignore order.
    """

    n: int
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ground-set size must be non-negative")
        edges = tuple(dict.fromkeys(int(e) for e in self.edges))
        top = 1 << self.n
        for e in edges:
            if e < 0 or e >= top:
                raise ValueError(f"edge {e:b} has players outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_rows(cls, rows: Iterable[str], n: Optional[int] = None) -> "Hypergraph":
        rows = [r.strip() for r in rows]
        if n is None:
            if not rows:
                raise ValueError("cannot infer n from an empty row list")
            n = len(rows[0])
        for r in rows:
            if len(r) != n or set(r) - {"0", "1"}:
                raise ValueError(f"bad row {r!r} for n={n}")
        return cls(n, tuple(int(r, 2) if r else 0 for r in rows))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def rows(self) -> list[str]:
        return [row(e, self.n) for e in self.edges]

    def edge_set(self) -> frozenset[int]:
        return self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @cached_property
    def _antichain(self) -> bool:
        return len(minimal_edges(self.edges)) == len(self.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, mask):
        return mask in self.edge_set()

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((self.n, self.edge_set()))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, rows={self.rows()})"


@dataclass(frozen=True)
class GameStats:
    simple_measure: int
    regular_measure: Optional[int] = None


@dataclass(frozen=True)
class SimpleGame:
    """A simple game given by its minimal winning coalitions."""

    kernel: Hypergraph

    def __post_init__(self):
        if not is_antichain(self.kernel):
            raise NotAntichain("kernel must be an antichain; use minimize() first")

    @classmethod
    def from_rows(cls, rows: Iterable[str], n: Optional[int] = None) -> "SimpleGame":
        return cls(Hypergraph.from_rows(rows, n))

    @property
    def n(self) -> int:
        return self.kernel.n

    def wins(self, z: int) -> bool:
        return responds(self.kernel, z)

    @property
    def stats(self) -> GameStats:
        from .regular import is_regular, shift_minimize

        simple = self.n * len(self.kernel)
        if is_regular(self.kernel):
            return GameStats(simple, self.n * len(shift_minimize(self.kernel)))
        return GameStats(simple)


def complement_family(h: Hypergraph) -> Hypergraph:
    full = h.full
    return Hypergraph(h.n, tuple(full ^ e for e in h.edges))


def minimal_edges(edges: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of ``edges`` in their original order."""
    edges = list(dict.fromkeys(edges))
    if len(edges) >= _VECTOR_EDGES and max(edges).bit_length() <= _INT64_PLAYERS:
        arr = np.array(edges, dtype=np.int64)
        redundant = np.zeros(len(arr), dtype=bool)
        for i in range(0, len(arr), _BLOCK):
            blk = arr[i : i + _BLOCK, None]
            # some other edge is a proper subset of the block member
            redundant[i : i + _BLOCK] = np.any(((blk & arr) == arr) & (blk != arr), axis=1)
        return [e for e, r in zip(edges, redundant) if not r]
    kept: list[int] = []
    for e in sorted(edges, key=int.bit_count):
        if not any(k & e == k for k in kept):
            kept.append(e)
    keep = set(kept)
    return [e for e in edges if e in keep]


def minimize(h: Hypergraph) -> Hypergraph:
    return Hypergraph(h.n, tuple(minimal_edges(h.edges)))


def is_antichain(h: Hypergraph) -> bool:
    return h._antichain


def responds(h: Hypergraph, z: int) -> bool:
    return any(x & z == x for x in h.edges)


def responds_many(h: Hypergraph, zs: Iterable[int]) -> list[bool]:
    """``responds`` for a batch of coalitions, vectorised for large kernels."""
    zs = list(zs)
    if h.n > _INT64_PLAYERS or len(h.edges) < _VECTOR_EDGES or len(zs) < 8:
        return [responds(h, z) for z in zs]
    arr = np.array(h.edges, dtype=np.int64)
    z = np.array(zs, dtype=np.int64)
    out = np.empty(len(z), dtype=bool)
    step = max(1, _BLOCK * 256 // len(arr))
    for i in range(0, len(z), step):
        blk = z[i : i + step, None]
        out[i : i + step] = np.any((blk & arr) == arr, axis=1)
    return out.tolist()


def transversal(h: Hypergraph, z: int) -> bool:
    return all(x & z for x in h.edges)


def _is_minimal_transversal(z: int, edges: list[int]) -> bool:
    # every member of z needs a private edge that z meets only there
    private = 0
    for x in edges:
        hit = x & z
        if hit == 0:
            return False
        if hit & (hit - 1) == 0:
            private |= hit
    return private == z


def transversal_kernel(h: Hypergraph) -> Hypergraph:
    """Exact minimal transversals by incremental (Berge) multiplication.

    Works for any hypergraph but the intermediate families can grow
    exponentially; for regular kernels prefer
    :func:`simplegames.regular.regular_transversal_kernel`.
    """
    edges = minimal_edges(h.edges)
    if not edges:
        return Hypergraph(h.n, (0,))
    if 0 in edges:
        return Hypergraph(h.n, ())
    current = {0}
    seen: list[int] = []
    for x in edges:
        seen.append(x)
        nxt = set()
        for t in current:
            if t & x:
                nxt.add(t)
                continue
            for v in bits_of(x):
                z = t | v
                if z not in nxt and _is_minimal_transversal(z, seen):
                    nxt.add(z)
        current = nxt
    return Hypergraph(h.n, tuple(sorted(current)))


# -- exhaustive oracles ------------------------------------------------------


def _check_limit(n: int, limit: int):
    if n > limit:
        raise GroundSetTooLarge(f"n={n} exceeds the oracle limit {limit}")


def universe(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def win_vector(h: Hypergraph, limit: int = ORACLE_LIMIT) -> np.ndarray:
    """Boolean vector ``w`` with ``w[z]`` true iff ``z`` responds to ``h``."""
    _check_limit(h.n, limit)
    idx = universe(h.n)
    w = np.zeros(idx.shape, dtype=bool)
    for x in h.edges:
        w |= (idx & x) == x
    return w


def transversal_vector(h: Hypergraph, limit: int = ORACLE_LIMIT) -> np.ndarray:
    _check_limit(h.n, limit)
    idx = universe(h.n)
    t = np.ones(idx.shape, dtype=bool)
    for x in h.edges:
        t &= (idx & x) != 0
    return t


def minimal_members(vec: np.ndarray, n: int) -> list[int]:
    """Minimal coalitions of an upward-closed family given as a 0/1 vector."""
    idx = universe(n)
    keep = vec.copy()
    for b in range(n):
        bit = 1 << b
        keep &= ~(((idx & bit) != 0) & vec[idx ^ bit])
    return [int(z) for z in np.flatnonzero(keep)]


def maximal_members(vec: np.ndarray, n: int) -> list[int]:
    """Maximal coalitions of a downward-closed family given as a 0/1 vector."""
    full = full_mask(n)
    # reversal maps z to its complement
    return sorted(full ^ z for z in minimal_members(vec[::-1].copy(), n))


def brute_transversal_kernel(h: Hypergraph, limit: int = ORACLE_LIMIT) -> Hypergraph:
    return Hypergraph(h.n, tuple(minimal_members(transversal_vector(h, limit), h.n)))


@dataclass(frozen=True)
class OracleProperties:
    proper: bool
    strong: bool
    decisive: bool


def oracle_properties(h: Hypergraph, limit: int = ORACLE_LIMIT) -> OracleProperties:
    w = win_vector(h, limit)
    wc = w[::-1]  # wc[z] = w[A \ z]
    proper = not bool(np.any(w & wc))
    strong = bool(np.all(w | wc))
    return OracleProperties(proper, strong, proper and strong)
