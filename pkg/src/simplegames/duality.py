"""Coherence, completeness and duality of hypergraph pairs.

For a pair ``(H, K)`` over one ground set ``A``:

* coherent: every edge of ``H`` meets every edge of ``K``;
* complete: for every ``Z``, ``Z`` responds to ``H`` or ``A \\ Z`` responds to ``K``;
* dual: both.

A game is proper / strong / decisive iff ``(kernel, kernel)`` is coherent /
complete / dual.  Coherence is a pairwise scan.  Completeness is coNP-complete
in general and is decided here by a branching search for a counterexample,
which also yields the witness coalition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Hypergraph, SimpleGame, bits_of, minimal_edges, responds

# exhaustive scan over the remaining support below this many players
EXHAUSTIVE_SUPPORT = 8


@dataclass(frozen=True)
class DualityVerdict:
    coherent: bool
    complete: bool
    witness: Optional[int] = None

    @property
    def dual(self) -> bool:
        return self.coherent and self.complete


def _same_ground(h: Hypergraph, k: Hypergraph):
    if h.n != k.n:
        raise ValueError(f"ground sets differ: {h.n} != {k.n}")


def coherence_witness(h: Hypergraph, k: Hypergraph) -> Optional[tuple[int, int]]:
    """First disjoint pair ``(X, Y)`` in ``H x K``, or None if coherent."""
    _same_ground(h, k)
    for x in h.edges:
        for y in k.edges:
            if x & y == 0:
                return x, y
    return None


def is_coherent(h: Hypergraph, k: Hypergraph) -> bool:
    return coherence_witness(h, k) is None


def _support(hs, ks) -> int:
    s = 0
    for e in hs:
        s |= e
    for e in ks:
        s |= e
    return s


def _submasks(mask: int):
    # all submasks of mask in increasing order
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _blocking_set(hs: list[int], ks: list[int]) -> Optional[int]:
    """Find S meeting every edge of ``hs`` and containing no edge of ``ks``.

    Variables outside the joint support are irrelevant and left out of S.
    """
    hs = minimal_edges(hs)
    ks = minimal_edges(ks)
    if 0 in hs or 0 in ks:
        return None
    if not hs:
        return 0
    if not ks:
        return _support(hs, ())

    support = _support(hs, ks)
    if support.bit_count() <= EXHAUSTIVE_SUPPORT:
        for s in _submasks(support):
            if all(x & s for x in hs) and not any(y & s == y for y in ks):
                return s
        return None

    # branch on the most frequent player, lowest label on ties
    best, best_count = 0, -1
    for v in bits_of(support):
        c = sum(1 for x in hs if x & v) + sum(1 for y in ks if y & v)
        if c > best_count:
            best, best_count = v, c
    v = best

    found = _blocking_set([x for x in hs if not x & v], [y & ~v for y in ks])
    if found is not None:
        return found | v
    return _blocking_set([x & ~v for x in hs], [y for y in ks if not y & v])


def completeness_witness(h: Hypergraph, k: Hypergraph) -> Optional[int]:
    """A coalition ``Z`` with ``Z`` not in nu(H) and ``A \\ Z`` not in nu(K).

    Returns None when the pair is complete.  Any returned witness has been
    re-checked with :func:`responds`.
    """
    _same_ground(h, k)
    s = _blocking_set(list(h.edges), list(k.edges))
    if s is None:
        return None
    z = h.full ^ s
    if responds(h, z) or responds(k, s):
        raise AssertionError(f"invalid completeness witness {z:b}")
    return z


def is_complete(h: Hypergraph, k: Hypergraph) -> bool:
    return completeness_witness(h, k) is None


def is_dual_pair(h: Hypergraph, k: Hypergraph) -> DualityVerdict:
    pair = coherence_witness(h, k)
    if pair is not None:
        # X wins for H and A \ X contains Y, so it wins for K too
        return DualityVerdict(False, is_complete(h, k), pair[0])
    z = completeness_witness(h, k)
    return DualityVerdict(True, z is None, z)


def game_is_proper(game: SimpleGame) -> bool:
    return is_coherent(game.kernel, game.kernel)


def strongness_witness(game: SimpleGame) -> Optional[int]:
    """A losing coalition whose complement also loses, or None if strong."""
    return completeness_witness(game.kernel, game.kernel)


def game_is_strong(game: SimpleGame) -> bool:
    return strongness_witness(game) is None


def game_is_decisive(game: SimpleGame) -> bool:
    return game_is_proper(game) and game_is_strong(game)
