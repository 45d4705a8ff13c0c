"""Embedding simple games into regular games over twice as many players.

``T`` sends a coalition ``X`` over players ``1..n`` to a coalition over
``1..2n`` that contains ``2a`` when ``a`` is in ``X`` and ``2a - 1``
otherwise.  Inclusion between coalitions becomes the shift order between
their images.  Adding the gadget edges ``Z^a = {2a} | {2b - 1 : b >= a}``
turns a pair ``(H, K)`` into ``(T(H) + G, T(K) + G)`` whose shift-order
coherence and completeness match those of the original pair, so
strongness and decisiveness of simple games reduce to regular games.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, SimpleGame
from .regular import RegularKernel, shift_minimal_edges


def embed_T(x: int, n: int) -> int:
    out = 0
    for a in range(1, n + 1):
        if (x >> (a - 1)) & 1:
            out |= 1 << (2 * a - 1)
        else:
            out |= 1 << (2 * a - 2)
    return out


def unembed_T(xp: int, n: int) -> int:
    """Inverse of :func:`embed_T`; raises if ``xp`` is not in the image."""
    x = 0
    for a in range(1, n + 1):
        hi = (xp >> (2 * a - 1)) & 1
        lo = (xp >> (2 * a - 2)) & 1
        if hi == lo:
            raise ValueError(f"{xp:0{2 * n}b} is not a T-image")
        if hi:
            x |= 1 << (a - 1)
    return x


def in_T_image(xp: int, n: int) -> bool:
    return all(((xp >> (2 * a - 1)) & 1) != ((xp >> (2 * a - 2)) & 1) for a in range(1, n + 1))


def gadget_edge(a: int, n: int) -> int:
    z = 1 << (2 * a - 1)
    for b in range(a, n + 1):
        z |= 1 << (2 * b - 2)
    return z


def gadget(n: int) -> Hypergraph:
    """``Z^n, ..., Z^1`` over ``2n`` players."""
    if n < 1:
        raise ValueError("the gadget needs at least one player")
    return Hypergraph(2 * n, tuple(gadget_edge(a, n) for a in range(n, 0, -1)))


def embed_family(h: Hypergraph) -> Hypergraph:
    return Hypergraph(2 * h.n, tuple(embed_T(x, h.n) for x in h.edges))


@dataclass(frozen=True)
class EmbeddedPair:
    n: int
    hp: Hypergraph
    kp: Hypergraph


def reduce_pair(h: Hypergraph, k: Hypergraph) -> EmbeddedPair:
    if h.n != k.n:
        raise ValueError(f"ground sets differ: {h.n} != {k.n}")
    g = gadget(h.n).edges
    return EmbeddedPair(
        h.n,
        Hypergraph(2 * h.n, embed_family(h).edges + g),
        Hypergraph(2 * k.n, embed_family(k).edges + g),
    )


def reduce_game(game: SimpleGame, minimize: bool = False) -> RegularKernel:
    """Shift-order specification ``T(kernel) + gadget`` over ``2n`` players.

    The union is returned as built unless ``minimize`` drops edges that are
    shift-dominated by another edge.
    """
    edges = reduce_pair(game.kernel, game.kernel).hp.edges
    if minimize:
        edges = tuple(shift_minimal_edges(list(edges), 2 * game.n))
    return RegularKernel(2 * game.n, edges)
