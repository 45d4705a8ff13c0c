"""Exhaustive enumeration of small simple games.

A game over ``n <= 6`` players is stored as its truth table, a 2**n-bit word
whose bit ``z`` says whether coalition ``z`` wins.  Up-sets over ``n``
players are exactly the pairs ``(g0, g1)`` of up-sets over ``n - 1`` players
with ``g0 <= g1`` (``g1`` covers the coalitions containing player ``n``), so
all of them fit in one numpy ``uint64`` array and the cheap properties
(proper, strong, decisive, regular) are evaluated on the whole array at once.
Each antichain corresponds to exactly one up-set (its minimal members).

Properties that need the LP (linear, weighted, homogeneous, majority,
submajority) are evaluated per kernel on whatever survives the cheap filters.
"""
from __future__ import annotations

import json
import math
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .core import GroundSetTooLarge, Hypergraph, SimpleGame
from .regular import find_regular_order
from .weighted import is_homogeneous, is_majority, is_weighted

MAX_TABLE_N = 6

CHEAP = ("proper", "strong", "decisive", "regular")
EXPENSIVE = ("linear", "weighted", "homogeneous", "majority", "submajority")

_U64 = np.uint64


def upset_tables(n: int) -> np.ndarray:
    """Truth tables of every up-set over ``n`` players, in canonical order."""
    if n > MAX_TABLE_N:
        raise GroundSetTooLarge(f"truth tables only fit 64 bits (n <= {MAX_TABLE_N})")
    tabs = np.array([0, 1], dtype=_U64)
    for k in range(1, n + 1):
        half = _U64(1 << (k - 1))
        parts = [tabs[(tabs & ~g1) == 0] | (g1 << half) for g1 in tabs]
        tabs = np.concatenate(parts)
    return tabs


def _width_mask(n: int):
    w = 1 << n
    return _U64((1 << w) - 1) if w < 64 else _U64(0xFFFFFFFFFFFFFFFF)


def _reverse64(t: np.ndarray) -> np.ndarray:
    t = t.copy()
    for shift, mask in (
        (1, 0x5555555555555555),
        (2, 0x3333333333333333),
        (4, 0x0F0F0F0F0F0F0F0F),
        (8, 0x00FF00FF00FF00FF),
        (16, 0x0000FFFF0000FFFF),
        (32, 0x00000000FFFFFFFF),
    ):
        s, m = _U64(shift), _U64(mask)
        t = ((t >> s) & m) | ((t & m) << s)
    return t


def complement_tables(t: np.ndarray, n: int) -> np.ndarray:
    """Bit ``z`` of the result is bit ``A \\ z`` of the input."""
    return _reverse64(t) >> _U64(64 - (1 << n))


def _position_mask(n: int, pred: Callable[[int], bool]) -> int:
    return sum(1 << z for z in range(1 << n) if pred(z))


def table_properties(t: np.ndarray, n: int) -> dict[str, np.ndarray]:
    """Vectorised proper / strong / decisive / regular flags."""
    full = _width_mask(n)
    c = complement_tables(t, n)
    proper = (t & c) == 0
    strong = (t | c) == full
    regular = np.ones(t.shape, dtype=bool)
    for b in range(n - 1):
        lo, hi = 1 << b, 1 << (b + 1)
        mb = _U64(_position_mask(n, lambda z: bool(z & lo) and not z & hi))
        regular &= (((t & mb) << _U64(lo)) & ~t) == 0
    return {"proper": proper, "strong": strong, "decisive": proper & strong, "regular": regular}


def kernel_from_table(t: int, n: int) -> Hypergraph:
    t = int(t)
    edges = []
    for z in range(1 << n):
        if (t >> z) & 1 and not any((t >> (z ^ (1 << b))) & 1 for b in range(n) if z >> b & 1):
            edges.append(z)
    return Hypergraph(n, tuple(edges))


def table_from_kernel(h: Hypergraph) -> int:
    t = 0
    for z in range(1 << h.n):
        if any(x & z == x for x in h.edges):
            t |= 1 << z
    return t


def _expensive(name: str, game: SimpleGame) -> bool:
    if name == "linear":
        return find_regular_order(game.kernel) is not None
    if name == "weighted":
        return bool(is_weighted(game))
    if name == "homogeneous":
        return bool(is_homogeneous(game))
    if name == "majority":
        return is_majority(game).majority
    if name == "submajority":
        return is_majority(game).submajority
    raise KeyError(name)


def parse_filter(expr: Optional[str]) -> list[tuple[str, bool]]:
    """``"regular&decisive&!weighted"`` -> literals; ``,`` also separates."""
    if not expr or not expr.strip():
        return []
    lits = []
    for tok in re.split(r"[&,]", expr):
        tok = tok.strip()
        neg = tok.startswith("!") or tok.startswith("not ")
        name = tok.lstrip("!").removeprefix("not ").strip()
        if name not in CHEAP + EXPENSIVE:
            raise ValueError(f"unknown property {name!r} in filter")
        lits.append((name, not neg))
    return lits


@dataclass
class Census:
    n: int
    total: int
    matched: int
    combos: Counter = field(default_factory=Counter)

    def lines(self) -> list[str]:
        out = [f"n={self.n}", f"antichains={self.total}", f"matched={self.matched}"]
        for key in sorted(self.combos):
            out.append(f"count[{key}]={self.combos[key]}")
        return out


def enumerate_kernels(n: int, expr: Optional[str] = None, allow_long_running: bool = False) -> Iterator[Hypergraph]:
    """Every antichain over ``n`` players matching ``expr``, each once."""
    for t, _ in stream_tables(n, parse_filter(expr), allow_long_running):
        yield kernel_from_table(t, n)


def stream_tables(n, lits, allow_long_running):
    if n > MAX_TABLE_N:
        raise GroundSetTooLarge(
            f"exhaustive enumeration is limited to n <= {MAX_TABLE_N}; "
            "use regular_decisive_census for larger regular censuses"
        )
    narrowed = any(want and name in CHEAP for name, want in lits)
    if n == MAX_TABLE_N and not narrowed and not allow_long_running and any(name in EXPENSIVE for name, _ in lits):
        # millions of LP calls
        raise GroundSetTooLarge("n=6 with only LP-based filters is long running; pass allow_long_running")
    tabs = upset_tables(n)
    props = table_properties(tabs, n)
    keep = np.ones(tabs.shape, dtype=bool)
    for name, want in lits:
        if name in CHEAP:
            keep &= props[name] if want else ~props[name]
    for i in np.flatnonzero(keep):
        t = int(tabs[i])
        ok = True
        for name, want in lits:
            if name in EXPENSIVE:
                game = SimpleGame(kernel_from_table(t, n))
                if _expensive(name, game) != want:
                    ok = False
                    break
        if ok:
            yield t, (props, int(i))


def census(n: int, expr: Optional[str] = None, allow_long_running: bool = False) -> Census:
    tabs = upset_tables(n)
    props = table_properties(tabs, n)
    out = Census(n, len(tabs), 0)
    code = props["proper"] * 4 + props["strong"] * 2 + props["regular"]
    for c, cnt in enumerate(np.bincount(code.astype(np.int64), minlength=8)):
        if cnt:
            out.combos[f"proper={c >> 2 & 1},strong={c >> 1 & 1},regular={c & 1}"] += int(cnt)
    out.matched = sum(1 for _ in stream_tables(n, parse_filter(expr), allow_long_running))
    return out


# -- regular decisive census for larger n (long running) --------------------


def _regular_tables_int(k: int) -> Iterator[int]:
    """Truth tables (Python ints) of every regular up-set over ``k`` players."""
    if k <= MAX_TABLE_N:
        tabs = upset_tables(k)
        for t in tabs[table_properties(tabs, k)["regular"]]:
            yield int(t)
        return
    sub = list(_regular_tables_int(k - 1))
    half = 1 << (k - 1)
    top = 1 << (k - 2)  # bit of player k-1 inside a sub-table position
    ma = sum(1 << z for z in range(half) if z & top)
    for g1 in sub:
        for g0 in sub:
            if g0 & ~g1:
                continue
            # shifting player k-1 up to player k keeps winners winning
            if ((g0 & ma) >> top) & ~g1:
                continue
            yield g0 | (g1 << half)


def _dual_table(g: int, k: int) -> int:
    w = 1 << k
    full = (1 << w) - 1
    rev = int(format(g, f"0{w}b")[::-1], 2)
    return ~rev & full


def _labelings(t: int, n: int) -> int:
    # players in one desirability class are interchangeable
    sizes, run = [], 1
    for b in range(n - 1):
        lo, hi = 1 << b, 1 << (b + 1)
        ma = sum(1 << z for z in range(1 << n) if z & lo and not z & hi)
        if ((t & ma) << lo) == (t & (ma << lo)):
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    return math.factorial(n) // math.prod(math.factorial(s) for s in sizes)


@dataclass
class RegularCensus:
    n: int
    fixed_order: int = 0
    labeled: int = 0
    majority: int = 0
    position: int = 0

    def lines(self) -> list[str]:
        return [
            f"n={self.n}",
            f"regular_decisive_fixed_order={self.fixed_order}",
            f"regular_decisive_up_to_relabeling={self.fixed_order}",
            f"linear_decisive_labeled={self.labeled}",
            f"majority_fixed_order={self.majority}",
        ]


def regular_decisive_census(n: int, checkpoint: Optional[str] = None, every: int = 10000, with_majority: bool = True) -> RegularCensus:
    """Count regular decisive games over ``n`` players, resumable.

    A decisive game is fixed by its restriction ``g0`` to coalitions without
    player ``n``: the rest is the dual of ``g0``.  So the census walks the
    regular up-sets over ``n - 1`` players and keeps those that are proper
    and survive the shift from player ``n - 1`` to ``n``.  Fixed-order
    regular games are one per isomorphism class of linear games, so that
    count doubles as the count up to relabelling; the labelled count
    multiplies each by the number of distinct relabellings.  Progress is
    written to ``checkpoint`` (JSON) every ``every`` candidates.
    """
    if n < 1:
        raise ValueError("n must be positive")
    state = RegularCensus(n)
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as f:
            saved = json.load(f)
        if saved.get("n") == n:
            state = RegularCensus(**saved)
    k = n - 1
    half = 1 << k
    top = 1 << (k - 1) if k else 0
    ma = sum(1 << z for z in range(half) if z & top) if k else 0
    for idx, g0 in enumerate(_regular_tables_int(k)):
        if idx < state.position:
            continue
        g1 = _dual_table(g0, k)
        if not g0 & ~g1 and not (k and ((g0 & ma) >> top) & ~g1):
            t = g0 | (g1 << half)
            state.fixed_order += 1
            state.labeled += _labelings(t, n)
            if with_majority and n <= 9 and is_weighted(SimpleGame(kernel_from_table(t, n))):
                state.majority += 1
        state.position = idx + 1
        if checkpoint and state.position % every == 0:
            _save(checkpoint, state)
    if checkpoint:
        _save(checkpoint, state)
    return state


def _save(path, state):
    tmp = path + ".tmp"
    with open(tmp, "w") as f:
        json.dump(state.__dict__, f)
    os.replace(tmp, path)
