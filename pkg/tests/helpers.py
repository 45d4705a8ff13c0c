"""Generators and independent reference checks shared by the tests."""
from __future__ import annotations

import random
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from simplegames.core import Hypergraph, maximal_members, minimal_edges, minimal_members, universe, win_vector
from simplegames.regular import shift_win_vector


def random_antichain(rng: random.Random, n: int, max_edges: int = 6) -> Hypergraph:
    m = rng.randint(0, max_edges)
    masks = [rng.getrandbits(n) if n else 0 for _ in range(m)]
    return Hypergraph(n, tuple(sorted(minimal_edges(masks))))


def random_regular(rng: random.Random, n: int, max_edges: int = 4) -> Hypergraph:
    """Kernel of the regular game generated by a few random coalitions."""
    seeds = [rng.getrandbits(n) for _ in range(rng.randint(1, max_edges))]
    w = shift_win_vector(Hypergraph(n, tuple(seeds)))
    return Hypergraph(n, tuple(minimal_members(w, n)))


def random_weighted(rng: random.Random, n: int, max_weight: int = 9) -> tuple[Hypergraph, list[int], int]:
    p = [rng.randint(0, max_weight) for _ in range(n)]
    q = rng.randint(1, max(1, sum(p)))
    w = weight_vector(p) >= q
    return Hypergraph(n, tuple(minimal_members(w, n))), p, q


def weight_vector(p) -> np.ndarray:
    n = len(p)
    idx = universe(n)
    total = np.zeros(idx.shape, dtype=np.int64)
    for i, v in enumerate(p):
        total += ((idx >> i) & 1) * v
    return total


def all_antichains(n: int):
    """Every antichain over ``n`` players, by brute-force recursion."""
    masks = list(range(1 << n))

    def extend(start, chosen):
        yield Hypergraph(n, tuple(chosen))
        for i in range(start, len(masks)):
            z = masks[i]
            if all(z & x != x and z & x != z for x in chosen):
                yield from extend(i + 1, chosen + [z])

    yield from extend(0, [])


def scipy_weighted(h: Hypergraph) -> bool:
    """Threshold realizability by floating LP over all minimal winners and
    maximal losers (HiGHS), independent of the exact solver."""
    n = h.n
    w = win_vector(h)
    winners = minimal_members(w, n)
    losers = maximal_members(~w, n)
    rows, rhs = [], []
    # variables p_1..p_n, q; p(X) - q >= 0 and p(Y) - q <= -1
    for x in winners:
        rows.append([-((x >> i) & 1) for i in range(n)] + [1])
        rhs.append(0)
    for y in losers:
        rows.append([(y >> i) & 1 for i in range(n)] + [-1])
        rhs.append(-1)
    if not rows:
        return True
    res = linprog(np.zeros(n + 1), A_ub=np.array(rows, float), b_ub=np.array(rhs, float), bounds=[(0, None)] * (n + 1), method="highs")
    return res.status == 0


def subsets_of_size(n: int, k: int) -> list[int]:
    return [sum(1 << i for i in c) for c in combinations(range(n), k)]
