import random
from itertools import permutations

import pytest

from helpers import all_antichains, random_antichain, random_regular
from simplegames.core import Hypergraph, brute_transversal_kernel, oracle_properties
from simplegames.duality import is_coherent, is_complete
from simplegames.families import EXAMPLE5, example4, example5, fano, gamma, gamma_shift_kernel
from simplegames.oracles import brute_is_linear, brute_is_regular
from simplegames.regular import (
    NotRegular,
    PlayerOrdering,
    find_regular_order,
    is_regular,
    regular_is_decisive,
    regular_is_proper,
    regular_is_strong,
    regular_transversal_kernel,
    regularity_violation,
    shift_is_coherent,
    shift_is_complete_oracle,
    shift_kernel_to_kernel,
    shift_leq,
    shift_minimize,
    shift_responds,
    shift_transversal_kernel_oracle,
)


def _shift_up_closure(x, n):
    # every coalition reachable by moving a member to a stronger free player
    # or adding a player
    seen, todo = {x}, [x]
    while todo:
        z = todo.pop()
        nxt = [z | (1 << i) for i in range(n) if not z >> i & 1]
        for b in range(n):
            for a in range(b + 1, n):
                if z >> b & 1 and not z >> a & 1:
                    nxt.append(z ^ (1 << b) ^ (1 << a))
        for y in nxt:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


@pytest.mark.parametrize("n", range(0, 6))
def test_shift_leq_matches_shift_closure(n):
    for x in range(1 << n):
        up = _shift_up_closure(x, n)
        for z in range(1 << n):
            assert shift_leq(x, z, n) == (z in up)


def test_shift_order_examples():
    assert shift_leq(0b0011, 0b0101, 4)
    assert not shift_leq(0b0101, 0b0011, 4)
    assert shift_leq(0b001, 0b010, 3) and shift_leq(0b001, 0b001, 3)


def test_example4_regular_and_shift_kernel():
    h = example4()
    assert is_regular(h)
    sk = shift_minimize(h)
    assert sk.rows() == list(EXAMPLE5)
    assert shift_kernel_to_kernel(sk) == h
    assert regular_transversal_kernel(h) == h
    assert regular_is_decisive(h)


def test_fano_not_linear():
    assert not is_regular(fano())
    x, a, b = regularity_violation(fano())
    assert x in fano() and a > b
    assert find_regular_order(fano()) is None
    with pytest.raises(NotRegular):
        shift_minimize(fano())


def test_order_for_single_player():
    order = find_regular_order(Hypergraph.from_rows(["010"]))
    assert order is not None
    assert order.rank == (1, 3, 2)
    assert is_regular(order.relabel(Hypergraph.from_rows(["010"])))


def test_ordering_round_trip():
    o = PlayerOrdering.from_weakest_first([3, 1, 2])
    for z in range(8):
        assert o.invert(o.apply(z)) == z
    assert o.inverse().inverse() == o


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_gamma_economy(m):
    w = shift_kernel_to_kernel(gamma_shift_kernel(m))
    assert w == gamma(m)
    assert len(shift_minimize(gamma(m))) == 1


def test_regularity_and_linearity_exhaustive_n4():
    for h in all_antichains(4):
        assert is_regular(h) == brute_is_regular(h)
        assert is_regular(h) == is_regular(h, full_pairs=True)
        order = find_regular_order(h)
        assert (order is not None) == brute_is_linear(h)
        if order is not None:
            assert is_regular(order.relabel(h))


def test_linearity_random_n7():
    rng = random.Random(3)
    for _ in range(300):
        h = random_antichain(rng, 7, 5)
        order = find_regular_order(h)
        assert (order is not None) == brute_is_linear(h)
        if order is not None:
            assert is_regular(order.relabel(h))


def test_relabelled_regular_games_are_found():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 8)
        h = random_regular(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        scrambled = PlayerOrdering(tuple(perm)).relabel(h)
        assert find_regular_order(scrambled) is not None


def test_regular_dual_matches_brute():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 10)
        h = random_regular(rng, n)
        k = regular_transversal_kernel(h)
        assert k == brute_transversal_kernel(h)
        assert len(k) <= n * len(h) + 1
        p = oracle_properties(h)
        assert (regular_is_proper(h), regular_is_strong(h), regular_is_decisive(h)) == (p.proper, p.strong, p.decisive)


def test_regular_dual_degenerate():
    assert regular_transversal_kernel(Hypergraph(3, ())).edges == (0,)
    assert regular_transversal_kernel(Hypergraph(3, (0,))).edges == ()


def test_shift_transversal_oracle():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(1, 8)
        h = random_regular(rng, n)
        expected = shift_minimize(brute_transversal_kernel(h))
        assert shift_transversal_kernel_oracle(shift_minimize(h)) == expected


def test_shift_pairs_match_expanded_pairs():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 7)
        hp = shift_minimize(random_regular(rng, n))
        kp = shift_minimize(random_regular(rng, n))
        h, k = shift_kernel_to_kernel(hp), shift_kernel_to_kernel(kp)
        assert shift_is_coherent(hp, kp) == is_coherent(h, k)
        assert shift_is_complete_oracle(hp, kp) == is_complete(h, k)
        for z in range(1 << n):
            assert shift_responds(hp, z) == any(x & z == x for x in h.edges)


def test_permutation_invariance_of_linearity():
    h = example5()
    base = shift_kernel_to_kernel(h)
    for perm in list(permutations(range(1, 10)))[:: 40000]:
        assert find_regular_order(PlayerOrdering(perm).relabel(base)) is not None
