import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_antichains, random_antichain
from simplegames.core import (
    GroundSetTooLarge,
    Hypergraph,
    NotAntichain,
    SimpleGame,
    brute_transversal_kernel,
    coalition,
    complement_family,
    is_antichain,
    minimal_edges,
    minimize,
    oracle_properties,
    players,
    responds,
    row,
    transversal,
    transversal_kernel,
    transversal_vector,
    win_vector,
)
from simplegames.families import example1, fano


@st.composite
def hypergraphs(draw, max_n=8, max_edges=7):
    n = draw(st.integers(0, max_n))
    edges = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_edges))
    return Hypergraph(n, tuple(edges))


def test_coalition_helpers():
    assert coalition([1, 3]) == 0b101
    assert players(0b101) == [1, 3]
    assert row(0b011, 3) == "011"
    with pytest.raises(ValueError):
        coalition([0])


def test_example1_operator_tables():
    h = example1()
    assert h.rows() == ["011", "100", "111"]
    assert complement_family(h).rows() == ["100", "011", "000"]
    assert minimize(h).rows() == ["011", "100"]
    nu = [row(z, 3) for z in range(8) if responds(h, z)]
    assert nu == ["011", "100", "101", "110", "111"]
    tau = [row(z, 3) for z in range(8) if transversal(h, z)]
    assert tau == ["101", "110", "111"]
    assert transversal_kernel(h).rows() == ["101", "110"]


def test_duplicates_are_dropped_and_order_kept():
    h = Hypergraph.from_rows(["10", "01", "10"])
    assert h.rows() == ["10", "01"]
    assert h == Hypergraph.from_rows(["01", "10"])
    assert hash(h) == hash(Hypergraph.from_rows(["01", "10"]))


def test_hypergraph_rejects_out_of_range_edges():
    with pytest.raises(ValueError):
        Hypergraph(2, (0b100,))


def test_simple_game_requires_antichain():
    with pytest.raises(NotAntichain):
        SimpleGame(example1())
    SimpleGame(minimize(example1()))


def test_degenerate_transversals():
    empty = Hypergraph(3, ())
    assert transversal_kernel(empty).edges == (0,)
    assert brute_transversal_kernel(empty).edges == (0,)
    only_empty = Hypergraph(3, (0,))
    assert transversal_kernel(only_empty).edges == ()
    assert brute_transversal_kernel(only_empty).edges == ()
    assert not any(responds(empty, z) for z in range(8))


@pytest.mark.parametrize(
    "rows, expected",
    [
        (["100"], (True, True, True)),
        (["1100", "0011"], (False, False, False)),
    ],
)
def test_oracle_properties_examples(rows, expected):
    p = oracle_properties(Hypergraph.from_rows(rows))
    assert (p.proper, p.strong, p.decisive) == expected


def test_fano_oracle_is_decisive():
    p = oracle_properties(fano())
    assert p.proper and p.strong and p.decisive


def test_oracle_limit():
    with pytest.raises(GroundSetTooLarge):
        win_vector(Hypergraph(21, ()))
    with pytest.raises(GroundSetTooLarge):
        win_vector(Hypergraph(5, ()), limit=4)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_minimize_idempotent(h):
    m = minimize(h)
    assert minimize(m) == m
    assert is_antichain(m)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_complement_of_tau_is_losing(h):
    full = h.full
    for z in range(1 << h.n):
        assert transversal(h, z) == (not responds(h, full ^ z))


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_tau_tau_is_nu(h):
    double = transversal_vector(brute_transversal_kernel(h))
    assert np.array_equal(double, win_vector(h))


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_lambda_lambda_is_minimize(h):
    assert brute_transversal_kernel(brute_transversal_kernel(h)) == minimize(h)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_tau_depends_only_on_minimal_edges(h):
    m = minimize(h)
    assert all(transversal(h, z) == transversal(m, z) for z in range(1 << h.n))


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_berge_matches_brute(h):
    assert transversal_kernel(h) == brute_transversal_kernel(h)


def test_berge_matches_brute_exhaustive_n4():
    for h in all_antichains(4):
        assert transversal_kernel(h) == brute_transversal_kernel(h)


def test_minimal_edges_random_larger():
    rng = random.Random(7)
    for _ in range(200):
        h = random_antichain(rng, 12, 10)
        assert is_antichain(h)
        assert minimal_edges(list(h.edges) + [h.full]) == list(h.edges) or not h.edges
