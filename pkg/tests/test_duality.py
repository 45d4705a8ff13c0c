import random

import pytest

from helpers import all_antichains, random_antichain
from simplegames.oracles import pair_flags
from simplegames.core import Hypergraph, SimpleGame, brute_transversal_kernel, oracle_properties, responds, transversal
from simplegames.duality import (
    coherence_witness,
    completeness_witness,
    game_is_decisive,
    game_is_proper,
    game_is_strong,
    is_coherent,
    is_complete,
    is_dual_pair,
    strongness_witness,
)
from simplegames.families import example3, fano


def _check_pair(h, k):
    coherent, complete = pair_flags(h, k)
    assert is_coherent(h, k) == coherent
    assert is_complete(h, k) == complete
    v = is_dual_pair(h, k)
    assert (v.coherent, v.complete, v.dual) == (coherent, complete, coherent and complete)
    w = completeness_witness(h, k)
    if w is not None:
        # w loses for H while its complement loses for K
        assert not responds(h, w) and not responds(k, h.full ^ w)
        assert transversal(k, w)
    x = coherence_witness(h, k)
    if x is not None:
        assert x[0] in h and x[1] in k and x[0] & x[1] == 0


def test_fano_is_decisive():
    g = SimpleGame(fano())
    assert game_is_proper(g) and game_is_strong(g) and game_is_decisive(g)
    assert is_dual_pair(fano(), fano()).dual


def test_dictator_is_decisive():
    g = SimpleGame(Hypergraph.from_rows(["100"]))
    assert game_is_decisive(g)


def test_matching_is_neither():
    g = SimpleGame(example3(2))
    assert not game_is_proper(g) and not game_is_strong(g)
    z = strongness_witness(g)
    assert z is not None and not g.wins(z) and not g.wins(g.kernel.full ^ z)


def test_dual_pair_with_its_transversals():
    h = example3(3)
    assert is_dual_pair(h, brute_transversal_kernel(h)).dual


def test_mismatched_ground_sets():
    with pytest.raises(ValueError):
        is_coherent(Hypergraph(2, ()), Hypergraph(3, ()))


def test_pairs_exhaustive_n3():
    fams = list(all_antichains(3))
    for h in fams:
        for k in fams:
            _check_pair(h, k)


def test_pairs_n4_against_dual_and_random():
    rng = random.Random(1)
    fams = list(all_antichains(4))
    for h in fams:
        _check_pair(h, brute_transversal_kernel(h))
        _check_pair(h, h)
        for _ in range(3):
            _check_pair(h, rng.choice(fams))


def test_pairs_random_n8():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 8)
        h = random_antichain(rng, n)
        k = rng.choice([h, brute_transversal_kernel(h), random_antichain(rng, n)])
        _check_pair(h, k)


def test_game_checks_exhaustive_n5():
    for h in all_antichains(5):
        g = SimpleGame(h)
        p = oracle_properties(h)
        assert (game_is_proper(g), game_is_strong(g), game_is_decisive(g)) == (p.proper, p.strong, p.decisive)
