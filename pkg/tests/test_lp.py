import random
from fractions import Fraction

import pytest

from simplegames.lp import linear_feasibility, satisfies


def fourier_motzkin(cons, nvars, nonnegative):
    """Feasibility by variable elimination: equalities are substituted away,
    inequalities are combined pairwise (rows kept normalised and distinct)."""
    eqs, ineqs = [], set()

    def add_ineq(target, a, b):
        # a . x <= b, scaled so the largest coefficient is 1
        scale = max((abs(v) for v in a), default=0)
        if scale:
            target.add((tuple(v / scale for v in a), b / scale))
        else:
            target.add((tuple(a), b))

    for a, op, b in cons:
        a, b = [Fraction(v) for v in a], Fraction(b)
        if op == "==":
            eqs.append((a, b))
        else:
            if op == ">=":
                a, b = [-v for v in a], -b
            add_ineq(ineqs, a, b)
    if nonnegative:
        for j in range(nvars):
            add_ineq(ineqs, [Fraction(-1) if i == j else Fraction(0) for i in range(nvars)], Fraction(0))
    for j in range(nvars):
        pivot = next((e for e in eqs if e[0][j] != 0), None)
        nxt = set()
        if pivot is not None:
            pa, pb = pivot
            eqs.remove(pivot)

            def sub(a, b):
                f = a[j] / pa[j]
                return [x - f * y for x, y in zip(a, pa)], b - f * pb

            eqs = [sub(a, b) for a, b in eqs]
            for a, b in ineqs:
                add_ineq(nxt, *sub(list(a), b))
        else:
            pos = [r for r in ineqs if r[0][j] > 0]
            neg = [r for r in ineqs if r[0][j] < 0]
            nxt = {r for r in ineqs if r[0][j] == 0}
            for ap, bp in pos:
                for an, bn in neg:
                    cp, cn = ap[j], -an[j]
                    add_ineq(nxt, [cn * x + cp * y for x, y in zip(ap, an)], cn * bp + cp * bn)
        ineqs = nxt
    return all(b == 0 for _, b in eqs) and all(b >= 0 for _, b in ineqs)


def test_simple_feasible():
    cons = [([1, 1], ">=", 2), ([1, -1], "==", 0)]
    x = linear_feasibility(cons, 2)
    assert x is not None and satisfies(cons, x)
    assert all(isinstance(v, Fraction) for v in x)


def test_simple_infeasible():
    cons = [([1], ">=", 1), ([1], "<=", 0)]
    assert linear_feasibility(cons, 1) is None


def test_nonnegativity():
    cons = [([1], "<=", -1)]
    assert linear_feasibility(cons, 1) is not None
    assert linear_feasibility(cons, 1, nonnegative=True) is None


def test_empty_system():
    assert linear_feasibility([], 3) == [0, 0, 0]


def test_bad_operator():
    with pytest.raises(ValueError):
        linear_feasibility([([1], "<", 0)], 1)


def test_oracle_sanity():
    assert fourier_motzkin([([1, 1], ">=", 2), ([1, 0], "<=", 0), ([0, 1], "<=", 1)], 2, False) is False
    assert fourier_motzkin([([1, -1], "==", 0), ([1, 1], "==", 4)], 2, True) is True


@pytest.mark.parametrize("seed", range(6))
def test_matches_fourier_motzkin(seed):
    rng = random.Random(seed)
    for _ in range(150):
        nvars = rng.randint(1, 4)
        cons = []
        for _ in range(rng.randint(1, 7)):
            a = [rng.randint(-3, 3) for _ in range(nvars)]
            cons.append((a, rng.choice(["<=", ">=", "=="]), rng.randint(-4, 4)))
        nonneg = rng.random() < 0.5
        x = linear_feasibility(cons, nvars, nonnegative=nonneg)
        assert (x is not None) == fourier_motzkin(cons, nvars, nonneg)
        if x is not None:
            assert satisfies(cons, x)
            assert not nonneg or all(v >= 0 for v in x)
