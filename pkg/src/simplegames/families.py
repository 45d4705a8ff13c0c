"""Named instances: fixed tables and parametric families."""
from __future__ import annotations

from itertools import combinations

from .core import Hypergraph
from .reduction import reduce_pair


class UnknownFamily(KeyError):
    pass


EXAMPLE1 = ("011", "100", "111")

FANO = ("0000111", "0011010", "0101100", "0110001", "1001001", "1010100", "1100010")

EXAMPLE4 = (
    "011011011",
    "011011101",
    "011011110",
    "011100100",
    "011101000",
    "011110000",
    "100011100",
    "100100011",
    "100100101",
    "100100110",
    "100101000",
    "100110000",
    "101000000",
    "110000000",
)

# multiplicities certifying that EXAMPLE4 is not weighted
EXAMPLE4_U = (1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0)

EXAMPLE5 = ("011011011", "011100100", "100011100", "100100011", "100101000", "101000000")


def example1() -> Hypergraph:
    return Hypergraph.from_rows(EXAMPLE1)


def fano() -> Hypergraph:
    return Hypergraph.from_rows(FANO)


def example4() -> Hypergraph:
    return Hypergraph.from_rows(EXAMPLE4)


def example5() -> Hypergraph:
    return Hypergraph.from_rows(EXAMPLE5)


def example3(m: int) -> Hypergraph:
    """The perfect matching ``{2i, 2i-1}`` over ``2m`` players, largest pair first."""
    if m < 1:
        raise ValueError("m must be positive")
    return Hypergraph(2 * m, tuple(0b11 << (2 * (i - 1)) for i in range(m, 0, -1)))


def example3_dual_size(m: int) -> int:
    return 2**m


def gamma(m: int) -> Hypergraph:
    """All ``m``-subsets of ``2m`` players: the kernel of the game whose only
    shift-minimal winner is the weakest ``m`` players."""
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m
    edges = [sum(1 << i for i in c) for c in combinations(range(n), m)]
    return Hypergraph(n, tuple(sorted(edges, reverse=True)))


def gamma_shift_kernel(m: int) -> Hypergraph:
    return Hypergraph(2 * m, ((1 << m) - 1,))


def matching_embedded(m: int) -> Hypergraph:
    """``T(H) + gadget`` for the perfect matching over ``2m`` players."""
    return reduce_pair(example3(m), example3(m)).hp


_FIXED = {"fano": fano, "example1": example1, "example4": example4, "example5": example5}
_PARAMETRIC = {"example3": example3, "gamma": gamma, "matching-embedded": matching_embedded}

NAMES = tuple(sorted(_FIXED) + sorted(_PARAMETRIC))


def family(name: str, m: int | None = None) -> Hypergraph:
    if name in _FIXED:
        return _FIXED[name]()
    if name in _PARAMETRIC:
        if m is None:
            raise ValueError(f"family {name!r} needs a parameter m")
        return _PARAMETRIC[name](m)
    raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(NAMES)}")
