"""Weighted, homogeneous and majority games.

Weightedness is decided by putting the kernel in a regular order, listing
the maximal losing coalitions from the regular dual, and asking the exact
LP for weights ``p >= 0`` and quota ``q`` with ``p(X) >= q`` on minimal
winners and ``p(Y) <= q - 1`` on maximal losers.  Returned criteria use the
caller's player labels and are scaled to coprime integers.

Non-weightedness can also be certified combinatorially: multisets ``u``
of winners and ``u'`` of winners with losing complements, of equal size,
with ``u . H <= u' . (not H)`` column by column.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .core import Hypergraph, SimpleGame, bits_of, complement_family, full_mask, responds
from .lp import linear_feasibility
from .regular import (
    PlayerOrdering,
    find_regular_order,
    regular_transversal_kernel,
    shift_maximal_edges,
    shift_minimal_edges,
)


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdCriterion:
    """Quota ``q`` and weights ``p``; ``p[a - 1]`` is the weight of player ``a``."""

    q: Fraction
    p: tuple[Fraction, ...]

    def weight(self, z: int) -> Fraction:
        return sum((self.p[b.bit_length() - 1] for b in bits_of(z)), Fraction(0))

    def wins(self, z: int) -> bool:
        return self.weight(z) >= self.q

    def normalized(self) -> "ThresholdCriterion":
        values = [Fraction(self.q), *map(Fraction, self.p)]
        scale = lcm(*(v.denominator for v in values))
        ints = [int(v * scale) for v in values]
        g = gcd(*ints) or 1
        ints = [v // g for v in ints]
        return ThresholdCriterion(Fraction(ints[0]), tuple(Fraction(v) for v in ints[1:]))

    def __str__(self):
        ws = " ".join(str(v) for v in reversed(self.p))
        return f"q={self.q} p[n..1]=({ws})"


@dataclass(frozen=True)
class NotWeighted:
    """Negative answer; ``reason`` is ``"not linear"`` or ``"infeasible"``."""

    reason: str

    def __bool__(self):
        return False


def maximal_losers(h: Hypergraph) -> list[int]:
    """Maximal losing coalitions of a regular kernel (complements of its dual)."""
    return list(complement_family(regular_transversal_kernel(h)).edges)


def criterion_violations(h: Hypergraph, losers: Sequence[int], crit: ThresholdCriterion, homogeneous: bool = False) -> list[str]:
    """Exact substitution check; an empty list means the criterion is valid."""
    bad = []
    if any(v < 0 for v in crit.p):
        bad.append("negative weight")
    if crit.q < 0:
        bad.append("negative quota")
    for x in h.edges:
        w = crit.weight(x)
        if w < crit.q or (homogeneous and w != crit.q):
            bad.append(f"winner {x:0{h.n}b} has weight {w} against quota {crit.q}")
    for y in losers:
        if crit.weight(y) > crit.q - 1:
            bad.append(f"loser {y:0{h.n}b} has weight {crit.weight(y)} above {crit.q - 1}")
    return bad


def check_criterion(h: Hypergraph, crit: ThresholdCriterion, homogeneous: bool = False) -> bool:
    """Does ``crit`` realize the game with kernel ``h`` (exhaustive-free check)?

    Uses the maximal losers when ``h`` is linear; a weighted game is always
    linear, so a non-linear ``h`` is rejected.
    """
    order = find_regular_order(h)
    if order is None:
        return False
    inv = order.inverse()
    losers = [inv.apply(y) for y in maximal_losers(order.relabel(h))]
    return not criterion_violations(h, losers, crit, homogeneous)


def _independent_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    # keep a maximal linearly independent subset, in input order
    basis: list[tuple[int, list[Fraction]]] = []
    kept = []
    for r in rows:
        v = list(r)
        for piv, b in basis:
            if v[piv]:
                f = v[piv] / b[piv]
                v = [vi - f * bi for vi, bi in zip(v, b)]
        piv = next((i for i, vi in enumerate(v) if vi), None)
        if piv is not None:
            basis.append((piv, v))
            kept.append(r)
    return kept


def _incidence(z: int, n: int) -> list[int]:
    return [(z >> i) & 1 for i in range(n)]


def _threshold_lp(h: Hypergraph, losers: list[int], homogeneous: bool) -> Optional[ThresholdCriterion]:
    """Solve for a criterion of a kernel that is regular in its own labels.

    A game regular in this order has a representation with weights
    non-decreasing in the label (average the weights of equally desirable
    players), so shift-minimal winners and shift-maximal losers plus the
    monotonicity chain are enough; the full system is re-checked after.
    """
    n = h.n
    nv = n + 1  # p_1..p_n, q
    cons = []
    for a in range(n - 1):
        row = [0] * nv
        row[a], row[a + 1] = 1, -1
        cons.append((row, "<=", 0))
    if homogeneous:
        eq_rows = [[Fraction(v) for v in _incidence(x, n)] + [Fraction(-1)] for x in h.edges]
        for r in _independent_rows(eq_rows):
            cons.append((r, "==", 0))
    else:
        for x in shift_minimal_edges(list(h.edges), n):
            cons.append((_incidence(x, n) + [-1], ">=", 0))
    for y in shift_maximal_edges(losers, n):
        cons.append((_incidence(y, n) + [-1], "<=", -1))
    sol = linear_feasibility(cons, nv, nonnegative=True)
    if sol is None:
        return None
    crit = ThresholdCriterion(sol[n], tuple(sol[:n])).normalized()
    bad = criterion_violations(h, losers, crit, homogeneous)
    if bad:
        raise ArithmeticError(f"criterion failed re-verification: {bad[0]}")
    return crit


def _criterion_in_original_labels(crit: ThresholdCriterion, order: PlayerOrdering) -> ThresholdCriterion:
    return ThresholdCriterion(crit.q, tuple(crit.p[r - 1] for r in order.rank))


def _weighted(game: SimpleGame, homogeneous: bool):
    h = game.kernel
    order = find_regular_order(h)
    if order is None:
        return NotWeighted("not linear")
    hr = order.relabel(h)
    crit = _threshold_lp(hr, maximal_losers(hr), homogeneous)
    if crit is None:
        return NotWeighted("infeasible")
    return _criterion_in_original_labels(crit, order)


def is_weighted(game: SimpleGame):
    """A :class:`ThresholdCriterion` for ``game``, or a falsy :class:`NotWeighted`."""
    return _weighted(game, homogeneous=False)


def is_homogeneous(game: SimpleGame):
    """Like :func:`is_weighted` but every minimal winner must weigh exactly ``q``."""
    return _weighted(game, homogeneous=True)


@dataclass(frozen=True)
class MajorityVerdict:
    kind: str  # "majority", "submajority" or "neither"
    criterion: Optional[ThresholdCriterion] = None
    reason: str = ""

    @property
    def majority(self) -> bool:
        return self.kind == "majority"

    @property
    def submajority(self) -> bool:
        return self.kind in ("majority", "submajority")


def is_majority(game: SimpleGame) -> MajorityVerdict:
    """Classify as majority (weighted and decisive), submajority (weighted and
    strong) or neither, going through the regular dual.

    The weight step runs even when a decisive regular game is known to be
    weighted for small ``n``.
    """
    h = game.kernel
    order = find_regular_order(h)
    if order is None:
        return MajorityVerdict("neither", reason="not linear")
    hr = order.relabel(h)
    k = regular_transversal_kernel(hr)
    decisive = k == hr
    strong = decisive or all(responds(hr, y) for y in k.edges)
    if not strong:
        return MajorityVerdict("neither", reason="not strong")
    crit = _threshold_lp(hr, list(complement_family(k).edges), homogeneous=False)
    if crit is None:
        return MajorityVerdict("neither", reason="not weighted")
    crit = _criterion_in_original_labels(crit, order)
    return MajorityVerdict("majority" if decisive else "submajority", crit)


# -- non-weightedness certificates ----------------------------------------


@dataclass(frozen=True)
class NonWeightedCertificate:
    """Edge multiplicities ``u`` (winners) and ``u_prime`` (complements)."""

    u: tuple[int, ...]
    u_prime: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.u)

    def format(self) -> str:
        return " ".join(map(str, self.u)) + "\n" + " ".join(map(str, self.u_prime)) + "\n"

    @classmethod
    def parse(cls, text: str) -> "NonWeightedCertificate":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if len(lines) != 2:
            raise ValueError("a certificate has exactly two rows")
        u, up = ([int(t) for t in ln.split()] for ln in lines)
        if any(v < 0 for v in u + up):
            raise ValueError("multiplicities must be natural numbers")
        return cls(tuple(u), tuple(up))


def _column_sums(h: Hypergraph, mult: Sequence[int], complement: bool) -> list[int]:
    full = h.full
    sums = [0] * h.n
    for e, m in zip(h.edges, mult):
        if not m:
            continue
        z = full ^ e if complement else e
        for i in range(h.n):
            if (z >> i) & 1:
                sums[i] += m
    return sums


def verify_nonweighted_certificate(h: Hypergraph, cert: NonWeightedCertificate) -> bool:
    """True iff ``cert`` proves the game of kernel ``h`` is not weighted.

    Checks equal positive totals, ``u . H <= u' . (not H)`` column by column,
    and that every complement used by ``u'`` is a losing coalition.  The last
    condition keeps the argument sound for improper games: for
    ``{{1}, {2}}`` the algebraic inequality holds with ``u = (1, 0)``,
    ``u' = (0, 1)`` although ``p = (1, 1), q = 1`` realizes the game.
    """
    if len(cert.u) != len(h.edges) or len(cert.u_prime) != len(h.edges):
        raise DimensionMismatch(f"certificate rows must have {len(h.edges)} entries")
    if sum(cert.u) != sum(cert.u_prime) or sum(cert.u) < 1:
        return False
    full = h.full
    for e, m in zip(h.edges, cert.u_prime):
        if m and responds(h, full ^ e):
            return False
    lhs = _column_sums(h, cert.u, complement=False)
    rhs = _column_sums(h, cert.u_prime, complement=True)
    return all(a <= b for a, b in zip(lhs, rhs))


def search_nonweighted_certificate(h: Hypergraph, max_total: int) -> Optional[NonWeightedCertificate]:
    """Smallest-total certificate with total at most ``max_total``, or None.

    Totals are tried in increasing order, ``u`` in lexicographic multiset
    order over the kernel's edge order, then ``u'`` depth first.  Since the
    complement columns of ``u'`` are ``t - u' . H``, the search looks for
    ``u'`` with ``u' . H <= t - u . H`` per column.
    """
    n, m = h.n, len(h.edges)
    full = h.full
    cols = [_incidence(e, n) for e in h.edges]
    usable = [i for i, e in enumerate(h.edges) if not responds(h, full ^ e)]
    if not usable:
        return None
    for t in range(1, max_total + 1):
        for combo in itertools.combinations_with_replacement(range(m), t):
            cap = [t] * n
            for i in combo:
                for j, v in enumerate(cols[i]):
                    cap[j] -= v
            if min(cap) < 0:
                continue
            chosen = _fill(cols, usable, cap, t, 0)
            if chosen is not None:
                u = [0] * m
                for i in combo:
                    u[i] += 1
                up = [0] * m
                for i in chosen:
                    up[i] += 1
                cert = NonWeightedCertificate(tuple(u), tuple(up))
                if not verify_nonweighted_certificate(h, cert):
                    raise AssertionError("search produced an invalid certificate")
                return cert
    return None


def _fill(cols, usable, cap, remaining, start):
    # choose `remaining` edges (with repetition, nondecreasing) within capacity
    if remaining == 0:
        return []
    for pos in range(start, len(usable)):
        i = usable[pos]
        col = cols[i]
        if all(c >= v for c, v in zip(cap, col)):
            for j, v in enumerate(col):
                cap[j] -= v
            rest = _fill(cols, usable, cap, remaining - 1, pos)
            for j, v in enumerate(col):
                cap[j] += v
            if rest is not None:
                return [i] + rest
    return None


# -- powers of two ---------------------------------------------------------


def power_of_two_strongness(n: int, x: int) -> bool:
    """Strongness of the game with weights ``p(a) = 2**a`` and quota ``p(x)``.

    Every coalition weight is twice its bitmask, so the heaviest loser is
    the coalition whose mask is ``x - 1``; the game is strong iff its
    complement reaches the quota.  Exact because Python ints do not overflow.
    """
    full = full_mask(n)
    if x < 0 or x > full:
        raise ValueError(f"coalition {x:b} outside 1..{n}")
    if x == 0:
        return True  # quota 0: nobody loses
    y = x - 1
    return 2 * (full ^ y) >= 2 * x
