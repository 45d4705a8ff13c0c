"""Exact linear feasibility over the rationals.

A phase-one simplex in dictionary form on ``Fraction`` values with Bland's
rule, so it terminates and never rounds.  Constraints are triples
``(coeffs, sense, rhs)`` with ``sense`` one of ``"<="``, ``">="``, ``"=="``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Constraint = tuple[Sequence, str, object]

_SENSES = ("<=", ">=", "==")


def _as_leq_rows(constraints, nvars):
    rows, rhs = [], []
    for coeffs, sense, b in constraints:
        if len(coeffs) != nvars:
            raise ValueError(f"constraint has {len(coeffs)} coefficients, expected {nvars}")
        if sense not in _SENSES:
            raise ValueError(f"unknown sense {sense!r}")
        a = [Fraction(c) for c in coeffs]
        b = Fraction(b)
        if sense in ("<=", "=="):
            rows.append(a)
            rhs.append(b)
        if sense in (">=", "=="):
            rows.append([-c for c in a])
            rhs.append(-b)
    return rows, rhs


def _phase_one(a_rows: list[list[Fraction]], b: list[Fraction]) -> Optional[list[Fraction]]:
    """A point ``x >= 0`` with ``a_rows @ x <= b``, or None."""
    m = len(a_rows)
    n = len(a_rows[0]) if a_rows else 0
    if all(bi >= 0 for bi in b):
        return [Fraction(0)] * n

    # variables: 0..n-1 structural, n..n+m-1 slacks, n+m the auxiliary x0
    x0 = n + m
    nonbasic = list(range(n)) + [x0]
    basic = [n + i for i in range(m)]
    # basic[i] = const[i] + sum_k coef[i][k] * nonbasic[k]
    const = list(b)
    coef = [[-v for v in row] + [Fraction(1)] for row in a_rows]
    obj_coef = [Fraction(0)] * n + [Fraction(-1)]
    obj_const = Fraction(0)

    def pivot(r, k):
        nonlocal obj_const
        piv = coef[r][k]
        # solve row r for nonbasic[k]
        new_row = [-v / piv for v in coef[r]]
        new_row[k] = 1 / piv
        new_const = -const[r] / piv
        for i in range(m):
            if i == r:
                continue
            f = coef[i][k]
            if f:
                row_i = coef[i]
                for j, v in enumerate(new_row):
                    if j == k:
                        row_i[j] = f * v
                    elif v:
                        row_i[j] += f * v
                const[i] += f * new_const
        f = obj_coef[k]
        if f:
            for j, v in enumerate(new_row):
                if j == k:
                    obj_coef[j] = f * v
                elif v:
                    obj_coef[j] += f * v
            obj_const += f * new_const
        coef[r] = new_row
        const[r] = new_const
        basic[r], nonbasic[k] = nonbasic[k], basic[r]

    k0 = nonbasic.index(x0)
    pivot(min(range(m), key=lambda i: (const[i], basic[i])), k0)

    while True:
        enter = None
        for k in sorted(range(len(nonbasic)), key=lambda k: nonbasic[k]):
            if obj_coef[k] > 0:
                enter = k
                break
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            d = coef[i][enter]
            if d < 0:
                ratio = const[i] / -d
                key = (ratio, 0 if basic[i] == x0 else 1, basic[i])
                if best is None or key < best:
                    leave, best = i, key
        if leave is None:
            # cannot happen: x0 bounds the objective
            raise ArithmeticError("phase-one objective unbounded")
        pivot(leave, enter)

    if obj_const < 0:
        return None
    x = [Fraction(0)] * n
    for i, v in enumerate(basic):
        if v < n:
            x[v] = const[i]
    return x


def linear_feasibility(constraints: Sequence[Constraint], nvars: int, nonnegative: bool = False) -> Optional[list[Fraction]]:
    """An exact rational point satisfying every constraint, or None.

    Variables are free unless ``nonnegative`` is set.  The returned point
    is checked by substitution before it is handed back.
    """
    constraints = list(constraints)
    rows, rhs = _as_leq_rows(constraints, nvars)
    if not rows:
        return [Fraction(0)] * nvars
    if nonnegative:
        x = _phase_one(rows, rhs)
    else:
        split = [r + [-v for v in r] for r in rows]
        y = _phase_one(split, rhs)
        x = None if y is None else [y[i] - y[nvars + i] for i in range(nvars)]
    if x is None:
        return None
    if not satisfies(constraints, x) or (nonnegative and any(v < 0 for v in x)):
        raise ArithmeticError("simplex returned a point that fails substitution")
    return x


def satisfies(constraints: Sequence[Constraint], x: Sequence) -> bool:
    for coeffs, sense, b in constraints:
        lhs = sum(Fraction(c) * v for c, v in zip(coeffs, x))
        b = Fraction(b)
        if sense == "<=" and not lhs <= b:
            return False
        if sense == ">=" and not lhs >= b:
            return False
        if sense == "==" and lhs != b:
            return False
    return True
