"""Exact rational linear programming.

Dense two-phase simplex over :class:`fractions.Fraction` with Bland's
smallest-index rule.  Problems are stated as

    maximize  c . y   subject to   A y <= b,   y >= 0

and every optimal outcome carries a dual certificate ``z`` with
``A^T z >= c``, ``z >= 0`` and ``c . y == b . z``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class LPInputError(ValueError):
    pass


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    UNBOUNDED = "Unbounded"
    INFEASIBLE = "Infeasible"


def _frac_vec(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    constraint_matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]

    def __init__(self, num_vars: int, constraint_matrix: Sequence[Sequence], rhs: Sequence, objective: Sequence):
        rows = tuple(_frac_vec(r) for r in constraint_matrix)
        rhs = _frac_vec(rhs)
        objective = _frac_vec(objective)
        if num_vars < 0:
            raise LPInputError("num_vars must be nonnegative")
        if any(len(r) != num_vars for r in rows):
            raise LPInputError(f"every constraint row needs exactly {num_vars} coefficients")
        if len(rhs) != len(rows):
            raise LPInputError(f"{len(rows)} rows but {len(rhs)} right-hand sides")
        if len(objective) != num_vars:
            raise LPInputError(f"objective has {len(objective)} entries, expected {num_vars}")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "constraint_matrix", rows)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "objective", objective)

    @property
    def num_rows(self) -> int:
        return len(self.rhs)


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None
    dual_solution: tuple[Fraction, ...] | None = None


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination for a nonsingular square system."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular basis matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        if p != 1:
            aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


class _Tableau:
    # Columns: structural y (n), slacks s (m), artificials (one per row that
    # started with negative rhs).  Row k represents  A_k y + s_k = b_k, negated
    # when b_k < 0 so the rhs column stays nonnegative.

    def __init__(self, lp: LinearProgram):
        n, m = lp.num_vars, lp.num_rows
        self.n, self.m = n, m
        neg_rows = [k for k in range(m) if lp.rhs[k] < 0]
        self.art_start = n + m
        self.ncols = n + m + len(neg_rows)
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        art = self.art_start
        for k in range(m):
            row = list(lp.constraint_matrix[k]) + [Fraction(0)] * (m + len(neg_rows))
            row[n + k] = Fraction(1)
            b = lp.rhs[k]
            if b < 0:
                row = [-x for x in row]
                b = -b
                row[art] = Fraction(1)
                self.basis.append(art)
                art += 1
            else:
                self.basis.append(n + k)
            self.rows.append(row)
            self.rhs.append(b)

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow = [x / p for x in prow]
            self.rows[r] = prow
            self.rhs[r] = self.rhs[r] / p
        for k in range(self.m):
            if k != r:
                f = self.rows[k][c]
                if f != 0:
                    self.rows[k] = [x - f * y for x, y in zip(self.rows[k], prow)]
                    self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost: list[Fraction], allowed: int) -> list[Fraction]:
        # d_j = c_j - c_B B^{-1} A_j for j < allowed; positive means improving.
        d = list(cost[:allowed])
        for k, bj in enumerate(self.basis):
            cb = cost[bj]
            if cb != 0:
                row = self.rows[k]
                for j in range(allowed):
                    if row[j] != 0:
                        d[j] -= cb * row[j]
        return d

    def run(self, cost: list[Fraction], allowed: int) -> bool:
        """Maximize ``cost`` over columns ``< allowed``.  False means unbounded."""
        while True:
            d = self.reduced_costs(cost, allowed)
            basic = set(self.basis)
            entering = next((j for j in range(allowed) if j not in basic and d[j] > 0), None)
            if entering is None:
                return True
            best = None
            for k in range(self.m):
                a = self.rows[k][entering]
                if a > 0:
                    ratio = self.rhs[k] / a
                    key = (ratio, self.basis[k])
                    if best is None or key < best[0]:
                        best = (key, k)
            if best is None:
                return False
            self.pivot(best[1], entering)


def solve_max(lp: LinearProgram) -> LPOutcome:
    """Maximize ``lp.objective . y`` subject to ``A y <= b``, ``y >= 0``."""
    if not isinstance(lp, LinearProgram):
        raise LPInputError("expected a LinearProgram")
    n, m = lp.num_vars, lp.num_rows
    tab = _Tableau(lp)

    if tab.ncols > tab.art_start:
        phase1 = [Fraction(0)] * tab.ncols
        for j in range(tab.art_start, tab.ncols):
            phase1[j] = Fraction(-1)
        tab.run(phase1, tab.ncols)
        if any(tab.rhs[k] != 0 for k in range(m) if tab.basis[k] >= tab.art_start):
            return LPOutcome(Status.INFEASIBLE)
        # [A | I] has full row rank, so a degenerate artificial always has a
        # nonzero entry in some original column.
        for k in range(m):
            if tab.basis[k] >= tab.art_start:
                c = next(j for j in range(tab.art_start) if tab.rows[k][j] != 0)
                tab.pivot(k, c)

    cost = list(lp.objective) + [Fraction(0)] * (tab.ncols - n)
    if not tab.run(cost, tab.art_start):
        return LPOutcome(Status.UNBOUNDED)

    y = [Fraction(0)] * n
    for k, bj in enumerate(tab.basis):
        if bj < n:
            y[bj] = tab.rhs[k]
    value = sum((c * v for c, v in zip(lp.objective, y)), Fraction(0))

    # Dual: solve B^T z = c_B on the original [A | I] columns.
    if m:
        cols = []
        for bj in tab.basis:
            if bj < n:
                cols.append([lp.constraint_matrix[k][bj] for k in range(m)])
            else:
                cols.append([Fraction(int(k == bj - n)) for k in range(m)])
        cb = [lp.objective[bj] if bj < n else Fraction(0) for bj in tab.basis]
        z = _solve_square(cols, cb)
    else:
        z = []
    return LPOutcome(Status.OPTIMAL, value, tuple(y), tuple(z))


def check_certificates(lp: LinearProgram, out: LPOutcome) -> bool:
    """Re-verify primal feasibility, dual feasibility and strong duality exactly."""
    if out.status is not Status.OPTIMAL or out.solution is None or out.dual_solution is None:
        return False
    y, z = out.solution, out.dual_solution
    if len(y) != lp.num_vars or len(z) != lp.num_rows:
        return False
    if any(v < 0 for v in y) or any(v < 0 for v in z):
        return False
    for row, b in zip(lp.constraint_matrix, lp.rhs):
        if sum((a * v for a, v in zip(row, y)), Fraction(0)) > b:
            return False
    for j in range(lp.num_vars):
        col = sum((lp.constraint_matrix[k][j] * z[k] for k in range(lp.num_rows)), Fraction(0))
        if col < lp.objective[j]:
            return False
    primal = sum((c * v for c, v in zip(lp.objective, y)), Fraction(0))
    dual = sum((b * v for b, v in zip(lp.rhs, z)), Fraction(0))
    return primal == dual and out.value == primal
