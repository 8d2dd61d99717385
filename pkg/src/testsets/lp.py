"""Exact rational linear programming.

A dense-tableau two-phase simplex over ``fractions.Fraction`` with Bland's
rule, plus the auxiliary programs that measure the integer programming gap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lattice import IntMatrix, dot

NONNEG = "nonneg"
FREE = "free"

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class UnboundedLP(ArithmeticError):
    pass


class InfeasibleLP(ArithmeticError):
    pass


@dataclass
class LPProblem:
    """``min`` or ``max`` of ``objective . x`` subject to ``A x = rhs``.

    ``var_status[i]`` is ``"nonneg"`` or ``"free"``.
    """

    A: Sequence[Sequence]
    rhs: Sequence
    objective: Sequence
    sense: str = "min"
    var_status: Sequence[str] | None = None

    def __post_init__(self):
        if isinstance(self.A, IntMatrix):
            self.A = self.A.rows
        self.A = [[Fraction(x) for x in r] for r in self.A]
        self.rhs = [Fraction(x) for x in self.rhs]
        self.objective = [Fraction(x) for x in self.objective]
        n = len(self.objective)
        if self.var_status is None:
            self.var_status = [NONNEG] * n
        self.var_status = list(self.var_status)
        if len(self.rhs) != len(self.A):
            raise ValueError("right-hand side length differs from the row count")
        if any(len(r) != n for r in self.A) or len(self.var_status) != n:
            raise ValueError("inconsistent LP dimensions")
        if self.sense not in ("min", "max"):
            raise ValueError(f"sense must be 'min' or 'max', not {self.sense!r}")
        bad = set(self.var_status) - {NONNEG, FREE}
        if bad:
            raise ValueError(f"unknown variable status {bad}")

    @property
    def n(self) -> int:
        return len(self.objective)


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    point: tuple | None = None
    pivots: int = field(default=0, compare=False)


class _Tableau:
    # rows: m constraint rows over columns 0..ncols-1 followed by the rhs
    def __init__(self, rows, basis):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def pivot(self, r, c):
        row = self.rows[r]
        p = row[c]
        if p != 1:
            row = [x / p for x in row]
            self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost, ncols):
        red = list(cost[:ncols])
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(ncols):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def run(self, cost, allowed):
        """Minimize ``cost`` over the columns in ``allowed`` with Bland's rule."""
        ncols = len(cost)
        while True:
            red = self.reduced_costs(cost, ncols)
            enter = next((j for j in range(ncols) if allowed[j] and red[j] < 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def lp_solve(p: LPProblem) -> LPResult:
    """Solve ``p`` exactly; infeasible and unbounded are statuses, not errors."""
    # free variables become differences of two nonnegative columns
    cols: list[tuple[int, int]] = []
    for i, st in enumerate(p.var_status):
        cols.append((i, 1))
        if st == FREE:
            cols.append((i, -1))
    m = len(p.A)
    ncols = len(cols)
    rows = []
    for r in range(m):
        row = [p.A[r][i] * s for i, s in cols]
        rhs = p.rhs[r]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[r] = Fraction(1)
        rows.append(row + art + [rhs])
    total = ncols + m
    tab = _Tableau(rows, [ncols + r for r in range(m)])

    phase1 = [Fraction(0)] * ncols + [Fraction(1)] * m
    tab.run(phase1, [True] * total)
    infeas = sum(tab.rows[i][-1] for i, b in enumerate(tab.basis) if b >= ncols)
    if infeas > 0:
        return LPResult(INFEASIBLE, pivots=tab.pivots)

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= ncols:
            j = next((j for j in range(ncols) if tab.rows[i][j] != 0), None)
            if j is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    sign = 1 if p.sense == "min" else -1
    cost = [sign * p.objective[i] * s for i, s in cols] + [Fraction(0)] * m
    allowed = [True] * ncols + [False] * m
    status = tab.run(cost, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    x = [Fraction(0)] * p.n
    for r, b in enumerate(tab.basis):
        if b < ncols:
            i, s = cols[b]
            x[i] += s * tab.rows[r][-1]
    value = dot(p.objective, x)
    return LPResult(OPTIMAL, value, tuple(x), pivots=tab.pivots)


def aux_gap_lp(A: IntMatrix, c: Sequence[int], m, incr=None) -> Fraction:
    """Optimal value of  max c.(u - v)  s.t.  A(u - v) = 0,  v_i >= 0 off incr(u).

    ``m`` is a maximally optimal point (anything with ``point`` and ``incr``
    attributes), or a plain point when ``incr`` is given.  Raises
    ``UnboundedLP`` if the program has no finite optimum.
    """
    if incr is None:
        point, incr = m.point, m.incr
    else:
        point = m
    incr = set(incr)
    status = [FREE if i in incr else NONNEG for i in range(A.n)]
    b = A * tuple(point)
    res = lp_solve(LPProblem(A.rows, b, c, "min", status))
    if res.status == UNBOUNDED:
        raise UnboundedLP(f"auxiliary LP unbounded at {tuple(point)}")
    if res.status != OPTIMAL:
        raise InfeasibleLP(f"auxiliary LP infeasible at {tuple(point)}")
    return dot(c, point) - res.value


def lp_relaxation(A: IntMatrix, b: Sequence, c: Sequence) -> LPResult:
    """``min c.u`` over ``A u = b``, ``u >= 0`` real."""
    return lp_solve(LPProblem(A.rows, b, c, "min"))
