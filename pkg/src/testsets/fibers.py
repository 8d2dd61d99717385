"""Exact enumeration of fibers ``{u in N^n : A u = b}``.

Depth-first search over the leading coordinates in their given order.  The
last ``rank(A)`` coordinates (or the latest independent columns) are not
searched at all: once the others are fixed they are determined by a square
linear solve.  Branches are cut with rows whose coefficients are all
nonnegative, together with a strictly positive row taken from the row space
of ``A`` that bounds every coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .groebner import positive_grading
from .lattice import IntMatrix, IntVector, dot, rational_rank


class UnboundedFiber(ArithmeticError):
    """``ker(A)`` meets the nonnegative orthant, so fibers can be infinite."""


@dataclass(frozen=True)
class Fiber:
    matrix: IntMatrix
    rhs: tuple

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(int(x) for x in self.rhs))
        if len(self.rhs) != self.matrix.d:
            raise ValueError(f"right-hand side has {len(self.rhs)} entries, matrix has {self.matrix.d} rows")

    def contains(self, u: Sequence[int]) -> bool:
        return all(x >= 0 for x in u) and self.matrix * tuple(u) == self.rhs


def _solve_columns(A: IntMatrix):
    """Pick pivot columns from the right and precompute an exact inverse.

    Returns ``(free, piv, rows, inverse)`` where ``inverse`` solves the square
    system given by ``rows`` and ``piv``.
    """
    n = A.n
    piv: list[int] = []
    for j in range(n - 1, -1, -1):
        if rational_rank([A.column(k) for k in piv + [j]]) > len(piv):
            piv.append(j)
    piv.sort()
    rows: list[int] = []
    for i in range(A.d):
        cand = rows + [i]
        if rational_rank([[A.rows[r][j] for j in piv] for r in cand]) > len(rows):
            rows.append(i)
        if len(rows) == len(piv):
            break
    M = [[Fraction(A.rows[r][j]) for j in piv] for r in rows]
    inv = _inverse(M)
    free = [j for j in range(n) if j not in piv]
    return free, piv, rows, inv


def _inverse(M):
    k = len(M)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(M)]
    for c in range(k):
        p = next(r for r in range(c, k) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[k:] for row in aug]


class _Search:
    def __init__(self, f: Fiber, fixed: dict | None = None):
        A = f.matrix
        self.A = A
        w = positive_grading(A)
        if w is None:
            raise UnboundedFiber("ker(A) contains a nonzero nonnegative vector")
        self.free, self.piv, self.rows, inv = _solve_columns(A)
        # integer numerators over a common denominator
        den = 1
        for row in inv:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        self.den = den
        self.num = [[int(x * den) for x in row] for row in inv]
        self.fixed = dict(fixed or {})
        # bounding rows: A's own nonnegative rows plus the grading w = yA
        y = _row_combination(A, w)
        bound_rows = [(tuple(r), bi) for r, bi in zip(A.rows, f.rhs) if all(a >= 0 for a in r)]
        bound_rows.append((tuple(w), dot(y, f.rhs)))
        self.bound_rows = bound_rows
        self.b = f.rhs

    def run(self) -> Iterator[IntVector]:
        n = self.A.n
        u = [0] * n
        resid = list(self.b)
        slack = [rhs for _, rhs in self.bound_rows]
        if any(s < 0 for s in slack):
            return
        free = self.free
        A = self.A.rows
        d = self.A.d
        brows = [r for r, _ in self.bound_rows]

        def choices(j):
            if j in self.fixed:
                return [self.fixed[j]]
            hi = None
            for r, s in zip(brows, slack):
                a = r[j]
                if a > 0:
                    q = s // a
                    hi = q if hi is None or q < hi else hi
            return range(hi + 1)

        def visit(k):
            if k == len(free):
                sol = self._tail(resid)
                if sol is not None:
                    for j, x in zip(self.piv, sol):
                        u[j] = x
                    yield tuple(u)
                    for j in self.piv:
                        u[j] = 0
                return
            j = free[k]
            for x in choices(j):
                if x:
                    for i in range(d):
                        resid[i] -= A[i][j] * x
                    for t, r in enumerate(brows):
                        slack[t] -= r[j] * x
                if all(s >= 0 for s in slack):
                    u[j] = x
                    yield from visit(k + 1)
                    u[j] = 0
                if x:
                    for i in range(d):
                        resid[i] += A[i][j] * x
                    for t, r in enumerate(brows):
                        slack[t] += r[j] * x

        yield from visit(0)

    def _tail(self, resid):
        rhs = [resid[i] for i in self.rows]
        den = self.den
        sol = []
        for row in self.num:
            v = sum(a * b for a, b in zip(row, rhs))
            if v < 0 or v % den:
                return None
            sol.append(v // den)
        for j, x in zip(self.piv, sol):
            if j in self.fixed and self.fixed[j] != x:
                return None
        # rows left out of the square system must agree as well
        for i in range(self.A.d):
            if sum(self.A.rows[i][j] * x for j, x in zip(self.piv, sol)) != resid[i]:
                return None
        return sol


def _row_combination(A: IntMatrix, w: Sequence[int]) -> tuple:
    """Rational ``y`` with ``y A = w`` (``w`` lies in the row space)."""
    from .lp import LPProblem, lp_solve, FREE

    At = A.transpose()
    res = lp_solve(LPProblem(At.rows, w, [0] * A.d, "min", [FREE] * A.d))
    return res.point


def iter_fiber(f: Fiber, fixed: dict | None = None) -> Iterator[IntVector]:
    """All points of the fiber in depth-first order; ``fixed`` pins coordinates."""
    return _Search(f, fixed).run()


def count_feasible(f: Fiber) -> int:
    return sum(1 for _ in iter_fiber(f))


def find_feasible(f: Fiber, fixed: dict | None = None) -> IntVector | None:
    for u in iter_fiber(f, fixed):
        return u
    return None


def enumerate_optimal(f: Fiber, c: Sequence[int]) -> list[IntVector]:
    """Every fiber point of minimum cost, sorted."""
    best = None
    out: list[IntVector] = []
    for u in iter_fiber(f):
        v = dot(c, u)
        if best is None or v < best:
            best, out = v, [u]
        elif v == best:
            out.append(u)
    return sorted(out)
