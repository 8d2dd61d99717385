"""Hierarchical models for multiway contingency tables.

Cells and marginal cells are 1-based multi-indices listed lexicographically
with the first index varying slowest.  The model matrix has one block of rows
per facet, in facet order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .fibers import Fiber, find_feasible
from .lattice import IntMatrix
from .lp import OPTIMAL, LPProblem, lp_solve


class InvalidFacet(ValueError):
    pass


class InfeasibleMarginals(ArithmeticError):
    pass


@dataclass(frozen=True)
class HierarchicalModel:
    dims: tuple
    facets: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 2 for d in dims):
            raise InvalidFacet("every dimension must be at least 2")
        facets = tuple(tuple(sorted(int(i) for i in F)) for F in self.facets)
        n = len(dims)
        seen = set()
        for F in facets:
            if not F or any(i < 1 or i > n for i in F) or len(set(F)) != len(F):
                raise InvalidFacet(f"facet {list(F)} is not a nonempty subset of 1..{n}")
            if F in seen:
                raise InvalidFacet(f"facet {list(F)} listed twice")
            seen.add(F)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "facets", facets)

    @property
    def n(self) -> int:
        return len(self.dims)

    def cells(self) -> list[tuple]:
        return list(product(*(range(1, d + 1) for d in self.dims)))

    def cell_index(self, cell: Sequence[int]) -> int:
        if len(cell) != self.n or any(not 1 <= c <= d for c, d in zip(cell, self.dims)):
            raise ValueError(f"cell {tuple(cell)} is outside the table")
        k = 0
        for c, d in zip(cell, self.dims):
            k = k * d + (c - 1)
        return k

    def row_labels(self) -> list[tuple]:
        """``(facet, marginal cell)`` for each row of the model matrix."""
        out = []
        for F in self.facets:
            for m in product(*(range(1, self.dims[i - 1] + 1) for i in F)):
                out.append((F, m))
        return out


def model_matrix(m: HierarchicalModel) -> IntMatrix:
    cells = m.cells()
    rows = []
    for F, marg in m.row_labels():
        rows.append(tuple(int(all(cell[i - 1] == v for i, v in zip(F, marg))) for cell in cells))
    return IntMatrix(tuple(rows))


def table_from_terms(m: HierarchicalModel, terms) -> list:
    """Dense table from ``(coefficient, cell)`` pairs."""
    t = [0] * len(m.cells())
    for coef, cell in terms:
        t[m.cell_index(cell)] += coef
    return t


def marginals(t: Sequence, m: HierarchicalModel) -> tuple:
    """Stacked marginal tables of ``t``; exact for integer or Fraction entries."""
    cells = m.cells()
    if len(t) != len(cells):
        raise ValueError(f"table has {len(t)} entries, model has {len(cells)} cells")
    out = []
    for F, marg in m.row_labels():
        s = 0
        for cell, x in zip(cells, t):
            if all(cell[i - 1] == v for i, v in zip(F, marg)):
                s += x
        out.append(s)
    return tuple(out)


def marginal_table(b: Sequence, m: HierarchicalModel, facet: Sequence[int]) -> list:
    """The block of ``b`` belonging to ``facet``, as a flat list."""
    F = tuple(sorted(facet))
    return [x for (G, _), x in zip(m.row_labels(), b) if G == F]


def _upper_limit(A: IntMatrix, b: Sequence[int], j: int) -> int:
    # every row of a model matrix is 0/1, so any row hitting column j bounds it
    return min(bi for row, bi in zip(A.rows, b) if row[j])


def table_bounds(m: HierarchicalModel, b: Sequence[int], cell: Sequence[int], graver=None) -> tuple:
    """Exact ``(L, U)`` for one cell over all nonnegative integer tables with marginals ``b``.

    By default the fiber is searched with the cell pinned, scanning values
    upward for ``L`` and downward for ``U``.  With a precomputed Graver basis
    a feasible table is instead improved by Graver moves.
    """
    A = model_matrix(m)
    b = tuple(int(x) for x in b)
    f = Fiber(A, b)
    j = m.cell_index(cell)
    start = find_feasible(f)
    if start is None:
        raise InfeasibleMarginals("no nonnegative integer table has these marginals")
    if graver is not None:
        from .hilbert import reduce_bounded

        e = [0] * A.n
        e[j] = 1
        big = [sum(b)] * A.n
        low = reduce_bounded(start, big, graver, e)[j]
        high = reduce_bounded(start, big, graver, [-x for x in e])[j]
        return low, high
    top = _upper_limit(A, b, j)
    high = next(v for v in range(top, -1, -1) if v == start[j] or find_feasible(f, {j: v}) is not None)
    low = next(v for v in range(0, high + 1) if v == start[j] or find_feasible(f, {j: v}) is not None)
    return low, high


def lp_table_bounds(m: HierarchicalModel, b: Sequence, cell: Sequence[int]) -> tuple:
    """Exact ``(L, U)`` for one cell over nonnegative real tables with marginals ``b``."""
    A = model_matrix(m)
    j = m.cell_index(cell)
    obj = [0] * A.n
    obj[j] = 1
    vals = []
    for sense in ("min", "max"):
        res = lp_solve(LPProblem(A.rows, [Fraction(x) for x in b], obj, sense))
        if res.status != OPTIMAL:
            raise InfeasibleMarginals("no nonnegative real table has these marginals")
        vals.append(res.value)
    return vals[0], vals[1]
