"""The integer programming gap of a whole family ``min c.u, A u = b``.

The gap is the largest difference between integer and linear optimum over
all feasible right-hand sides.  It is attained at a maximally optimal point,
so it equals the largest value of the auxiliary program over those points.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .groebner import GroebnerBasis, groebner
from .lattice import IntMatrix, TermOrder
from .lp import aux_gap_lp
from .staircase import initial_ideal, maximally_optimal


def gap_table(A: IntMatrix, c: Sequence[int], G: GroebnerBasis | None = None) -> list:
    """``(MaxOptimal, value)`` for every maximally optimal point."""
    if G is None:
        G = groebner(A, TermOrder(c))
    points = maximally_optimal(initial_ideal(G))
    workers = int(os.environ.get("TESTSETS_THREADS", "1") or 1)
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(aux_gap_lp, [A] * len(points), [c] * len(points), points))
    else:
        values = [aux_gap_lp(A, c, m) for m in points]
    return list(zip(points, values))


def ip_gap(A: IntMatrix, c: Sequence[int], G: GroebnerBasis | None = None) -> Fraction:
    """Exact gap; 0 when every point is optimal (empty basis)."""
    values = [v for _, v in gap_table(A, c, G)]
    return max(values, default=Fraction(0))
