"""Test sets for integer programming: Gröbner, Hilbert and Graver bases,
integer programming gaps, fiber enumeration and contingency-table bounds."""

from .fibers import Fiber, UnboundedFiber, count_feasible, enumerate_optimal, find_feasible
from .gap import gap_table, ip_gap
from .groebner import GroebnerBasis, UnboundedOrder, groebner, groebner_cone, in_cone, reduce
from .hilbert import GraverBasis, HilbertBasis, graver, hilbert, reduce_bounded
from .lattice import IntMatrix, TermOrder, compare, decompose, kernel_basis, render
from .lp import LPProblem, LPResult, aux_gap_lp, lp_relaxation, lp_solve
from .staircase import (
    MaxOptimal,
    MonomialIdeal,
    hilbert_numerator,
    initial_ideal,
    irreducible_decomposition,
    is_optimal,
    maximally_optimal,
)
from .tables import HierarchicalModel, lp_table_bounds, marginals, model_matrix, table_bounds

__all__ = [
    "Fiber", "UnboundedFiber", "count_feasible", "enumerate_optimal", "find_feasible",
    "gap_table", "ip_gap",
    "GroebnerBasis", "UnboundedOrder", "groebner", "groebner_cone", "in_cone", "reduce",
    "GraverBasis", "HilbertBasis", "graver", "hilbert", "reduce_bounded",
    "IntMatrix", "TermOrder", "compare", "decompose", "kernel_basis", "render",
    "LPProblem", "LPResult", "aux_gap_lp", "lp_relaxation", "lp_solve",
    "MaxOptimal", "MonomialIdeal", "hilbert_numerator", "initial_ideal",
    "irreducible_decomposition", "is_optimal", "maximally_optimal",
    "HierarchicalModel", "lp_table_bounds", "marginals", "model_matrix", "table_bounds",
]
