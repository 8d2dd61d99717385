from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import COIN
from testsets.lattice import (
    DimensionError,
    IntMatrix,
    TermOrder,
    canonical_sign,
    compare,
    decompose,
    dot,
    kernel_basis,
    lattice_contains,
    lll_reduce,
    primitive,
    rational_rank,
    render,
)

ints = st.integers(-50, 50)


def spans_same(B1, B2):
    return all(lattice_contains(B1, v) for v in B2) and all(lattice_contains(B2, v) for v in B1)


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        I3 = IntMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert kernel_basis(I3) == []

    def test_coin_kernel_lattice(self):
        K = kernel_basis(COIN)
        assert len(K) == 2
        assert all(COIN * v == (0, 0) for v in K)
        assert spans_same(K, [(0, 3, -4, 1), (-5, 6, 0, -1)])

    def test_one_by_two(self):
        K = kernel_basis(IntMatrix(((1, -1),)))
        assert [canonical_sign(v) for v in K] == [(1, 1)]

    def test_dependent_rows(self):
        A = IntMatrix(((1, 2, 3), (2, 4, 6)))
        K = kernel_basis(A)
        assert len(K) == 2 and all(A * v == (0, 0) for v in K)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.lists(st.integers(-9, 9), min_size=8, max_size=8), min_size=4, max_size=4))
    def test_kernel_sound_and_saturated(self, rows):
        A = IntMatrix(rows)
        K = kernel_basis(A)
        assert len(K) == A.n - A.rank()
        assert all(A * v == (0,) * 4 for v in K)
        # saturation: primitive rescalings and every box kernel vector lie in the lattice
        for v in _primitive_combinations(K):
            assert lattice_contains(K, v)
        for v in product((-1, 0, 1), repeat=8):
            if A * v == (0,) * 4:
                assert lattice_contains(K, v)

    def test_lll_keeps_lattice(self):
        K = kernel_basis(COIN)
        assert spans_same(K, lll_reduce(K))


def _primitive_combinations(K):
    """Small combinations of K divided by their content."""
    out = []
    for coeffs in product((-1, 0, 1, 2), repeat=len(K)):
        if any(coeffs):
            out.append(primitive([sum(c * k[j] for c, k in zip(coeffs, K)) for j in range(len(K[0]))]))
    return out


class TestVectors:
    @given(st.lists(ints, min_size=1, max_size=8))
    def test_decompose_round_trip(self, g):
        plus, minus = decompose(tuple(g))
        assert tuple(p - m for p, m in zip(plus, minus)) == tuple(g)
        assert all(p >= 0 and m >= 0 and p * m == 0 for p, m in zip(plus, minus))

    def test_dot_length_mismatch(self):
        with pytest.raises(DimensionError):
            dot((1, 2), (1, 2, 3))

    def test_primitive(self):
        from fractions import Fraction

        assert primitive([Fraction(1, 2), Fraction(3, 4)]) == (2, 3)
        assert primitive([0, 6, -9]) == (0, 2, -3)

    def test_rational_rank(self):
        assert rational_rank([[1, 2], [2, 4]]) == 1
        assert COIN.rank() == 2

    def test_ragged_matrix_rejected(self):
        with pytest.raises(DimensionError):
            IntMatrix(((1, 2), (3,)))


class TestOrder:
    def test_coin_lead(self):
        order = TermOrder((0, 1, 0, 1))
        assert compare(order, (0, 3, 0, 1), (0, 0, 4, 0)) == 1

    def test_equal(self):
        order = TermOrder((0, 1, 0, 1))
        assert compare(order, (1, 2, 3, 4), (1, 2, 3, 4)) == 0

    def test_ties_never_equal(self):
        order = TermOrder((1, 1, 1))
        assert compare(order, (1, 0, 0), (0, 1, 0)) != 0

    def test_bad_tiebreak(self):
        with pytest.raises(ValueError):
            TermOrder((1, 1), (0, 0))

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            compare(TermOrder((1, 1)), (1, 0, 0), (0, 1))

    @settings(max_examples=1000)
    @given(
        st.lists(st.integers(-3, 3), min_size=4, max_size=4),
        st.lists(st.integers(0, 9), min_size=4, max_size=4),
        st.lists(st.integers(0, 9), min_size=4, max_size=4),
        st.lists(st.integers(0, 9), min_size=4, max_size=4),
        st.permutations(range(4)),
    )
    def test_total_and_additive(self, c, u, v, w, perm):
        order = TermOrder(c, perm)
        r = compare(order, u, v)
        assert (r == 0) == (u == v)
        assert compare(order, v, u) == -r
        uw = [a + b for a, b in zip(u, w)]
        vw = [a + b for a, b in zip(v, w)]
        assert compare(order, uw, vw) == r


class TestRender:
    names = ["p", "n", "d", "q"]

    def test_binomial(self):
        assert render((0, 3, -4, 1), "binomial", self.names) == "n^3*q - d^4"

    def test_doubled(self):
        assert render((0, 3, -4, 1), "doubled", self.names) == "n^3*D^4*q"

    def test_vector(self):
        assert render((0, 3, -4, 1)) == "0 3 -4 1"

    def test_zero_binomial(self):
        assert render((0, 0, 0, 0), "binomial", self.names) == "0"

    def test_name_count(self):
        with pytest.raises(DimensionError):
            render((1, -1), "binomial", ["a"])

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            render((1, -1), "fancy", ["a", "b"])
