import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import COIN, COIN_COST, brute_fiber
from testsets.fibers import (
    Fiber,
    UnboundedFiber,
    count_feasible,
    enumerate_optimal,
    find_feasible,
    iter_fiber,
)
from testsets.groebner import groebner, reduce
from testsets.lattice import IntMatrix, TermOrder, dot

ONES = IntMatrix(((1, 1, 1, 1),))


class TestCoin:
    def test_zero(self):
        assert count_feasible(Fiber(COIN, (0, 0))) == 1
        assert find_feasible(Fiber(COIN, (0, 0))) == (0, 0, 0, 0)

    def test_unique_point(self):
        f = Fiber(COIN, (10, 114))
        assert count_feasible(f) == 1
        assert find_feasible(f) == (4, 2, 0, 4)
        assert enumerate_optimal(f, COIN_COST) == [(4, 2, 0, 4)]

    def test_empty(self):
        assert find_feasible(Fiber(COIN, (1, 3))) is None
        assert count_feasible(Fiber(COIN, (1, 3))) == 0

    def test_pinned_coordinate(self):
        f = Fiber(COIN, (20, 100))
        pinned = list(iter_fiber(f, {3: 2}))
        assert pinned and all(u[3] == 2 for u in pinned)
        assert sorted(pinned) == sorted(u for u in iter_fiber(f) if u[3] == 2)

    def test_contains(self):
        f = Fiber(COIN, (10, 114))
        assert f.contains((4, 2, 0, 4)) and not f.contains((4, 2, 0, 3))

    def test_rhs_length(self):
        with pytest.raises(ValueError):
            Fiber(COIN, (1, 2, 3))

    def test_optimal_value_matches_reduce(self):
        rng = random.Random(11)
        G = groebner(COIN, TermOrder(COIN_COST))
        for _ in range(50):
            u = tuple(rng.randint(0, 8) for _ in range(4))
            opts = enumerate_optimal(Fiber(COIN, COIN * u), COIN_COST)
            assert dot(COIN_COST, opts[0]) == dot(COIN_COST, reduce(u, G))


class TestTriangle:
    def test_b_20(self):
        assert len(enumerate_optimal(Fiber(ONES, (20,)), (0, 0, 0, 1))) == 231

    def test_b_zero(self):
        assert enumerate_optimal(Fiber(ONES, (0,)), (0, 0, 0, 1)) == [(0, 0, 0, 0)]


def test_unbounded_fiber():
    with pytest.raises(UnboundedFiber):
        count_feasible(Fiber(IntMatrix(((1, -1),)), (0,)))


def test_nonnegative_rows_with_zero_columns():
    A = IntMatrix(((1, 0, 2), (0, 1, 1)))
    assert sorted(iter_fiber(Fiber(A, (4, 3)))) == [(0, 1, 2), (2, 2, 1), (4, 3, 0)]


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(
    st.tuples(
        st.lists(st.integers(1, 3), min_size=4, max_size=4),
        st.lists(st.integers(-3, 3), min_size=4, max_size=4),
    ),
    st.lists(st.integers(0, 3), min_size=4, max_size=4),
)
def test_enumeration_matches_brute_force(rows, u0):
    A = IntMatrix(rows)
    b = A * tuple(u0)
    pts = list(iter_fiber(Fiber(A, b)))
    assert len(pts) == len(set(pts)) == count_feasible(Fiber(A, b))
    assert all(A * u == b for u in pts)
    assert set(pts) == set(brute_fiber(A, b, b[0]))
