from itertools import product

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import COIN, DATA
from testsets.hilbert import conformal_decomposition, graver, graver_by_orthants, hilbert
from testsets.io import read_matrix
from testsets.lattice import IntMatrix, canonical_sign

# the listed coin vectors, with (-5,6,0,1) read as (-5,6,0,-1)
COIN_GRAVER = {(0, 3, -4, 1), (-5, 6, 0, -1), (-5, 3, 4, -2), (5, 0, -8, 3), (-5, 9, -4, 0)}


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_hilbert(A: IntMatrix, box: int):
    pts = [u for u in product(range(box + 1), repeat=A.n) if any(u) and A * u == (0,) * A.d]
    return {u for u in pts if not any(v != u and leq(v, u) for v in pts)}


class TestHilbert:
    def test_trivial(self):
        assert len(hilbert(IntMatrix(((1, 1),)))) == 0

    def test_diagonal(self):
        assert hilbert(IntMatrix(((1, -1),))).elements == [(1, 1)]

    def test_small_known(self):
        H = hilbert(IntMatrix(((1, 1, -2),)))
        assert set(H) == {(2, 0, 1), (1, 1, 1), (0, 2, 1)}

    def test_elements_sorted_and_minimal(self):
        A = IntMatrix(((1, -2, 3, -4),))
        H = hilbert(A).elements
        assert all(A * h == (0,) for h in H)
        assert not any(g != h and leq(g, h) for g in H for h in H)
        norms = [sum(h) for h in H]
        assert norms == sorted(norms)

    @settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(lambda r: min(r) < 0 < max(r)))
    def test_matches_brute_force(self, row):
        A = IntMatrix((row,))
        H = set(hilbert(A))
        # every Hilbert basis element of a one-row matrix has entries at most max|a_i|
        assert H == brute_hilbert(A, 3)

    def test_gordan_decomposition(self):
        A = COIN.scale_columns((1, -1, 1, -1))
        H = hilbert(A).elements
        assert set(H) == {(0, 3, 4, 1), (5, 9, 4, 0)}
        found = 0
        for u1, u2, u3 in product(range(21), repeat=3):
            u4 = u1 - u2 + u3
            if not 0 <= u4 <= 20 or A * (u1, u2, u3, u4) != (0, 0):
                continue
            v = (u1, u2, u3, u4)
            found += 1
            # greedy subtraction must reach zero inside the semigroup
            while any(v):
                h = next((h for h in H if leq(h, v)), None)
                assert h is not None, v
                v = tuple(a - b for a, b in zip(v, h))
        assert found > 5


class TestGraver:
    def test_coin(self):
        G = graver(COIN)
        assert len(G) == 5
        assert {canonical_sign(g) for g in G} == {canonical_sign(g) for g in COIN_GRAVER}

    def test_listed_typo_is_not_in_kernel(self):
        assert COIN * (-5, 6, 0, 1) != (0, 0)
        assert COIN * (-5, 6, 0, -1) == (0, 0)

    def test_representatives(self):
        for g in graver(COIN):
            assert g == canonical_sign(g)
        assert len(graver(COIN).symmetric()) == 10

    def test_four_cycle(self):
        A = read_matrix(DATA / "fourcycle")
        G = graver(A)
        assert len(G) == 106
        assert all(A * g == (0,) * 16 for g in G)

    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=2))
    def test_lift_matches_orthant_union(self, rows):
        A = IntMatrix(rows)
        assert graver(A).elements == graver_by_orthants(A).elements

    def test_sign_compatible_decomposition(self):
        G = graver(COIN).elements
        count = 0
        for u in product(range(-10, 11), repeat=2):
            # kernel of the coin matrix: fix u1, u2 and solve for u3, u4
            for u3 in range(-10, 11):
                u4 = -(u[0] + u[1] + u3)
                if abs(u4) > 10 or u[0] + 5 * u[1] + 10 * u3 + 25 * u4 != 0:
                    continue
                v = (u[0], u[1], u3, u4)
                if any(v):
                    count += 1
                    parts = conformal_decomposition(v, G)
                    assert parts is not None and tuple(map(sum, zip(*parts))) == v
        assert count > 0

    def test_graver_minimality(self):
        # no element is a conformal sum of two others
        G = graver(COIN).elements
        for g in G:
            rest = [h for h in G if h != g]
            assert conformal_decomposition(g, rest) is None
