"""Exact integer vectors, matrices, kernels and term orders.

Vectors are plain tuples of Python ints; matrices wrap a tuple of row tuples.
Nothing in here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple  # tuple[int, ...]
RatVector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


def vec(entries: Iterable[int]) -> IntVector:
    return tuple(int(x) for x in entries)


def ratvec(entries: Iterable) -> RatVector:
    return tuple(Fraction(x) for x in entries)


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def add(a: IntVector, b: IntVector) -> IntVector:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: IntVector, b: IntVector) -> IntVector:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def neg(a: IntVector) -> IntVector:
    return tuple(-x for x in a)


def positive_part(g: IntVector) -> IntVector:
    return tuple(x if x > 0 else 0 for x in g)


def negative_part(g: IntVector) -> IntVector:
    return tuple(-x if x < 0 else 0 for x in g)


def decompose(g: IntVector) -> tuple[IntVector, IntVector]:
    """Split ``g`` as ``g = plus - minus`` with disjoint nonnegative parts."""
    return positive_part(g), negative_part(g)


def is_nonnegative(u: Sequence) -> bool:
    return all(x >= 0 for x in u)


def support(u: Sequence) -> frozenset:
    return frozenset(i for i, x in enumerate(u) if x)


def canonical_sign(g: IntVector) -> IntVector:
    """Representative of ``{g, -g}`` whose first nonzero entry is positive."""
    for x in g:
        if x:
            return g if x > 0 else neg(g)
    return g


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.d, self.n

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.n)]

    def __mul__(self, u: Sequence):
        if len(u) != self.n:
            raise DimensionError(f"vector of length {len(u)} for {self.d}x{self.n} matrix")
        return tuple(sum(a * x for a, x in zip(r, u)) for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def scale_columns(self, signs: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(a * s for a, s in zip(r, signs)) for r in self.rows))

    def rank(self) -> int:
        return len(hermite_rows(self.rows))

    def fingerprint(self) -> str:
        import hashlib

        text = ";".join(",".join(map(str, r)) for r in self.rows)
        return hashlib.sha1(f"{self.d}x{self.n}:{text}".encode()).hexdigest()[:16]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def hermite_rows(rows: Iterable[Sequence[int]]) -> list[IntVector]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows in echelon form: pivots strictly increase, each
    pivot is positive and the entries above a pivot lie in ``[0, pivot)``.
    The result depends only on the lattice, so it doubles as a canonical
    lattice basis.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    n = len(work[0])
    out: list[list[int]] = []
    col = 0
    while work and col < n:
        live = [r for r in work if r[col] != 0]
        if not live:
            col += 1
            continue
        rest = [r for r in work if r[col] == 0]
        # Euclid on the column until a single nonzero entry survives
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        p = live[0]
        if p[col] < 0:
            p = [-a for a in p]
        for r in out:
            q = r[col] // p[col]
            if q:
                for k in range(n):
                    r[k] -= q * p[k]
        out.append(p)
        work = rest
        col += 1
    return [tuple(r) for r in out]


def kernel_basis(A: IntMatrix) -> list[IntVector]:
    """Lattice basis of ``ker_Z(A)`` in Hermite normal form.

    Column operations bring ``A`` to echelon form while the same operations are
    recorded on an identity block; the recorded columns that end up opposite
    zero columns span the integer kernel.
    """
    d, n = A.shape
    cols = [list(A.column(j)) + [1 if i == j else 0 for i in range(n)] for j in range(n)]
    piv = 0
    for i in range(d):
        live = [c for c in cols[piv:] if c[i] != 0]
        if not live:
            continue
        dead = [c for c in cols[piv:] if c[i] == 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[i]))
            p = live[0]
            nxt = [p]
            for c in live[1:]:
                q = c[i] // p[i]
                c = [a - q * b for a, b in zip(c, p)]
                (nxt if c[i] != 0 else dead).append(c)
            live = nxt
        cols[piv:] = live + dead
        piv += 1
        if piv == n:
            break
    kernel = [tuple(c[d:]) for c in cols[piv:]]
    return hermite_rows(kernel)


def lll_reduce(vectors: Sequence[IntVector]) -> list[IntVector]:
    """LLL-reduced basis of the lattice spanned by independent ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if len(vectors) < 2:
        return vectors
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    M = DomainMatrix([[ZZ(x) for x in v] for v in vectors], (len(vectors), len(vectors[0])), ZZ)
    return [tuple(int(x) for x in row) for row in M.lll().to_Matrix().tolist()]


def lattice_contains(basis: Sequence[IntVector], v: IntVector) -> bool:
    """Membership of ``v`` in the lattice spanned by ``basis``."""
    h = hermite_rows(basis)
    w = list(v)
    for row in h:
        p = next(k for k, x in enumerate(row) if x)
        if w[p] % row[p]:
            return False
        q = w[p] // row[p]
        w = [a - q * b for a, b in zip(w, row)]
    return not any(w)


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of rows with rational entries."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def primitive(v: Sequence) -> IntVector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


class TermOrder:
    """Cost vector refined by a lexicographic tie-break.

    ``u`` is larger than ``v`` when ``c.u > c.v``, or when the costs tie and
    ``u`` has the larger entry at the first coordinate (in ``tiebreak``
    order) where they differ.  The tie-break makes the order total.  By
    default the last coordinate is the most significant one.
    """

    def __init__(self, cost: Sequence[int], tiebreak: Sequence[int] | None = None):
        self.cost = vec(cost)
        n = len(self.cost)
        if tiebreak is None:
            tiebreak = range(n - 1, -1, -1)
        self.tiebreak = tuple(tiebreak)
        if sorted(self.tiebreak) != list(range(n)):
            raise ValueError(f"tiebreak must be a permutation of 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.cost)

    def key(self, u: Sequence[int]) -> tuple:
        return (dot(self.cost, u),) + tuple(u[i] for i in self.tiebreak)

    def sign(self, v: Sequence[int]) -> int:
        """Sign of ``v+`` versus ``v-`` in this order."""
        s = dot(self.cost, v)
        if s:
            return 1 if s > 0 else -1
        for i in self.tiebreak:
            if v[i]:
                return 1 if v[i] > 0 else -1
        return 0

    def orient(self, v: IntVector) -> IntVector:
        """Return ``v`` or ``-v`` so that the positive part is the larger side."""
        return v if self.sign(v) >= 0 else neg(v)

    def with_cost(self, cost: Sequence[int]) -> "TermOrder":
        return TermOrder(cost, self.tiebreak)

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.cost == other.cost
            and self.tiebreak == other.tiebreak
        )

    def __hash__(self):
        return hash((self.cost, self.tiebreak))

    def __repr__(self):
        return f"TermOrder(cost={list(self.cost)}, tiebreak={list(self.tiebreak)})"


def compare(order: TermOrder, u: Sequence[int], v: Sequence[int]) -> int:
    """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if len(u) != order.n or len(v) != order.n:
        raise DimensionError("vector length does not match the term order")
    return order.sign(sub(tuple(u), tuple(v)))


def _monomial(exponents: Sequence[int], names: Sequence[str], upper: bool = False) -> list[str]:
    parts = []
    for e, name in zip(exponents, names):
        if e:
            name = name.upper() if upper else name
            parts.append(name if e == 1 else f"{name}^{e}")
    return parts


def render(g: Sequence[int], style: str = "vector", names: Sequence[str] | None = None) -> str:
    """Text form of a lattice vector.

    ``vector``: signed integers.  ``binomial``: ``x^g+ - x^g-``.
    ``doubled``: a single monomial in twice the variables, with the ``g+``
    side in lower case and the ``g-`` side in upper case.
    """
    g = vec(g)
    if style == "vector":
        return " ".join(map(str, g))
    if names is None:
        names = [f"x{i + 1}" for i in range(len(g))]
    if len(names) != len(g):
        raise DimensionError(f"{len(names)} names for a vector of length {len(g)}")
    plus, minus = decompose(g)
    if style == "binomial":
        if not any(g):
            return "0"
        left = "*".join(_monomial(plus, names)) or "1"
        right = "*".join(_monomial(minus, names)) or "1"
        return f"{left} - {right}"
    if style == "doubled":
        parts = []
        for i, x in enumerate(g):
            if x > 0:
                parts += _monomial([x], [names[i]])
            elif x < 0:
                parts += _monomial([-x], [names[i]], upper=True)
        return "*".join(parts) or "1"
    raise ValueError(f"unknown render style {style!r}")
