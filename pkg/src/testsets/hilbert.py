"""Hilbert bases of ``ker_N(A)`` and Graver bases of ``A``.

Both come out of one project-and-lift completion.  A vector ``x`` is carried
together with its images ``y = R x`` under a basis ``R`` of the row space of
``A``.  For ``y`` ignored, the minimal elements are the unit vectors (Hilbert)
or the signed unit vectors (Graver).  The rows of ``R`` are then switched on
one at a time: all conformal pair sums whose new coordinate has opposite signs
are formed in order of increasing 1-norm of ``x``, irreducible sums are kept,
and finally only vectors whose new coordinate vanishes survive.

The Graver basis is the union over sign orthants of the Hilbert bases of
``A D_sigma``; running the lift with free-sign coordinates computes exactly
that union in one pass, with the ``sigma``/``-sigma`` symmetry used to store one
vector per pair.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .lattice import IntMatrix, IntVector, canonical_sign, hermite_rows, kernel_basis, lll_reduce, neg

log = logging.getLogger(__name__)


def _row_basis(A: IntMatrix) -> list[IntVector]:
    """Short integer basis of the rational row space of ``A``.

    Only the rational row space matters for the kernel, so the basis is taken
    from the saturated lattice (row space meets Z^n) and LLL-reduced; small
    entries keep the lifted coordinate small.
    """
    K = kernel_basis(A)
    rows = kernel_basis(IntMatrix.from_rows(K)) if K else hermite_rows(A.rows)
    return lll_reduce(rows)


# Vectors are packed into one big integer with a 64-bit field per entry of
# (x+, x-, t+, t-), where t is the row currently being lifted.  With a guard
# bit on top of every field, h <= s in all fields iff the guard bits survive
# the subtraction (s | guards) - h.  For nonnegative parts this is exactly
# the conformal order h ⊑ s.
_W = 64


class _Element:
    __slots__ = ("x", "y", "norm", "px", "pxs", "mx", "mxs")

    def __init__(self, x, y, px=None, mx=None, n=None):
        self.x = x
        self.y = y
        self.norm = sum(abs(a) for a in x)
        n = len(x)
        if px is None:
            px = mx = 0
            for i in range(n - 1, -1, -1):
                a = x[i]
                px = (px << _W) | (a if a > 0 else 0)
                if a > 0:
                    mx |= 1 << i
            for i in range(n - 1, -1, -1):
                a = x[i]
                px |= (-a if a < 0 else 0) << ((n + i) * _W)
                if a < 0:
                    mx |= 1 << (n + i)
        self.px = px
        self.mx = mx
        half = n * _W
        self.pxs = (px >> half) | ((px & ((1 << half) - 1)) << half)
        self.mxs = (mx >> n) | ((mx & ((1 << n) - 1)) << n)

    def negated(self):
        e = _Element.__new__(_Element)
        e.x = neg(self.x)
        e.y = neg(self.y)
        e.norm = self.norm
        e.px, e.pxs = self.pxs, self.px
        e.mx, e.mxs = self.mxs, self.mx
        return e


def _unpack(px, n):
    low = (1 << _W) - 1
    vals = [(px >> (i * _W)) & low for i in range(2 * n)]
    return tuple(vals[i] - vals[n + i] for i in range(n))


def _lift(A: IntMatrix, free: bool, R=None) -> list[IntVector]:
    n = A.n
    if R is None:
        R = _row_basis(A)
    elems = []
    for i in range(n):
        x = tuple(1 if j == i else 0 for j in range(n))
        elems.append(_Element(x, tuple(r[i] for r in R)))
    tpos = 2 * n * _W
    tneg = (2 * n + 1) * _W
    bpos = 1 << (2 * n)
    bneg = 1 << (2 * n + 1)
    guard = 0
    for i in range(2 * n + 2):
        guard |= 1 << (i * _W + _W - 1)

    def pack(px, mx, t):
        if t > 0:
            return px | (t << tpos), mx | bpos
        if t < 0:
            return px | (-t << tneg), mx | bneg
        return px, mx

    todo = list(range(len(R)))
    while todo and elems:
        # greedy choice of the next row: fewest opposite-sign pairs, which
        # is a cheap proxy for the work the completion will do
        def pairs(r):
            p = sum(1 for e in elems if e.y[r] > 0)
            q = sum(1 for e in elems if e.y[r] < 0)
            return p * q, max(abs(e.y[r]) for e in elems), r

        k = min(todo, key=pairs)
        todo.remove(k)
        if free:
            # one representative per +/- pair: keep y_k >= 0, and for y_k == 0
            # the canonical sign of x
            elems = [e if e.y[k] > 0 or (e.y[k] == 0 and canonical_sign(e.x) == e.x)
                     else e.negated() for e in elems]
        levels: dict[int, list[_Element]] = {}
        buckets: dict[int, list[int]] = {}
        seen = set()

        # for each sign pattern, the buckets whose pattern lies inside it
        compat: dict[int, list[list[int]]] = {}

        def store(e):
            levels.setdefault(e.norm, []).append(e)
            P, m = pack(e.px, e.mx, e.y[k])
            if m not in buckets:
                buckets[m] = []
                compat.clear()
            buckets[m].append(P)
            seen.add(e.px)
            if free:
                seen.add(e.pxs)

        def reducible(P, m):
            lists = compat.get(m)
            if lists is None:
                keys = sorted((bm for bm in buckets if not bm & ~m), key=lambda bm: bin(bm).count("1"))
                lists = compat[m] = [buckets[bm] for bm in keys]
            SG = P | guard
            for lst in lists:
                for H in lst:
                    if (SG - H) & guard == guard:
                        return True
            return False

        for e in elems:
            store(e)
        N = 2
        added = 0
        while N <= 2 * max(levels):
            fresh = []
            for a in sorted(levels):
                b = N - a
                if b < a or b not in levels:
                    continue
                for fi, f in enumerate(levels[a]):
                    fk = f.y[k]
                    if fk == 0:
                        continue
                    for g in (levels[b][fi + 1:] if b == a else levels[b]):
                        gk = g.y[k]
                        if gk == 0:
                            continue
                        if (gk > 0) != (fk > 0):
                            if f.mx & g.mxs:
                                continue
                            px = f.px + g.px
                            mx = f.mx | g.mx
                            t = fk + gk
                            sign = 1
                        elif free:
                            # -g opposes f on the new coordinate
                            if f.mx & g.mx:
                                continue
                            px = f.px + g.pxs
                            mx = f.mx | g.mxs
                            t = fk - gk
                            sign = -1
                        else:
                            continue
                        if px in seen:
                            continue
                        if reducible(*pack(px, mx, t)):
                            continue
                        if free:
                            half = n * _W
                            pxs = (px >> half) | ((px & ((1 << half) - 1)) << half)
                            mxs = (mx >> n) | ((mx & ((1 << n) - 1)) << n)
                            if reducible(*pack(pxs, mxs, -t)):
                                continue
                        y = tuple(p + sign * q for p, q in zip(f.y, g.y))
                        e = _Element(_unpack(px, n), y, px, mx)
                        fresh.append(e)
                        seen.add(px)
            for e in fresh:
                if free and e.y[k] < 0:
                    e = e.negated()
                store(e)
            added += len(fresh)
            N += 1
        elems = [e for lvl in levels.values() for e in lvl if e.y[k] == 0]
        log.debug("row %d (%d left): %d pair sums kept, %d survive", k + 1, len(todo), added, len(elems))
    return [e.x for e in elems]


@dataclass
class HilbertBasis:
    elements: list

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass
class GraverBasis:
    elements: list

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def symmetric(self) -> list[IntVector]:
        """Both signs of every element."""
        return [v for g in self.elements for v in (g, neg(g))]


def _canonical_order(v: IntVector):
    return (sum(abs(x) for x in v), tuple(-x for x in v))


def hilbert(A: IntMatrix) -> HilbertBasis:
    """Minimal generating set of the semigroup ``{u >= 0 : A u = 0}``."""
    elems = _lift(A, free=False)
    return HilbertBasis(sorted(elems, key=_canonical_order))


def graver(A: IntMatrix) -> GraverBasis:
    """Conformally minimal kernel vectors, one per ``+/-`` pair.

    The representative has its first nonzero coordinate positive.  Runtime is
    exponential in the number of columns in the worst case.
    """
    elems = {canonical_sign(x) for x in _lift(A, free=True)}
    return GraverBasis(sorted(elems, key=_canonical_order))


def graver_by_orthants(A: IntMatrix) -> GraverBasis:
    """Graver basis as the literal union of ``D_sigma H(A D_sigma)``.

    Only ``sigma`` with first entry ``+1`` are visited.  Exponential in the
    number of columns; kept as an independent cross-check for small matrices.
    """
    from itertools import product

    n = A.n
    out = set()
    for tail in product((1, -1), repeat=n - 1):
        sigma = (1,) + tail
        for h in hilbert(A.scale_columns(sigma)).elements:
            g = tuple(s * x for s, x in zip(sigma, h))
            out.add(canonical_sign(g))
    return GraverBasis(sorted(out, key=_canonical_order))


def conformal_decomposition(v: Sequence[int], basis: Sequence[IntVector]) -> list[IntVector] | None:
    """Write ``v`` as a sum of elements of ``basis`` (either sign) each conformal to ``v``.

    Depth-first search; returns the summands or None.  Meant for checks on
    small instances.
    """
    cands = []
    for g in basis:
        for h in (tuple(g), neg(tuple(g))):
            cands.append(h)

    def below(h, w):
        return all((a == 0) or (a > 0 and b >= a) or (a < 0 and b <= a) for a, b in zip(h, w))

    def search(w):
        if not any(w):
            return []
        for h in cands:
            if below(h, w):
                rest = search(tuple(b - a for a, b in zip(h, w)))
                if rest is not None:
                    return [h] + rest
        return None

    return search(tuple(v))


def reduce_bounded(u: Sequence[int], a: Sequence[int], G, c: Sequence[int]) -> IntVector:
    """Improve ``u`` inside the box ``0 <= u <= a`` by Graver moves.

    Any ``g`` (either sign) with ``c.g > 0``, ``g+ <= u`` and ``g- <= a - u`` is
    subtracted until none applies; the result is optimal for ``c`` over the
    bounded fiber.
    """
    u = tuple(u)
    a = tuple(a)
    if any(x < 0 or x > y for x, y in zip(u, a)):
        raise ValueError("start point must satisfy 0 <= u <= a")
    elems = G.elements if hasattr(G, "elements") else list(G)
    moves = []
    for g in elems:
        for h in (tuple(g), neg(tuple(g))):
            if sum(x * y for x, y in zip(c, h)) > 0:
                moves.append(h)
    while True:
        for h in moves:
            if all((x <= ui) if x > 0 else (-x <= ai - ui) for x, ui, ai in zip(h, u, a)):
                u = tuple(ui - x for ui, x in zip(u, h))
                break
        else:
            return u
