"""Reduced Gröbner bases of lattice ideals as sets of kernel vectors.

The basis is computed by a critical-pair completion that works directly on
lattice vectors: the S-vector of two elements is their difference, and a
vector is top-reduced by subtracting any element whose positive part divides
its own.  Common factors cancel automatically in vector form.

Completion from a lattice basis only yields a Gröbner basis of the ideal
generated by that basis, which can be strictly smaller than the lattice
ideal.  The missing saturation is supplied in one of two ways:

* If the fibers are bounded there is a strictly positive grading in the row
  space of ``A``.  Completing with respect to a graded reverse lexicographic
  order in which ``x_i`` is cheapest saturates with respect to ``x_i``; one such
  pass per variable gives the lattice ideal.
* Otherwise one extra variable ``t`` and the vector ``(1, ..., 1, 1)`` are
  added.  That ideal is already saturated, and eliminating ``t`` recovers the
  lattice ideal.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .lattice import (
    IntMatrix,
    IntVector,
    TermOrder,
    decompose,
    dot,
    kernel_basis,
    lll_reduce,
    neg,
    primitive,
)
from .lp import FREE, NONNEG, OPTIMAL, LPProblem, lp_solve

log = logging.getLogger(__name__)


class UnboundedOrder(ArithmeticError):
    """The cost vector is not positive on the nonnegative kernel directions."""


def _mask(u: Sequence[int]) -> int:
    m = 0
    for i, x in enumerate(u):
        if x:
            m |= 1 << i
    return m


class _Order:
    """Weight vectors compared in turn, then a lex or revlex tie-break."""

    def __init__(self, weights, perm, revlex=False):
        self.weights = [tuple(w) for w in weights]
        self.perm = tuple(perm)
        self.revlex = revlex
        self._scan = tuple(reversed(self.perm)) if revlex else self.perm

    def sign(self, v):
        for w in self.weights:
            s = 0
            for a, x in zip(w, v):
                if x:
                    s += a * x
            if s:
                return 1 if s > 0 else -1
        for i in self._scan:
            x = v[i]
            if x:
                s = 1 if x > 0 else -1
                return -s if self.revlex else s
        return 0

    def degree(self, u):
        return tuple(dot(w, u) for w in self.weights)


class _LeadIndex:
    """Positive parts bucketed by support, for divisor lookups."""

    def __init__(self):
        self.buckets: dict[int, list[int]] = {}
        self.leads: list[IntVector] = []

    def add(self, idx: int, lead: IntVector):
        while len(self.leads) <= idx:
            self.leads.append(())
        self.leads[idx] = lead
        self.buckets.setdefault(_mask(lead), []).append(idx)

    def find(self, u: IntVector, umask: int | None = None):
        if umask is None:
            umask = _mask(u)
        leads = self.leads
        for m, bucket in self.buckets.items():
            if m & ~umask:
                continue
            for idx in bucket:
                if all(a <= b for a, b in zip(leads[idx], u)):
                    return idx
        return None

    def find_all(self, u: IntVector):
        umask = _mask(u)
        leads = self.leads
        out = []
        for m, bucket in self.buckets.items():
            if m & ~umask:
                continue
            out.extend(i for i in bucket if all(a <= b for a, b in zip(leads[i], u)))
        return out


class _Completion:
    def __init__(self, order: _Order):
        self.order = order
        self.elems: list[IntVector] = []
        self.leads: list[IntVector] = []
        self.masks: list[int] = []
        self.index = _LeadIndex()
        self.heap: list = []
        self.pending: set = set()
        self.spairs = 0

    def _orient(self, v):
        return v if self.order.sign(v) >= 0 else neg(v)

    def top_reduce(self, v):
        v = self._orient(v)
        while True:
            if not any(v):
                return None
            lead = tuple(x if x > 0 else 0 for x in v)
            k = self.index.find(lead)
            if k is None:
                return v
            g = self.elems[k]
            v = self._orient(tuple(a - b for a, b in zip(v, g)))

    def add(self, v):
        v = self.top_reduce(v)
        if v is None:
            return
        t = len(self.elems)
        lead = tuple(x if x > 0 else 0 for x in v)
        m = _mask(lead)
        self.elems.append(v)
        self.leads.append(lead)
        self.masks.append(m)
        for i in range(t):
            if self.masks[i] & m == 0:
                continue  # coprime leading terms
            lcm = tuple(a if a > b else b for a, b in zip(self.leads[i], lead))
            heapq.heappush(self.heap, (self.order.degree(lcm), i, t, lcm))
            self.pending.add((i, t))
        self.index.add(t, lead)

    def _chain(self, i, j, lcm):
        pend = self.pending
        for k in self.index.find_all(lcm):
            if k == i or k == j:
                continue
            if (min(i, k), max(i, k)) not in pend and (min(j, k), max(j, k)) not in pend:
                return True
        return False

    def run(self, gens: Iterable[IntVector]):
        for g in gens:
            self.add(tuple(g))
        while self.heap:
            _, i, j, lcm = heapq.heappop(self.heap)
            self.pending.discard((i, j))
            if self._chain(i, j, lcm):
                continue
            self.spairs += 1
            self.add(tuple(a - b for a, b in zip(self.elems[i], self.elems[j])))
        return self

    def minimal(self) -> list[IntVector]:
        """Elements whose leading exponent is minimal (one per lead)."""
        order = sorted(range(len(self.elems)), key=lambda k: sum(self.leads[k]))
        keep: list[int] = []
        idx = _LeadIndex()
        for k in order:
            if idx.find(self.leads[k]) is None:
                idx.add(len(keep), self.leads[k])
                keep.append(k)
        return [self.elems[k] for k in keep]


def _normal_form(u: IntVector, elems: Sequence[IntVector], index: _LeadIndex) -> IntVector:
    while True:
        k = index.find(u)
        if k is None:
            return u
        u = tuple(a - b for a, b in zip(u, elems[k]))


def _positive_shift(A: IntMatrix, c: Sequence[int]):
    """Largest ``t <= 1`` with ``c - yA >= t`` for some ``y``; returns ``(t, c - yA)``."""
    d, n = A.shape
    # unknowns: y (d, free), t (free), s (n, nonneg), r (nonneg)
    nv = d + 1 + n + 1
    rows, rhs = [], []
    for j in range(n):
        row = [0] * nv
        for i in range(d):
            row[i] = A.rows[i][j]
        row[d] = 1
        row[d + 1 + j] = 1
        rows.append(row)
        rhs.append(c[j])
    row = [0] * nv
    row[d] = 1
    row[-1] = 1
    rows.append(row)
    rhs.append(1)
    obj = [0] * nv
    obj[d] = 1
    status = [FREE] * (d + 1) + [NONNEG] * (n + 1)
    res = lp_solve(LPProblem(rows, rhs, obj, "max", status))
    assert res.status == OPTIMAL, res.status
    y = res.point[:d]
    shifted = tuple(Fraction(c[j]) - sum(y[i] * A.rows[i][j] for i in range(d)) for j in range(n))
    return res.value, shifted


def positive_grading(A: IntMatrix):
    """A strictly positive integer vector in the row space of ``A``, or None."""
    t, w = _positive_shift(A, [0] * A.n)
    return primitive(w) if t > 0 else None


def normalized_cost(A: IntMatrix, c: Sequence[int]) -> IntVector:
    """Strictly positive cost ordering every fiber exactly like ``c``.

    Raises ``UnboundedOrder`` when some ``v >= 0, v != 0`` in the kernel has
    ``c.v <= 0``.
    """
    t, w = _positive_shift(A, c)
    if t <= 0:
        raise UnboundedOrder(f"cost {list(c)} is not positive on the nonnegative kernel of A")
    den = 1
    for x in w:
        den = den * x.denominator // gcd(den, x.denominator)
    return tuple(int(x * den) for x in w)


@dataclass
class GroebnerBasis:
    elements: list
    order: TermOrder
    matrix_hash: str = ""
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading(self) -> list[IntVector]:
        return [decompose(g)[0] for g in self.elements]


def _canonical(elements: Iterable[IntVector], order: TermOrder) -> list[IntVector]:
    return sorted(elements, key=lambda g: order.key(decompose(g)[0]))


def groebner(A: IntMatrix, order: TermOrder) -> GroebnerBasis:
    """Reduced Gröbner basis ``G_{A,c}`` oriented so that ``c.g > 0`` (tie-broken)."""
    if order.n != A.n:
        raise ValueError(f"order has {order.n} variables, matrix has {A.n} columns")
    n = A.n
    basis = kernel_basis(A)
    if not basis:
        return GroebnerBasis([], order, A.fingerprint())
    cost = normalized_cost(A, order.cost)
    seeds = lll_reduce(basis)
    grading = positive_grading(A)
    stats = {"seeds": len(seeds)}
    if grading is not None:
        gens = seeds
        for i in range(n):
            perm = [k for k in range(n) if k != i] + [i]
            comp = _Completion(_Order([grading], perm, revlex=True)).run(gens)
            gens = comp.minimal()
            log.debug("saturated x%d: %d generators, %d s-pairs", i + 1, len(gens), comp.spairs)
        final = _Completion(_Order([cost], order.tiebreak)).run(gens)
        elems = final.minimal()
        stats["route"] = "saturation"
    else:
        ext = [tuple(v) + (0,) for v in seeds] + [(1,) * (n + 1)]
        t_weight = (0,) * n + (1,)
        comp = _Completion(_Order([t_weight, tuple(cost) + (0,)], tuple(order.tiebreak) + (n,)))
        comp.run(ext)
        elems = [g[:n] for g in comp.minimal() if g[n] == 0]
        stats["route"] = "elimination"
    # reduced basis: minimal leads paired with the normal form of each lead
    target = _Order([cost], order.tiebreak)
    oriented = [g if target.sign(g) > 0 else neg(g) for g in elems]
    leads = [decompose(g)[0] for g in oriented]
    index = _LeadIndex()
    keep = []
    for k in sorted(range(len(oriented)), key=lambda k: order.key(leads[k])):
        if index.find(leads[k]) is None:
            index.add(len(keep), leads[k])
            keep.append(oriented[k])
    reduced = []
    for g in keep:
        plus, minus = decompose(g)
        tail = _normal_form(minus, keep, index)
        reduced.append(tuple(a - b for a, b in zip(plus, tail)))
    stats["size"] = len(reduced)
    return GroebnerBasis(_canonical(reduced, order), order, A.fingerprint(), stats)


def reduce(u: Sequence[int], G: GroebnerBasis | Sequence[IntVector]) -> IntVector:
    """Repeatedly subtract the first ``g`` in ``G`` with ``g+ <= u``."""
    elems = G.elements if isinstance(G, GroebnerBasis) else list(G)
    u = tuple(u)
    if any(x < 0 for x in u):
        raise ValueError("reduce needs a nonnegative starting point")
    return _normal_form(u, elems, _FirstIndex(elems))


class _FirstIndex(_LeadIndex):
    """Divisor lookup that always returns the earliest applicable element."""

    def __init__(self, elems):
        super().__init__()
        for k, g in enumerate(elems):
            self.add(k, decompose(g)[0])

    def find(self, u, umask=None):
        if umask is None:
            umask = _mask(u)
        leads = self.leads
        best = None
        for m, bucket in self.buckets.items():
            if m & ~umask:
                continue
            for idx in bucket:
                if best is not None and idx > best:
                    break
                if all(a <= b for a, b in zip(leads[idx], u)):
                    best = idx
                    break
        return best


def groebner_cone(G: GroebnerBasis) -> list[IntVector]:
    """Inner normals ``g`` of the open cone ``{c' : c'.g > 0 for all g}``."""
    return [tuple(g) for g in G.elements]


def in_cone(normals: Sequence[IntVector], c: Sequence[int]) -> bool:
    return all(dot(g, c) > 0 for g in normals)


def render_inequality(g: Sequence[int], name: str = "c") -> str:
    """``3 c2 + c4 > 3 c3`` style text for the half-space ``c.g > 0``."""

    pos = [(i, x) for i, x in enumerate(g) if x > 0]
    negs = [(i, -x) for i, x in enumerate(g) if x < 0]
    fmt = lambda a, i: (f"{a} " if a != 1 else "") + f"{name}{i + 1}"  # noqa: E731
    left = " + ".join(fmt(a, i) for i, a in pos) or "0"
    right = " + ".join(fmt(a, i) for i, a in negs) or "0"
    return f"{left} > {right}"
