"""Monomial ideals and their staircases.

The initial ideal of a Gröbner basis is generated by the leading sides
``g+``; its standard monomials are exactly the optimal points.  Irreducible
components of the ideal correspond to the maximally optimal points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import IntVector, decompose


class TooManyGenerators(ValueError):
    pass


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Sequence[int]]) -> list[IntVector]:
    """Drop every exponent vector divisible by another one."""
    # sorting by degree puts each potential divisor before its multiples
    cand = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    out: list[IntVector] = []
    for g in cand:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return sorted(out)


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple
    n: int

    def __post_init__(self):
        gens = minimalize(self.generators)
        if any(len(g) != self.n for g in gens):
            raise ValueError("generator length differs from the ambient dimension")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("ambient dimension needed for the zero ideal")
            n = len(gens[0])
        return cls(tuple(gens), n)

    def __len__(self):
        return len(self.generators)

    def contains(self, u: Sequence[int]) -> bool:
        return any(_divides(g, u) for g in self.generators)


@dataclass(frozen=True)
class IrreducibleComponent:
    """``<x_i^a_i : i in S>`` stored as a dict ``{i: a_i}`` (0-based ``i``)."""

    exponents: tuple  # sorted (i, a_i) pairs

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, _ in self.exponents)

    def as_dict(self) -> dict:
        return dict(self.exponents)

    def contains(self, u: Sequence[int]) -> bool:
        return any(u[i] >= a for i, a in self.exponents)

    def render(self, names: Sequence[str]) -> str:
        parts = [names[i] if a == 1 else f"{names[i]}^{a}" for i, a in self.exponents]
        return "<" + ", ".join(parts) + ">"


@dataclass(frozen=True)
class MaxOptimal:
    point: tuple
    incr: frozenset  # 0-based coordinates that may grow freely


def initial_ideal(G) -> MonomialIdeal:
    """Ideal generated by the leading sides ``g+`` of a Gröbner basis."""
    elems = list(G.elements) if hasattr(G, "elements") else [tuple(g) for g in G]
    if not elems:
        n = G.order.n if hasattr(G, "order") else None
        if n is None:
            raise ValueError("cannot infer the dimension of an empty basis")
        return MonomialIdeal((), n)
    return MonomialIdeal.of((decompose(g)[0] for g in elems), len(elems[0]))


def is_optimal(u: Sequence[int], M: MonomialIdeal) -> bool:
    """True when no generator divides ``u``, i.e. ``u`` is a standard monomial."""
    if any(x < 0 for x in u):
        raise ValueError("points must be nonnegative")
    return not M.contains(u)


def irreducible_decomposition(M: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible decomposition, built one generator at a time.

    A component is kept as a vector ``a`` with ``a_i = 0`` meaning that
    ``x_i`` does not occur.  Adding a generator ``m`` keeps every component
    already containing ``m`` and splits every other one into ``|supp m|``
    refinements.
    """
    n = M.n
    gens = list(M.generators)
    if not gens or any(not any(g) for g in gens):
        # the whole ring is the empty intersection; the zero ideal is
        # reported without components as well (see maximally_optimal)
        return []
    comps: set = {tuple(0 for _ in range(n))}
    for m in gens:
        kept, children = set(), set()
        for a in comps:
            if any(a[i] and m[i] >= a[i] for i in range(n)):
                kept.add(a)
                continue
            for i in range(n):
                if m[i] and (a[i] == 0 or m[i] < a[i]):
                    b = list(a)
                    b[i] = m[i]
                    children.add(tuple(b))
        # a child contains its parent, so old components never become
        # redundant; only the children need checking
        pool = kept | children
        comps = kept | {b for b in children if not any(d != b and _inside(d, b) for d in pool)}
    out = [IrreducibleComponent(tuple((i, x) for i, x in enumerate(a) if x)) for a in comps]
    return sorted(out, key=lambda c: _dense(c, n))


def _inside(d, c) -> bool:
    """Is the component with exponent vector ``d`` contained in the one of ``c``?"""
    return all(x == 0 or (y and y <= x) for x, y in zip(d, c))


def _dense(c: IrreducibleComponent, n: int) -> tuple:
    a = [0] * n
    for i, x in c.exponents:
        a[i] = x
    return tuple(a)


def maximally_optimal(M: MonomialIdeal) -> list[MaxOptimal]:
    """One maximally optimal point per irreducible component.

    The component ``<x_i^a_i : i in S>`` gives the point with ``u_i = a_i - 1``
    on ``S`` and 0 elsewhere; the coordinates outside ``S`` are its increase
    set.  The zero ideal has no components and yields an empty list.
    Two components may share a point (``<yz>`` gives the origin twice); each
    keeps its own increase set.
    """
    out = []
    for comp in irreducible_decomposition(M):
        u = [0] * M.n
        for i, a in comp.exponents:
            u[i] = a - 1
        incr = frozenset(range(M.n)) - comp.support
        out.append(MaxOptimal(tuple(u), incr))
    return sorted(out, key=lambda m: m.point)


def hilbert_numerator(M: MonomialIdeal, limit: int = 20) -> dict:
    """Numerator ``K`` of the multigraded Hilbert series of the standard monomials.

    Returned as ``{exponent: coefficient}`` with zero terms removed, from
    ``K = sum over subsets T of (-1)^|T| x^lcm(T)``.
    """
    gens = list(M.generators)
    if len(gens) > limit:
        raise TooManyGenerators(f"{len(gens)} generators exceed the limit of {limit}")
    terms: dict = {}

    def walk(start, lcm, sign):
        terms[lcm] = terms.get(lcm, 0) + sign
        for k in range(start, len(gens)):
            walk(k + 1, tuple(max(a, b) for a, b in zip(lcm, gens[k])), -sign)

    walk(0, (0,) * M.n, 1)
    return {e: c for e, c in terms.items() if c}


def render_polynomial(poly: dict, names: Sequence[str]) -> str:
    """Text such as ``n^3*q - d^4 + 1``; terms by descending degree."""
    if not poly:
        return "0"
    items = sorted(poly.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
    out = []
    for k, (e, c) in enumerate(items):
        mono = "*".join(names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def series_coefficients(poly: dict, n: int, max_degree: int) -> dict:
    """Coefficients of ``K(x) / prod(1 - x_i)`` up to total degree ``max_degree``."""
    from itertools import product

    coeffs: dict = {}
    for u in product(range(max_degree + 1), repeat=n):
        if sum(u) > max_degree:
            continue
        coeffs[u] = sum(c for e, c in poly.items() if _divides(e, u))
    return coeffs
