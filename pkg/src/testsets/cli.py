"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 mathematical failure (unbounded, infeasible, too large).
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .fibers import Fiber, UnboundedFiber, count_feasible, enumerate_optimal, find_feasible
from .gap import gap_table
from .groebner import UnboundedOrder, groebner, groebner_cone, reduce, render_inequality
from .hilbert import graver, hilbert
from .lattice import DimensionError, IntMatrix, TermOrder, dot
from .lp import InfeasibleLP, UnboundedLP
from .staircase import TooManyGenerators, hilbert_numerator, initial_ideal, maximally_optimal, render_polynomial
from .tables import HierarchicalModel, InfeasibleMarginals, InvalidFacet, lp_table_bounds, marginals, model_matrix, table_bounds

EXIT_USAGE, EXIT_PARSE, EXIT_MATH = 1, 2, 3
MATH_ERRORS = (UnboundedOrder, UnboundedFiber, UnboundedLP, InfeasibleLP, InfeasibleMarginals, TooManyGenerators)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _matrix(args) -> IntMatrix:
    return io.read_matrix(args.project, args.modern_header)


def _cost(args, n: int) -> tuple:
    path = args.cost or f"{args.project}.cost"
    if not Path(path).exists():
        raise UsageError(f"no cost vector: {path} does not exist")
    return io.read_cost(path, n)


def _order(args, A: IntMatrix) -> TermOrder:
    return TermOrder(_cost(args, A.n))


def _names(args, n: int) -> list[str]:
    if args.names:
        names = args.names.split(",")
        if len(names) != n:
            raise UsageError(f"{len(names)} names given for {n} variables")
        return names
    return [f"x{i + 1}" for i in range(n)]


def _write(args, suffix: str, rows, n: int) -> None:
    out = f"{args.project}.{suffix}"
    io.write_vectors(out, rows, n, args.modern_header)
    print(f"{out}: {len(rows)} vectors")


def cmd_groebner(args):
    A = _matrix(args)
    G = groebner(A, _order(args, A))
    _write(args, "gro", G.elements, A.n)


def cmd_hilbert(args):
    A = _matrix(args)
    _write(args, "hil", hilbert(A).elements, A.n)


def cmd_graver(args):
    A = _matrix(args)
    _write(args, "gra", graver(A).elements, A.n)


def _standard(args):
    """Matrix, right-hand side and cost from a matrix project or a LattE file."""
    latte = args.latte
    if not latte:
        try:
            io.read_matrix(args.project, args.modern_header)
        except io.FormatError:
            # not a matrix file; a LattE constraint file is the other option
            io.read_latte(args.project).standard_form()
            latte = True
    if latte:
        prob = io.read_latte(args.project)
        A, b = prob.standard_form()
        c = prob.cost
        if getattr(args, "cost", None):
            c = io.read_cost(args.cost, A.n)
    else:
        A = _matrix(args)
        b = None
        c = None
        if getattr(args, "cost", None) or Path(f"{args.project}.cost").exists():
            c = _cost(args, A.n)
    if args.rhs is not None:
        if len(args.rhs) != A.d:
            raise UsageError(f"--rhs needs {A.d} entries")
        b = tuple(args.rhs)
    return A, b, c


def cmd_minimize(args):
    A, b, c = _standard(args)
    if c is None:
        raise UsageError("no cost vector")
    if args.start is not None:
        if len(args.start) != A.n or any(x < 0 for x in args.start):
            raise UsageError(f"--start needs {A.n} nonnegative entries")
        u = tuple(args.start)
    else:
        if b is None:
            raise UsageError("give --start or --rhs")
        u = find_feasible(Fiber(A, b))
        if u is None:
            print("infeasible", file=sys.stderr)
            return EXIT_MATH
    opt = reduce(u, groebner(A, TermOrder(c)))
    print(" ".join(map(str, opt)))
    print(f"value {dot(c, opt)}")


def cmd_cone(args):
    A = _matrix(args)
    G = groebner(A, _order(args, A))
    for g in groebner_cone(G):
        print(render_inequality(g))


def cmd_maxopt(args):
    A = _matrix(args)
    G = groebner(A, _order(args, A))
    pts = maximally_optimal(initial_ideal(G))
    # each row: the point, then a 0/1 flag per coordinate marking incr(u)
    rows = [m.point + tuple(int(i in m.incr) for i in range(A.n)) for m in pts]
    _write(args, "maxopt", rows, 2 * A.n)


def cmd_gap(args):
    A = _matrix(args)
    c = _cost(args, A.n)
    table = gap_table(A, c)
    if args.verbose:
        for m, v in table:
            incr = ",".join(str(i + 1) for i in sorted(m.incr))
            print(f"{' '.join(map(str, m.point))} incr {{{incr}}} -> {fmt(v)}", file=sys.stderr)
    print(fmt(max((v for _, v in table), default=Fraction(0))))


def cmd_count(args):
    A, b, _ = _standard(args)
    if b is None:
        raise UsageError("give --rhs")
    print(count_feasible(Fiber(A, b)))


def cmd_optimal(args):
    A, b, c = _standard(args)
    if b is None or c is None:
        raise UsageError("need a right-hand side and a cost vector")
    for u in enumerate_optimal(Fiber(A, b), c):
        print(" ".join(map(str, u)))


def cmd_series(args):
    A = _matrix(args)
    G = groebner(A, _order(args, A))
    poly = hilbert_numerator(initial_ideal(G), args.limit)
    text = render_polynomial(poly, _names(args, A.n))
    out = f"{args.project}.series"
    Path(out).write_text(text + "\n")
    print(text)


def _model(args) -> HierarchicalModel:
    try:
        facets = [tuple(int(i) for i in f.split(",")) for f in args.facets]
    except ValueError:
        raise UsageError("facets are comma-separated 1-based indices, e.g. 1,2 2,3") from None
    return HierarchicalModel(tuple(args.dims), tuple(facets))


def cmd_model(args):
    M = model_matrix(_model(args))
    io.write_matrix(args.output, M, args.modern_header)
    print(f"{args.output}: {M.d} rows, {M.n} columns")


def cmd_bounds(args):
    m = _model(args)
    ncells = len(m.cells())
    if args.table:
        _, rows = io.read_vectors(args.table)
        t = [x for r in rows for x in r]
        if len(t) != ncells:
            raise io.FormatError(f"{args.table}: {len(t)} entries for {ncells} cells")
        b = marginals(t, m)
    elif args.marginals:
        _, rows = io.read_vectors(args.marginals)
        b = tuple(x for r in rows for x in r)
        if len(b) != model_matrix(m).d:
            raise io.FormatError(f"{args.marginals}: wrong number of marginal entries")
    else:
        raise UsageError("give --table or --marginals")
    if args.cell:
        cells = [tuple(args.cell)]
    else:
        cells = m.cells()
    G = graver(model_matrix(m)) if args.graver else None
    lines = []
    for cell in cells:
        try:
            lo, hi = table_bounds(m, b, cell, G)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        parts = [*map(str, cell), str(lo), str(hi)]
        if args.lp:
            llo, lhi = lp_table_bounds(m, b, cell)
            parts += [fmt(llo), fmt(lhi)]
        lines.append(" ".join(parts))
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="testsets", description="Test sets for integer programming.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress and details on stderr")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def project(name, func, help_, cost=False):
        s = sub.add_parser(name, help=help_)
        s.add_argument("project", help="matrix file P; results go to P.<suffix>")
        s.add_argument("--modern-header", action="store_true", help="header lists rows before columns")
        if cost:
            s.add_argument("--cost", help="cost file (default P.cost)")
        s.set_defaults(func=func)
        return s

    project("groebner", cmd_groebner, "reduced Gröbner basis -> P.gro", cost=True)
    project("hilbert", cmd_hilbert, "Hilbert basis of ker_N(A) -> P.hil")
    project("graver", cmd_graver, "Graver basis -> P.gra")
    project("cone", cmd_cone, "inequalities of the Gröbner cone", cost=True)
    project("maxopt", cmd_maxopt, "maximally optimal points -> P.maxopt", cost=True)
    project("gap", cmd_gap, "integer programming gap", cost=True)
    s = project("series", cmd_series, "Hilbert series numerator -> P.series", cost=True)
    s.add_argument("--names", help="comma-separated variable names")
    s.add_argument("--limit", type=int, default=20, help="largest generator count (default 20)")
    for name, func, help_ in (
        ("minimize", cmd_minimize, "optimal solution for a start point or right-hand side"),
        ("count", cmd_count, "number of points in a fiber"),
        ("optimal", cmd_optimal, "all optimal points of a fiber"),
    ):
        s = project(name, func, help_, cost=True)
        s.add_argument("--latte", action="store_true", help="P is a LattE constraint file")
        s.add_argument("--rhs", type=int, nargs="+", help="right-hand side b")
        if name == "minimize":
            s.add_argument("--start", type=int, nargs="+", help="feasible start point u")

    s = sub.add_parser("model", help="marginal matrix of a hierarchical model")
    s.add_argument("--dims", type=int, nargs="+", required=True)
    s.add_argument("--facets", nargs="+", required=True, help="e.g. 1,2 2,3 3,4 1,4")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--modern-header", action="store_true")
    s.set_defaults(func=cmd_model)

    s = sub.add_parser("bounds", help="table entry security bounds")
    s.add_argument("--dims", type=int, nargs="+", required=True)
    s.add_argument("--facets", nargs="+", required=True)
    s.add_argument("--table", help="table file, cells in lexicographic order")
    s.add_argument("--marginals", help="file with the stacked marginals")
    s.add_argument("--cell", type=int, nargs="+", help="1-based cell; all cells if omitted")
    s.add_argument("--lp", action="store_true", help="also print the LP bounds")
    s.add_argument("--graver", action="store_true", help="use Graver moves instead of fiber search")
    s.add_argument("-o", "--output", help="also write the lines to this file (P.bounds)")
    s.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args) or 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (io.FormatError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidFacet, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MATH_ERRORS as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
