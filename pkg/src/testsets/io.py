"""Plain-text matrix files and LattE constraint files.

Matrix files hold whitespace-separated integers.  The header gives the number
of columns first and the number of rows second ("7 3" is three rows of seven
entries); ``modern_header=True`` swaps that to rows first.  Line breaks carry
no meaning, so a header split over two lines is read the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .lattice import IntMatrix


class FormatError(ValueError):
    pass


def _ints(text: str, where: str) -> list[int]:
    try:
        return [int(t) for t in text.split()]
    except ValueError as exc:
        raise FormatError(f"{where}: non-integer token ({exc})") from None


def parse_vectors(text: str, modern_header: bool = False, where: str = "<text>") -> tuple[int, list[tuple]]:
    """``(ncols, rows)`` from the text of a matrix file."""
    toks = _ints(text, where)
    if len(toks) < 2:
        raise FormatError(f"{where}: missing header")
    h1, h2 = toks[0], toks[1]
    ncols, nrows = (h2, h1) if modern_header else (h1, h2)
    body = toks[2:]
    if ncols < 0 or nrows < 0 or len(body) != ncols * nrows:
        raise FormatError(
            f"{where}: header '{h1} {h2}' promises {h1 * h2} entries "
            f"({h2} rows of {h1} by default, {h1} rows of {h2} with --modern-header) "
            f"but the body has {len(body)}"
        )
    rows = [tuple(body[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    return ncols, rows


def read_vectors(path, modern_header: bool = False) -> tuple[int, list[tuple]]:
    return parse_vectors(Path(path).read_text(), modern_header, str(path))


def read_matrix(path, modern_header: bool = False) -> IntMatrix:
    ncols, rows = read_vectors(path, modern_header)
    if not rows or ncols == 0:
        raise FormatError(f"{path}: a matrix needs at least one row and one column")
    return IntMatrix(tuple(rows))


def format_vectors(rows: Sequence[Sequence[int]], ncols: int, modern_header: bool = False) -> str:
    rows = list(rows)
    header = f"{len(rows)} {ncols}" if modern_header else f"{ncols} {len(rows)}"
    lines = [header] + [" ".join(str(int(x)) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def write_vectors(path, rows: Sequence[Sequence[int]], ncols: int, modern_header: bool = False) -> None:
    Path(path).write_text(format_vectors(rows, ncols, modern_header))


def write_matrix(path, M: IntMatrix, modern_header: bool = False) -> None:
    write_vectors(path, M.rows, M.n, modern_header)


def read_cost(path, n: int | None = None) -> tuple:
    """A one-row matrix file such as ``7 1`` followed by seven entries."""
    ncols, rows = read_vectors(path)
    if len(rows) != 1:
        raise FormatError(f"{path}: cost file must hold exactly one row")
    if n is not None and ncols != n:
        raise FormatError(f"{path}: cost has {ncols} entries, matrix has {n} columns")
    return rows[0]


@dataclass
class LatteProblem:
    """Rows ``(b_i, -a_i)`` meaning ``b_i - a_i . u >= 0``, some of them equalities."""

    rows: list
    equalities: frozenset  # 1-based row numbers
    cost: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1

    def standard_form(self) -> tuple[IntMatrix, tuple]:
        """``(A, b)`` when every inequality row is a sign constraint ``u_i >= 0``."""
        n = self.n
        eq = sorted(self.equalities)
        if not eq:
            raise FormatError("no equality rows")
        for k, row in enumerate(self.rows, start=1):
            if k in self.equalities:
                continue
            nz = [j for j, x in enumerate(row[1:]) if x]
            if row[0] != 0 or len(nz) != 1 or row[1 + nz[0]] <= 0:
                raise FormatError(f"row {k} is not a nonnegativity constraint")
        A = IntMatrix(tuple(tuple(-x for x in self.rows[k - 1][1:]) for k in eq))
        b = tuple(self.rows[k - 1][0] for k in eq)
        if A.n != n:
            raise FormatError("inconsistent row lengths")
        return A, b


def parse_latte(text: str, where: str = "<text>") -> LatteProblem:
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln]
    if not lines:
        raise FormatError(f"{where}: empty file")
    head = _ints(lines[0], where)
    if len(head) != 2:
        raise FormatError(f"{where}: header must be 'rows columns'")
    m, width = head
    toks = _ints("\n".join(lines[1:]), where)
    if m < 1 or width < 2 or len(toks) < m * width:
        raise FormatError(f"{where}: expected {m} rows of {width} entries")
    rows = [tuple(toks[i * width:(i + 1) * width]) for i in range(m)]
    # whatever follows the block is read line by line
    rest, count = [], 0
    for ln in lines[1:]:
        vals = _ints(ln, where)
        if count >= m * width:
            rest.append(vals)
        count += len(vals)
    if count - m * width != sum(len(r) for r in rest):
        raise FormatError(f"{where}: constraint block does not end on a line boundary")
    eqs: frozenset = frozenset()
    cost = None
    if rest:
        first = rest[0]
        is_lin = first and first[0] == len(first) - 1
        if is_lin:
            idx = first[1:]
            if any(i < 1 or i > m for i in idx):
                raise FormatError(f"{where}: linearity index out of range 1..{m}")
            eqs = frozenset(idx)
            rest = rest[1:]
        if rest:
            if len(rest) > 1 or len(rest[0]) != width - 1:
                raise FormatError(f"{where}: malformed trailing line {rest[0]}")
            cost = tuple(rest[0])
    return LatteProblem(rows, eqs, cost)


def read_latte(path) -> LatteProblem:
    return parse_latte(Path(path).read_text(), str(path))
