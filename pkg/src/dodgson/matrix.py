"""Immutable square integer matrices with 1-based, contiguous-block addressing.

Positions are 1-based everywhere in the public API: ``m[1, 1]`` is the upper
left entry.  A :class:`Span` names the block of rows ``row_start..row_end`` and
columns ``col_start..col_end`` (both inclusive).
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence


class ContractViolation(ValueError):
    """An operation was called outside its stated domain."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder; never expected on valid input."""


def exact_div(num: int, den: int) -> int:
    """Divide ``num`` by ``den``, refusing to round."""
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class Span:
    row_start: int
    row_end: int
    col_start: int
    col_end: int

    @classmethod
    def square(cls, row: int, col: int, size: int) -> "Span":
        """The ``size`` x ``size`` block whose upper-left corner is (row, col)."""
        return cls(row, row + size - 1, col, col + size - 1)

    @property
    def height(self) -> int:
        return self.row_end - self.row_start + 1

    @property
    def width(self) -> int:
        return self.col_end - self.col_start + 1

    def within(self, order: int) -> bool:
        return (1 <= self.row_start <= self.row_end <= order
                and 1 <= self.col_start <= self.col_end <= order)

    def compose(self, inner: "Span") -> "Span":
        """Translate ``inner`` (relative to this block) into parent coordinates."""
        r0, c0 = self.row_start - 1, self.col_start - 1
        return Span(inner.row_start + r0, inner.row_end + r0,
                    inner.col_start + c0, inner.col_end + c0)


class Matrix:
    """Dense matrix of Python ints.  Square unless built by :func:`submatrix`
    with a rectangular span; every determinant routine insists on squareness.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ContractViolation("matrix must have at least one entry")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ContractViolation("ragged rows")
        self._rows = data
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def is_square(self) -> bool:
        h, w = self.shape
        return h == w

    @property
    def order(self) -> int:
        h, w = self.shape
        if h != w:
            raise ContractViolation(f"{h}x{w} matrix has no order")
        return h

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        h, w = self.shape
        if not (1 <= i <= h and 1 <= j <= w):
            raise ContractViolation(f"position {pos} outside {h}x{w} matrix")
        return self._rows[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def swap_rows(self, a: int, b: int) -> "Matrix":
        rows = list(self._rows)
        rows[a - 1], rows[b - 1] = rows[b - 1], rows[a - 1]
        return Matrix(rows)

    def with_entry(self, i: int, j: int, value: int) -> "Matrix":
        rows = self.tolist()
        rows[i - 1][j - 1] = value
        return Matrix(rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()!r})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)


def _as_int(x) -> int:
    # bool is an Integral subclass but a matrix of flags is almost surely a bug
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise ContractViolation(f"matrix entries must be integers, got {x!r}")
    return int(x)


def as_matrix(a: Matrix | Sequence[Sequence[int]]) -> Matrix:
    return a if isinstance(a, Matrix) else Matrix(a)


def det2x2(m: Matrix) -> int:
    if m.shape != (2, 2):
        raise ContractViolation(f"det2x2 needs a 2x2 matrix, got {m.shape}")
    (a, b), (c, d) = m.rows
    return a * d - c * b


def submatrix(m: Matrix, s: Span) -> Matrix:
    """Contiguous block of ``m`` named by ``s``."""
    h, w = m.shape
    if not (1 <= s.row_start <= s.row_end <= h and 1 <= s.col_start <= s.col_end <= w):
        raise ContractViolation(f"{s} is outside the {h}x{w} matrix")
    return Matrix(row[s.col_start - 1:s.col_end]
                  for row in m.rows[s.row_start - 1:s.row_end])


def delete_row_col(m: Matrix, r: int, c: int) -> Matrix:
    n = m.order
    if n < 2:
        raise ContractViolation("cannot delete a row and column of a 1x1 matrix")
    if not (1 <= r <= n and 1 <= c <= n):
        raise ContractViolation(f"({r}, {c}) outside order-{n} matrix")
    return Matrix(row[:c - 1] + row[c:]
                  for k, row in enumerate(m.rows, 1) if k != r)


def delete_rows_cols(m: Matrix, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
    """Keep everything except the listed rows and columns."""
    drop_r, drop_c = set(rows), set(cols)
    return Matrix([x for j, x in enumerate(row, 1) if j not in drop_c]
                  for i, row in enumerate(m.rows, 1) if i not in drop_r)


def interior(m: Matrix) -> Matrix:
    """The central (n-2) x (n-2) block: entry (i, j) is ``m[i+1, j+1]``."""
    n = m.order
    if n < 3:
        raise ContractViolation(f"interior needs order >= 3, got {n}")
    return submatrix(m, Span(2, n - 1, 2, n - 1))
