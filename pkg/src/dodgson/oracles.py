"""Reference determinants and the Jacobi complementary-minor identity.

Nothing here touches the condensation code paths; these routines are the
referees the rest of the package is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import (ContractViolation, Matrix, delete_row_col, delete_rows_cols,
                     exact_div)

LAPLACE_MAX_ORDER = 10


def laplace_det(a: Matrix) -> int:
    """First-row cofactor expansion.  Factorial cost; keep ``a`` small."""
    return _laplace(a.rows) if a.is_square else _not_square(a)


def _laplace(rows: tuple[tuple[int, ...], ...]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[1][0] * rows[0][1]
    total = 0
    rest = rows[1:]
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = tuple(r[:j] + r[j + 1:] for r in rest)
        term = x * _laplace(minor)
        total = total - term if j % 2 else total + term
    return total


def _not_square(a: Matrix):
    raise ContractViolation(f"determinant of a non-square {a.shape} matrix")


def bareiss_det(a: Matrix, ops=None) -> int:
    """Fraction-free Gaussian elimination with first-nonzero row pivoting.

    ``ops``, if given, is an :class:`~dodgson.condense.OpCounter` that is
    charged for every multiplication, subtraction and exact division.
    """
    if not a.is_square:
        _not_square(a)
    m = a.tolist()
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for p in range(k + 1, n):
                if m[p][k] != 0:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - lead * row_k[j]
                row_i[j] = num if k == 0 else exact_div(num, prev)
            if ops is not None:
                width = n - k - 1
                ops.multiplications += 2 * width
                ops.subtractions += width
                if k:
                    ops.divisions += width
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def cofactor_matrix(a: Matrix) -> Matrix:
    n = a.order
    if n < 2:
        raise ContractViolation("cofactor matrix needs order >= 2")
    return Matrix([[(-1) ** (i + j) * laplace_det(delete_row_col(a, i, j))
                    for j in range(1, n + 1)]
                   for i in range(1, n + 1)])


@dataclass(frozen=True)
class RowColSelection:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ContractViolation("selection needs equally many rows and columns")
        for idx in (self.rows, self.cols):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ContractViolation(f"indices {idx} not strictly increasing")

    @property
    def size(self) -> int:
        return len(self.rows)

    def validate(self, order: int) -> None:
        if self.size >= order:
            raise ContractViolation(f"selection of size {self.size} on order {order}")
        if min(self.rows + self.cols) < 1 or max(self.rows + self.cols) > order:
            raise ContractViolation("selection index out of range")


@dataclass(frozen=True)
class JacobiSides:
    """Both sides of det M' = det(A)^(m-1) * det M* * (-1)^(sum of indices)."""

    size: int
    det_cofactor_minor: int
    det_complement: int
    det_a: int
    index_sum: int

    @property
    def rhs(self) -> int:
        return self.det_a ** (self.size - 1) * self.det_complement * (-1) ** self.index_sum

    @property
    def holds(self) -> bool:
        return self.det_cofactor_minor == self.rhs


def jacobi_sides(a: Matrix, sel: RowColSelection | tuple[Sequence[int], Sequence[int]]) -> JacobiSides:
    if not isinstance(sel, RowColSelection):
        sel = RowColSelection(*sel)
    sel.validate(a.order)
    cof = cofactor_matrix(a)
    m_prime = Matrix([[cof[i, j] for j in sel.cols] for i in sel.rows])
    m_star = delete_rows_cols(a, sel.rows, sel.cols)
    return JacobiSides(
        size=sel.size,
        det_cofactor_minor=laplace_det(m_prime),
        det_complement=laplace_det(m_star),
        det_a=laplace_det(a),
        index_sum=sum(sel.rows) + sum(sel.cols),
    )


def jacobi_check(a: Matrix, sel) -> bool:
    return jacobi_sides(a, sel).holds
