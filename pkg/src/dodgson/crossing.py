"""Double-crossing repair of a zero divisor.

Suppose A^(k) has a zero at interior position (i, j).  It should divide the
entry at (i-1, j-1) of A^(k-2), which is the determinant of the order-(l+3)
block of the base matrix with upper-left corner (i-1, j-1), where l = n - k.
Inside that block the zero is the determinant of the central order-(l+1)
sub-block.  Any nonzero neighbour A^(k)(i+r, j+s) is the determinant of the
same-size sub-block shifted by (r, s), so Jacobi's identity with that
sub-block as the complement gives

    det(block) = (m11*m22 - m12*m21) / alpha

where the m's are the minors obtained by deleting one of the two rows and one
of the two columns left outside the shifted sub-block.  The cofactor signs
contribute (-1)^(sum of those indices) to both products, and the same factor
appears on the complement side of the identity, so they cancel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .condense import (CondensationStack, FailureSite, PivotSelected,
                       RepairApplied)
from .matrix import (ContractViolation, Matrix, Span, delete_row_col,
                     exact_div, submatrix)

DetFn = Callable[[Matrix], int]

# Above first, matching the special case used in the worked examples.
PIVOT_PREFERENCE = ((-1, 0), (0, -1), (0, 1), (1, 0),
                    (-1, -1), (-1, 1), (1, -1), (1, 1))


@dataclass(frozen=True)
class PivotChoice:
    r: int
    s: int
    alpha: int

    def __post_init__(self):
        if self.r not in (-1, 0, 1) or self.s not in (-1, 0, 1):
            raise ContractViolation(f"pivot offset ({self.r}, {self.s}) not adjacent")
        if self.alpha == 0:
            raise ContractViolation("pivot must be nonzero")


@dataclass(frozen=True)
class CrossingPlan:
    ell: int
    script_a: Span          # in base-matrix coordinates
    crossed_block: Span     # in script_a coordinates
    kept_rows: tuple[int, int]
    kept_cols: tuple[int, int]
    pivot: PivotChoice

    @property
    def size(self) -> int:
        return self.ell + 3

    @property
    def crossed_in_base(self) -> Span:
        return self.script_a.compose(self.crossed_block)


@dataclass(frozen=True)
class MinorQuad:
    m11: int
    m12: int
    m21: int
    m22: int

    def as_matrix(self) -> Matrix:
        return Matrix([[self.m11, self.m12], [self.m21, self.m22]])

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21


def find_pivot(level: Matrix, i: int, j: int) -> Optional[PivotChoice]:
    """First nonzero neighbour of the interior position (i, j), or None."""
    k = level.order
    if not (2 <= i <= k - 1 and 2 <= j <= k - 1):
        raise ContractViolation(f"({i}, {j}) is not interior to an order-{k} matrix")
    for r, s in PIVOT_PREFERENCE:
        alpha = level[i + r, j + s]
        if alpha != 0:
            return PivotChoice(r, s, alpha)
    return None


def _outside(start: int, size: int, total: int) -> tuple[int, int]:
    kept = tuple(x for x in range(1, total + 1) if not start <= x < start + size)
    assert len(kept) == 2
    return kept


def build_plan(n: int, k: int, i: int, j: int, pivot: PivotChoice) -> CrossingPlan:
    ell = n - k
    size = ell + 3
    script_a = Span.square(i - 1, j - 1, size)
    if not script_a.within(n):
        raise ContractViolation(f"{script_a} does not fit an order-{n} matrix")
    crossed = Span.square(pivot.r + 2, pivot.s + 2, ell + 1)
    return CrossingPlan(
        ell=ell,
        script_a=script_a,
        crossed_block=crossed,
        kept_rows=_outside(crossed.row_start, ell + 1, size),
        kept_cols=_outside(crossed.col_start, ell + 1, size),
        pivot=pivot,
    )


def minor_quad(base: Matrix, plan: CrossingPlan, det_fn: DetFn) -> MinorQuad:
    block = submatrix(base, plan.script_a)
    (r1, r2), (c1, c2) = plan.kept_rows, plan.kept_cols
    return MinorQuad(
        det_fn(delete_row_col(block, r1, c1)),
        det_fn(delete_row_col(block, r1, c2)),
        det_fn(delete_row_col(block, r2, c1)),
        det_fn(delete_row_col(block, r2, c2)),
    )


def repaired_entry(quad: MinorQuad, pivot: PivotChoice, ops=None) -> int:
    if ops is not None:
        ops.multiplications += 2
        ops.subtractions += 1
        ops.divisions += 1
    return exact_div(quad.det, pivot.alpha)


def apply_repair(stack: CondensationStack, site: FailureSite, det_fn: DetFn,
                 ops=None, trace: Optional[list] = None) -> Optional[int]:
    """Value of the entry blocked by ``site``, or None if no neighbour helps.

    ``det_fn`` evaluates the four order-(l+2) minors; it must itself be total
    (the driver hands in the hybrid strategy).
    """
    pivot = find_pivot(stack.level(site.level), site.row, site.col)
    if pivot is None:
        return None
    if trace is not None:
        trace.append(PivotSelected(site, pivot.r, pivot.s, pivot.alpha))
    plan = build_plan(stack.n, site.level, site.row, site.col, pivot)
    value = repaired_entry(minor_quad(stack.base, plan, det_fn), pivot, ops)
    if trace is not None:
        trace.append(RepairApplied(site, value))
    return value
