"""Dodgson condensation over the integers.

Each pass replaces an order-m iterate by the order-(m-1) matrix of its
contiguous 2x2 determinants, divided entrywise (exactly) by the interior of
the iterate two passes back.  A zero in that interior is a divisor we cannot
use; the pass reports it as a :class:`FailureSite` or hands it to a repair
hook.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .matrix import ContractViolation, Matrix, Span, exact_div, interior


@dataclass
class OpCounter:
    multiplications: int = 0
    subtractions: int = 0
    divisions: int = 0

    @property
    def total(self) -> int:
        return self.multiplications + self.subtractions + self.divisions

    def add(self, other: "OpCounter") -> None:
        self.multiplications += other.multiplications
        self.subtractions += other.subtractions
        self.divisions += other.divisions

    def snapshot(self) -> "OpCounter":
        return OpCounter(self.multiplications, self.subtractions, self.divisions)


@dataclass(frozen=True)
class FailureSite:
    """A zero at interior position (row, col) of the order-``level`` iterate."""

    level: int
    row: int
    col: int

    def __post_init__(self):
        if not (2 <= self.row <= self.level - 1 and 2 <= self.col <= self.level - 1):
            raise ContractViolation(f"{self} is not an interior position")

    @property
    def blocked(self) -> tuple[int, int]:
        """Position this zero divides into, in the order-(level-2) iterate."""
        return self.row - 1, self.col - 1


# Trace events.  One small frozen dataclass per tag; ``tag`` is the wire name.

@dataclass(frozen=True)
class CondenseLevel:
    k: int
    tag = "CondenseLevel"


@dataclass(frozen=True)
class ZeroDetected:
    site: FailureSite
    tag = "ZeroDetected"


@dataclass(frozen=True)
class PivotSelected:
    site: FailureSite
    r: int
    s: int
    alpha: int
    tag = "PivotSelected"


@dataclass(frozen=True)
class RepairApplied:
    site: FailureSite
    value: int
    tag = "RepairApplied"


@dataclass(frozen=True)
class HybridFallback:
    site: FailureSite
    minor_span: Span
    value: int
    tag = "HybridFallback"


@dataclass(frozen=True)
class Done:
    determinant: int
    tag = "Done"


TraceEvent = Union[CondenseLevel, ZeroDetected, PivotSelected, RepairApplied,
                   HybridFallback, Done]


@dataclass
class CondensationStack:
    """All iterates of one run, base first; ``iterates[t]`` has order n - t."""

    base: Matrix
    iterates: list[Matrix] = field(default_factory=list)

    def __post_init__(self):
        if not self.iterates:
            self.iterates.append(self.base)

    @property
    def n(self) -> int:
        return self.base.order

    def level(self, k: int) -> Matrix:
        """The iterate of order ``k`` (A^(k) in condensation notation)."""
        t = self.n - k
        if not 0 <= t < len(self.iterates):
            raise ContractViolation(f"level {k} has not been computed")
        return self.iterates[t]

    @property
    def top(self) -> Matrix:
        return self.iterates[-1]

    @property
    def complete(self) -> bool:
        return self.top.order == 1

    def push(self, m: Matrix) -> None:
        if m.order != self.top.order - 1:
            raise ContractViolation("iterate orders must drop by one")
        self.iterates.append(m)


# Called with the stack so far and the site; returns the blocked entry's value
# or None when it cannot be produced.
ZeroHook = Callable[[CondensationStack, FailureSite], Optional[int]]


def condense_level(current: Matrix, divisors: Optional[Matrix],
                   ops: Optional[OpCounter] = None,
                   on_zero: Optional[Callable[[FailureSite], Optional[int]]] = None,
                   ) -> Union[Matrix, FailureSite]:
    """One condensation pass with an optional per-zero callback.

    Zeros are visited row-major.  Without ``on_zero`` (or when it returns
    None) the first offending site is returned instead of a matrix.
    """
    m = current.order
    if m < 2:
        raise ContractViolation("cannot condense an order-1 matrix")
    if divisors is not None and divisors.order != m - 1:
        raise ContractViolation(
            f"divisors of order {divisors.order} do not match an order-{m} iterate")
    a = current.rows
    d = divisors.rows if divisors is not None else None
    out = []
    for i in range(m - 1):
        row = []
        for j in range(m - 1):
            if d is not None and d[i][j] == 0:
                site = FailureSite(m + 1, i + 2, j + 2)
                value = on_zero(site) if on_zero is not None else None
                if value is None:
                    return site
                row.append(value)
                continue
            num = a[i][j] * a[i + 1][j + 1] - a[i + 1][j] * a[i][j + 1]
            if ops is not None:
                ops.multiplications += 2
                ops.subtractions += 1
            if d is not None:
                num = exact_div(num, d[i][j])
                if ops is not None:
                    ops.divisions += 1
            row.append(num)
        out.append(row)
    return Matrix(out)


def condense_once(current: Matrix, divisors: Optional[Matrix] = None,
                  ops: Optional[OpCounter] = None) -> Union[Matrix, FailureSite]:
    return condense_level(current, divisors, ops)


def run_condensation(a: Matrix, ops: Optional[OpCounter] = None,
                     trace: Optional[list] = None,
                     on_zero: Optional[ZeroHook] = None,
                     ) -> tuple[CondensationStack, Optional[FailureSite]]:
    """Condense ``a`` down to order 1, keeping every iterate.

    Returns the stack and, if the run stopped early, the site that stopped it.
    """
    stack = CondensationStack(a)
    emit = trace.append if trace is not None else (lambda ev: None)

    def hook(site: FailureSite) -> Optional[int]:
        emit(ZeroDetected(site))
        return on_zero(stack, site) if on_zero is not None else None

    while stack.top.order > 1:
        k = stack.top.order - 1
        emit(CondenseLevel(k))
        divisors = interior(stack.level(k + 2)) if k + 2 <= stack.n else None
        nxt = condense_level(stack.top, divisors, ops, hook)
        if isinstance(nxt, FailureSite):
            return stack, nxt
        stack.push(nxt)
    emit(Done(stack.top[1, 1]))
    return stack, None


def dodgson_strict(a: Matrix, ops: Optional[OpCounter] = None,
                   trace: Optional[list] = None) -> Union[int, FailureSite]:
    """Plain Dodgson condensation: the determinant, or the first zero divisor."""
    stack, failure = run_condensation(a, ops, trace)
    return failure if failure is not None else stack.top[1, 1]


def expected_op_bound(n: int) -> int:
    """4 * (1^2 + ... + (n-1)^2), the textbook cost of a full strict run."""
    if n < 1:
        raise ContractViolation("order must be positive")
    return 4 * sum(k * k for k in range(1, n))


def exact_op_counts(n: int) -> OpCounter:
    """Precise tally for a successful strict run; the first pass divides nothing."""
    sq = lambda m: sum(k * k for k in range(1, m + 1))  # noqa: E731
    return OpCounter(2 * sq(n - 1), sq(n - 1), sq(n - 2) if n >= 2 else 0)
