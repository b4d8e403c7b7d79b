"""Strategy selection: strict, double-cross, hybrid, and the two oracles."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .condense import (Done, FailureSite, HybridFallback, OpCounter,
                       run_condensation)
from .crossing import apply_repair
from .matrix import Matrix, Span, as_matrix, det2x2, submatrix
from .oracles import bareiss_det, laplace_det

CROSS_CHECK_LAPLACE_MAX = 7


class Strategy(str, enum.Enum):
    STRICT = "strict"
    DOUBLE_CROSS = "double-cross"
    HYBRID = "hybrid"
    BAREISS = "bareiss"
    LAPLACE = "laplace"

    @classmethod
    def parse(cls, name: "str | Strategy") -> "Strategy":
        if isinstance(name, Strategy):
            return name
        return cls(name.replace("_", "-").lower())


CONDENSING = (Strategy.STRICT, Strategy.DOUBLE_CROSS, Strategy.HYBRID)


@dataclass
class RunReport:
    strategy_used: Strategy
    determinant: Optional[int] = None
    failures: list[FailureSite] = field(default_factory=list)
    irreparable: list[FailureSite] = field(default_factory=list)
    repairs: int = 0
    fallbacks: int = 0
    ops: OpCounter = field(default_factory=OpCounter)
    trace: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.determinant is not None


def determinant(a: Matrix | Sequence[Sequence[int]],
                strategy: "str | Strategy" = Strategy.HYBRID) -> RunReport:
    a = as_matrix(a)
    report = RunReport(Strategy.parse(strategy))
    _run(a, report)
    return report


def hybrid_det(a: Matrix, ops: Optional[OpCounter] = None) -> int:
    """Hybrid determinant as a plain function; charges ``ops`` if given."""
    report = RunReport(Strategy.HYBRID, ops=ops if ops is not None else OpCounter())
    _run(as_matrix(a), report, keep_trace=False)
    return report.determinant


def _run(a: Matrix, report: RunReport, keep_trace: bool = True) -> None:
    strategy = report.strategy_used
    trace = report.trace if keep_trace else None
    if strategy is Strategy.BAREISS:
        report.determinant = bareiss_det(a, report.ops)
    elif strategy is Strategy.LAPLACE:
        report.determinant = laplace_det(a)
    elif a.order <= 2:
        report.determinant = _small_det(a, report.ops)
    else:
        _condense(a, report, trace)
        return
    if trace is not None:
        trace.append(Done(report.determinant))


def _small_det(a: Matrix, ops: OpCounter) -> int:
    if a.order == 1:
        return a[1, 1]
    ops.multiplications += 2
    ops.subtractions += 1
    return det2x2(a)


def _condense(a: Matrix, report: RunReport, trace: Optional[list]) -> None:
    strategy = report.strategy_used
    ops = report.ops

    def minor_det(m: Matrix) -> int:
        # Minors are strictly smaller than ``a``, so this recursion ends.
        return hybrid_det(m, ops)

    def on_zero(stack, site: FailureSite) -> Optional[int]:
        report.failures.append(site)
        if strategy is Strategy.STRICT:
            return None
        value = apply_repair(stack, site, minor_det, ops, trace)
        if value is not None:
            report.repairs += 1
            return value
        report.irreparable.append(site)
        if strategy is Strategy.DOUBLE_CROSS:
            return None
        ell = stack.n - site.level
        span = Span.square(site.row - 1, site.col - 1, ell + 3)
        value = bareiss_det(submatrix(stack.base, span), ops)
        report.fallbacks += 1
        if trace is not None:
            trace.append(HybridFallback(site, span, value))
        return value

    stack, failure = run_condensation(a, ops, trace, on_zero)
    if failure is None:
        report.determinant = stack.top[1, 1]


def cross_check_values(a: Matrix | Sequence[Sequence[int]],
                       laplace_max: int = CROSS_CHECK_LAPLACE_MAX) -> dict[Strategy, Optional[int]]:
    """Determinant per applicable strategy; None marks a strategy that gave up."""
    a = as_matrix(a)
    out = {}
    for strategy in Strategy:
        if strategy is Strategy.LAPLACE and a.order > laplace_max:
            continue
        out[strategy] = determinant(a, strategy).determinant
    return out


def cross_check(a: Matrix | Sequence[Sequence[int]],
                laplace_max: int = CROSS_CHECK_LAPLACE_MAX) -> bool:
    values = {v for v in cross_check_values(a, laplace_max).values() if v is not None}
    return len(values) == 1
