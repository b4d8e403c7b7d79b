"""Operation-count and wall-time benchmark over seeded random matrices."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .driver import Strategy, determinant
from .oracles import LAPLACE_MAX_ORDER
from .randmat import random_matrices

# Methods whose determinant routine charges an OpCounter.
INSTRUMENTED = {Strategy.STRICT, Strategy.DOUBLE_CROSS, Strategy.HYBRID, Strategy.BAREISS}

CSV_FIELDS = ("method", "n", "mean_ops", "mean_wall_time", "completed", "count")


@dataclass
class BenchRow:
    method: Strategy
    n: int
    mean_ops: Optional[float]
    mean_wall_time: float
    completed: int
    count: int

    def as_csv(self) -> list:
        ops = "" if self.mean_ops is None else f"{self.mean_ops:.6g}"
        return [self.method.value, self.n, ops, f"{self.mean_wall_time:.6e}",
                self.completed, self.count]


def bench(n_list: Iterable[int], count: int = 10, seed: int = 0,
          methods: Sequence["str | Strategy"] = (Strategy.HYBRID,),
          bound: int = 5) -> list[BenchRow]:
    """One row per (method, n).  Every method sees the same matrices for a given n."""
    methods = [Strategy.parse(m) for m in methods]
    rows = []
    for method in methods:
        for n in n_list:
            if method is Strategy.LAPLACE and n > LAPLACE_MAX_ORDER:
                continue
            mats = random_matrices(n, seed + n, count, bound)
            total_ops = 0
            elapsed = 0.0
            completed = 0
            for a in mats:
                t0 = time.perf_counter()
                report = determinant(a, method)
                elapsed += time.perf_counter() - t0
                total_ops += report.ops.total
                completed += report.ok
            mean_ops = total_ops / count if method in INSTRUMENTED else None
            rows.append(BenchRow(method, n, mean_ops, elapsed / count, completed, count))
    return rows


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for row in rows:
        w.writerow(row.as_csv())
    return buf.getvalue()


def growth_ratio(rows: Sequence[BenchRow], method: "str | Strategy", n_small: int,
                 n_large: int) -> float:
    by_n = {r.n: r.mean_ops for r in rows if r.method is Strategy.parse(method)}
    return by_n[n_large] / by_n[n_small]
