"""Deterministic step-count comparison of the two pair tests.

The factorial pair test spends (p-1) + 2k + 3 modular multiplications under
the documented counting conventions; the half-factorial variant spends
(p-1)/2 + k + 6 + cost(4^k).  Counts are exact and machine-independent, so
they are the benchmark metric; wall-clock times are informational extras.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .modmath import MulCounter
from .theorems import polignac_factorial, polignac_half

CSV_HEADER = "p,k,mults_t3,mults_t7,ratio"
CSV_HEADER_TIMED = CSV_HEADER + ",wall_ns_t3,wall_ns_t7"


@dataclass(frozen=True, slots=True)
class BenchReport:
    p: int
    k: int
    mults_t3: int
    mults_t7: int
    ratio: float
    wall_ns_t3: int | None = None
    wall_ns_t7: int | None = None


def bench_pair(p: int, k: int, measure_time: bool = False) -> BenchReport:
    """Run both gap-2k pair tests at p with counting enabled.

    Raises ValueError naming the failing test when its hypotheses do not
    hold at (p, k); counts never depend on whether the congruence holds.
    """
    counter_t3 = MulCounter()
    start = time.perf_counter_ns() if measure_time else 0
    verdict = polignac_factorial(p, k, counter_t3)
    wall_t3 = time.perf_counter_ns() - start if measure_time else None
    if verdict.precondition_violated:
        raise ValueError(f"polignac_factorial precondition failed: {verdict.reason}")

    counter_t7 = MulCounter()
    start = time.perf_counter_ns() if measure_time else 0
    verdict = polignac_half(p, k, counter_t7)
    wall_t7 = time.perf_counter_ns() - start if measure_time else None
    if verdict.precondition_violated:
        raise ValueError(f"polignac_half precondition failed: {verdict.reason}")

    return BenchReport(
        p=p,
        k=k,
        mults_t3=counter_t3.count,
        mults_t7=counter_t7.count,
        ratio=counter_t7.count / counter_t3.count,
        wall_ns_t3=wall_t3,
        wall_ns_t7=wall_t7,
    )


def bench_sweep(
    p_min: int, p_max: int, k: int, measure_time: bool = False
) -> list[BenchReport]:
    """bench_pair over every odd p in range, skipping p that fail a hypothesis."""
    reports = []
    start = p_min if p_min % 2 == 1 else p_min + 1
    for p in range(start, p_max + 1, 2):
        if p < 3:
            continue
        try:
            reports.append(bench_pair(p, k, measure_time))
        except ValueError:
            continue
    return reports


def emit_csv(reports: list[BenchReport], include_time: bool = False) -> str:
    lines = [CSV_HEADER_TIMED if include_time else CSV_HEADER]
    for r in reports:
        line = f"{r.p},{r.k},{r.mults_t3},{r.mults_t7},{r.ratio:.6f}"
        if include_time:
            line += f",{r.wall_ns_t3},{r.wall_ns_t7}"
        lines.append(line)
    return "\n".join(lines) + "\n"
