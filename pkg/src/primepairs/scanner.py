"""Range scans that cross-validate theorem verdicts against the sieve oracle.

A scan walks every odd p in [p_min, p_max], runs the selected tests, and
compares each verdict with the oracle's truth about that test's own claim
(pair primality for the pair tests, primality of p for the rest).  Verdicts
blocked by a precondition are tallied separately and never count as
mismatches.  Output is deterministic: same config, same bytes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .modmath import MulCounter
from .oracle import SieveOracle
from .theorems import (
    TestVerdict,
    TheoremId,
    clement,
    dual_index_corollary,
    goldbach_corollary,
    half_wilson,
    polignac_factorial,
    polignac_half,
    simionov,
    twin_half,
    wilson,
)

CSV_HEADER = "p,k,theorem,verdict,residual,oracle,agree,mults"

_THEOREM_ORDER = list(TheoremId)


@dataclass(frozen=True, slots=True)
class ScanConfig:
    p_min: int
    p_max: int
    k: int
    theorems: frozenset[TheoremId]
    output_format: str = "table"
    count_mults: bool = False

    def __post_init__(self) -> None:
        if not 3 <= self.p_min <= self.p_max:
            raise ValueError(f"need 3 <= p_min <= p_max, got [{self.p_min}, {self.p_max}]")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.output_format not in ("table", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def ordered_theorems(self) -> list[TheoremId]:
        return [t for t in _THEOREM_ORDER if t in self.theorems]


@dataclass(frozen=True, slots=True)
class ScanRow:
    """Verdicts, oracle truths and step counts for one scanned p."""

    p: int
    k: int
    verdicts: dict[TheoremId, TestVerdict]
    oracle_truth: bool  # p and p+2k both prime
    claim_truth: dict[TheoremId, bool]  # per-theorem truth of its own claim
    agree: bool
    mults: dict[TheoremId, int]


@dataclass(frozen=True, slots=True)
class ScanSummary:
    rows_scanned: int
    pairs_found_by_oracle: int
    pairs_found_by_theorem: dict[TheoremId, int]
    mismatches: list[ScanRow] = field(default_factory=list)
    preconditions_skipped: dict[TheoremId, int] = field(default_factory=dict)
    total_mults: dict[TheoremId, int] = field(default_factory=dict)


def _evaluate(
    tid: TheoremId, p: int, k: int, oracle: SieveOracle, counter: MulCounter | None
) -> TestVerdict:
    if tid is TheoremId.WILSON:
        return wilson(p, counter)
    if tid is TheoremId.CLEMENT:
        return clement(p, counter)
    if tid is TheoremId.POLIGNAC_FACTORIAL:
        return polignac_factorial(p, k, counter)
    if tid is TheoremId.SIMIONOV:
        if k > p:
            return TestVerdict.precondition(f"index k={k} exceeds p={p}")
        return simionov(p, k, counter)
    if tid is TheoremId.HALF_WILSON:
        return half_wilson(p, counter)
    if tid is TheoremId.TWIN_HALF:
        return twin_half(p, counter)
    if tid is TheoremId.POLIGNAC_HALF:
        return polignac_half(p, k, counter)
    if tid is TheoremId.GOLDBACH_COROLLARY:
        decomposition = oracle.goldbach_decompose(p + 1)
        if decomposition is None:
            return TestVerdict.precondition(
                f"p+1 = {p + 1} has no decomposition into distinct odd primes"
            )
        return goldbach_corollary(p, *decomposition, counter=counter, oracle=oracle)
    if tid is TheoremId.DUAL_INDEX_COROLLARY:
        return dual_index_corollary(p, 0, 1, counter)
    raise ValueError(f"unknown theorem {tid}")


def _claim_truth(tid: TheoremId, p: int, k: int, oracle: SieveOracle) -> bool:
    if tid.pair_claim:
        # clement and twin_half always test the gap-2 pair; only the
        # parameterized tests follow the configured k
        gap = 2 if tid in (TheoremId.CLEMENT, TheoremId.TWIN_HALF) else 2 * k
        return oracle.is_prime(p) and oracle.is_prime(p + gap)
    return oracle.is_prime(p)


def _consistent(tid: TheoremId, verdict: TestVerdict, truth: bool) -> bool:
    if verdict.precondition_violated:
        return True
    if tid.forward_only:
        return not (truth and not verdict.satisfied)
    return verdict.satisfied == truth


def _scan_chunk(config: ScanConfig, oracle: SieveOracle, ps: range) -> list[ScanRow]:
    theorems = config.ordered_theorems()
    rows = []
    for p in ps:
        verdicts: dict[TheoremId, TestVerdict] = {}
        truths: dict[TheoremId, bool] = {}
        mults: dict[TheoremId, int] = {}
        agree = True
        for tid in theorems:
            counter = MulCounter() if config.count_mults else None
            verdict = _evaluate(tid, p, config.k, oracle, counter)
            truth = _claim_truth(tid, p, config.k, oracle)
            verdicts[tid] = verdict
            truths[tid] = truth
            if counter is not None:
                mults[tid] = counter.count
            if not _consistent(tid, verdict, truth):
                agree = False
        pair_truth = oracle.is_prime(p) and oracle.is_prime(p + 2 * config.k)
        rows.append(ScanRow(p, config.k, verdicts, pair_truth, truths, agree, mults))
    return rows


def _summarize(config: ScanConfig, rows: list[ScanRow]) -> ScanSummary:
    theorems = config.ordered_theorems()
    found = {t: 0 for t in theorems}
    skipped = {t: 0 for t in theorems}
    total_mults = {t: 0 for t in theorems}
    pairs_oracle = 0
    mismatches = []
    for row in rows:
        if row.oracle_truth:
            pairs_oracle += 1
        if not row.agree:
            mismatches.append(row)
        for tid in theorems:
            verdict = row.verdicts[tid]
            if verdict.satisfied:
                found[tid] += 1
            elif verdict.precondition_violated:
                skipped[tid] += 1
            total_mults[tid] += row.mults.get(tid, 0)
    return ScanSummary(
        rows_scanned=len(rows),
        pairs_found_by_oracle=pairs_oracle,
        pairs_found_by_theorem=found,
        mismatches=mismatches,
        preconditions_skipped=skipped,
        total_mults=total_mults,
    )


def scan(
    config: ScanConfig, oracle: SieveOracle, jobs: int = 1
) -> tuple[list[ScanRow], ScanSummary]:
    """Run the configured tests over every odd p in range.

    jobs > 1 partitions the range into contiguous segments scanned by a
    thread pool; rows are reassembled in ascending p order, so the result is
    identical to a serial scan.
    """
    need = config.p_max + 2 * config.k
    if oracle.limit < need:
        raise ValueError(f"scan needs a sieve up to {need}, oracle covers {oracle.limit}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    start = config.p_min if config.p_min % 2 == 1 else config.p_min + 1
    ps = range(start, config.p_max + 1, 2)
    if jobs == 1 or len(ps) <= 1:
        rows = _scan_chunk(config, oracle, ps)
    else:
        jobs = min(jobs, len(ps))
        step = -(-len(ps) // jobs)
        chunks = [ps[i : i + step] for i in range(0, len(ps), step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(lambda c: _scan_chunk(config, oracle, c), chunks)
        rows = [row for part in parts for row in part]
    return rows, _summarize(config, rows)


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def _csv_lines(rows: list[ScanRow]) -> list[str]:
    lines = [CSV_HEADER]
    for row in rows:
        for tid in _THEOREM_ORDER:
            if tid not in row.verdicts:
                continue
            v = row.verdicts[tid]
            residual = "" if v.residual is None else str(v.residual.value)
            mults = str(row.mults[tid]) if tid in row.mults else ""
            ok = _consistent(tid, v, row.claim_truth[tid])
            lines.append(
                f"{row.p},{row.k},{tid.value},{v.kind.value},{residual},"
                f"{_bool_text(row.claim_truth[tid])},{_bool_text(ok)},{mults}"
            )
    return lines


def _table_lines(rows: list[ScanRow], summary: ScanSummary) -> list[str]:
    widths = (8, 4, 22, 22, 14, 7, 6, 10)
    header = ("p", "k", "theorem", "verdict", "residual", "oracle", "agree", "mults")
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for line in _csv_lines(rows)[1:]:
        cells = line.split(",")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    lines.append("")
    lines.append(f"rows scanned:           {summary.rows_scanned}")
    lines.append(f"pairs found by oracle:  {summary.pairs_found_by_oracle}")
    for tid, n in summary.pairs_found_by_theorem.items():
        skips = summary.preconditions_skipped.get(tid, 0)
        mults = summary.total_mults.get(tid, 0)
        lines.append(
            f"{tid.value}: satisfied={n} precondition_skips={skips} total_mults={mults}"
        )
    lines.append(f"mismatches:             {len(summary.mismatches)}")
    for row in summary.mismatches:
        lines.append(f"  MISMATCH at p={row.p}")
    return lines


def emit(rows: list[ScanRow], summary: ScanSummary, output_format: str) -> str:
    """Render rows as CSV (one line per (p, theorem)) or an aligned table.

    CSV columns: p,k,theorem,verdict,residual,oracle,agree,mults.  The
    oracle column is the truth of that theorem's own claim; residual and
    mults are empty when unavailable.
    """
    if output_format == "csv":
        return "\n".join(_csv_lines(rows)) + "\n"
    if output_format == "table":
        return "\n".join(_table_lines(rows, summary)) + "\n"
    raise ValueError(f"unknown output format {output_format!r}")
