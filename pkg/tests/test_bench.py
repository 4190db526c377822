from concurrent.futures import ThreadPoolExecutor

import pytest

from primepairs import bench_pair, bench_sweep
from primepairs.bench import CSV_HEADER, CSV_HEADER_TIMED, emit_csv


def test_counts_at_p101_k1():
    # documented conventions: t3 = (p-1) + 2k + 3, t7 = (p-1)/2 + k + 6 + cost(4^k)
    r = bench_pair(101, 1)
    assert r.mults_t3 == 105
    assert r.mults_t7 == 57
    assert r.ratio == 57 / 105 < 0.6


def test_counts_smallest_input():
    r = bench_pair(5, 1)
    assert r.mults_t3 == 9 and r.mults_t7 == 9
    assert r.ratio == 1.0


def test_ratio_approaches_half():
    r = bench_pair(10007, 1)
    assert r.mults_t3 == 10011 and r.mults_t7 == 5010
    assert abs(r.ratio - 0.5) < 0.05


def test_counts_deterministic_across_runs_and_workers():
    first = bench_pair(1001, 2)
    again = bench_pair(1001, 2)
    assert (first.mults_t3, first.mults_t7) == (again.mults_t3, again.mults_t7)
    with ThreadPoolExecutor(max_workers=4) as pool:
        reports = list(pool.map(lambda _: bench_pair(1001, 2), range(8)))
    assert all(
        (r.mults_t3, r.mults_t7) == (first.mults_t3, first.mults_t7) for r in reports
    )


def test_precondition_errors_name_the_test():
    with pytest.raises(ValueError, match="polignac_factorial"):
        bench_pair(3, 2)  # 3 divides 96
    with pytest.raises(ValueError, match="polignac_factorial"):
        bench_pair(4, 1)


def test_sweep_skips_blocked_points():
    reports = bench_sweep(3, 21, 2)
    # p=3 divides 96 = 2k(2k)!, p=9 divides 36 = 2k((2k-1)!!)^2
    assert [r.p for r in reports] == [5, 7, 11, 13, 15, 17, 19, 21]
    for r in reports:
        assert r.ratio > 0


def test_ratio_bound_for_large_p():
    for r in bench_sweep(1001, 1101, 1):
        assert r.ratio < 0.55


def test_csv_output():
    text = emit_csv([bench_pair(101, 1)])
    assert text == CSV_HEADER + "\n" + "101,1,105,57,0.542857\n"


def test_csv_with_wall_times():
    r = bench_pair(101, 1, measure_time=True)
    assert r.wall_ns_t3 is not None and r.wall_ns_t7 is not None
    text = emit_csv([r], include_time=True)
    assert text.startswith(CSV_HEADER_TIMED + "\n")
    assert text.splitlines()[1].startswith("101,1,105,57,0.542857,")
