import subprocess
import sys

import pytest

from primepairs.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_clement_satisfied(capsys):
    code, out, err = invoke(capsys, "test", "--theorem", "clement", "--p", "5")
    assert code == 0
    assert out == "Satisfied residual=0 mod 35\n"


def test_clement_even_p_is_usage_error(capsys):
    code, out, err = invoke(capsys, "test", "--theorem", "clement", "--p", "4")
    assert code == 2
    assert out == ""
    assert "PreconditionViolated" in err


def test_not_satisfied_exit_code(capsys):
    code, out, _ = invoke(capsys, "test", "--theorem", "clement", "--p", "7")
    assert code == 1
    assert out.startswith("NotSatisfied residual=56 mod 63")


def test_parametrized_tests(capsys):
    code, out, _ = invoke(capsys, "test", "--theorem", "polignac_half", "--p", "7", "--k", "2")
    assert code == 0 and "Satisfied" in out
    code, out, _ = invoke(
        capsys, "test", "--theorem", "goldbach_corollary", "--p", "7", "--p1", "3", "--p2", "5"
    )
    assert code == 0 and "Satisfied" in out
    code, out, _ = invoke(
        capsys, "test", "--theorem", "dual_index_corollary", "--p", "7", "--k1", "1", "--k2", "2"
    )
    assert code == 0 and "Satisfied" in out


def test_missing_parameter_flags(capsys):
    code, _, err = invoke(capsys, "test", "--theorem", "simionov", "--p", "7")
    assert code == 2 and "--k" in err
    code, _, err = invoke(capsys, "test", "--theorem", "goldbach_corollary", "--p", "7")
    assert code == 2 and "--p1" in err


def test_domain_error_exit(capsys):
    code, _, err = invoke(capsys, "test", "--theorem", "wilson", "--p", "1")
    assert code == 2 and "error" in err


def test_solve_preset_t3_k2(capsys):
    code, out, _ = invoke(capsys, "solve", "--preset", "t3", "--k", "2")
    assert code == 0
    assert "96[(p-1)!+1] ≡ -23p (mod p(p+4))" in out
    # scheme table carries X=4, Y=23
    lines = out.splitlines()
    header = lines[0].split()
    values = lines[1].split()
    scheme = dict(zip(header, values))
    assert scheme["X"] == "4" and scheme["Y"] == "23"
    assert scheme["lambda"] == "4" and scheme["g"] == "24"


def test_solve_preset_t7_k2(capsys):
    code, out, _ = invoke(capsys, "solve", "--preset", "t7", "--k", "2")
    assert code == 0
    assert "36[((p-1)/2)!]^2 + (-1)^((p-1)/2)[36-7p] ≡ 0 (mod p(p+4))" in out
    assert "4^k=16" in out  # the scaled-variant note


def test_solve_preset_t7_k1_matches_twin_coefficients(capsys):
    code, out, _ = invoke(capsys, "solve", "--preset", "t7", "--k", "1")
    assert code == 0
    assert "2[((p-1)/2)!]^2 + (-1)^((p-1)/2)[2+5p] ≡ 0 (mod p(p+2))" in out


def test_solve_generic(capsys):
    code, out, _ = invoke(
        capsys, "solve", "--lambda", "2", "--g", "2", "--c1", "1", "--c2", "1"
    )
    assert code == 0
    lines = out.splitlines()
    scheme = dict(zip(lines[0].split(), lines[1].split()))
    assert scheme["X"] == "2" and scheme["Y"] == "1"
    assert "4[f1(p)+1] ≡ -1p (mod p(p+2))" in out


def test_solve_requires_full_input(capsys):
    code, _, err = invoke(capsys, "solve", "--lambda", "2", "--g", "2")
    assert code == 2 and "--c1" in err
    code, _, err = invoke(capsys, "solve", "--preset", "t3")
    assert code == 2 and "--k" in err


def test_scan_csv_and_exit(capsys):
    code, out, _ = invoke(
        capsys,
        "scan", "--from", "3", "--to", "20", "--k", "1",
        "--theorems", "clement", "--format", "csv", "--mults",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,k,theorem,verdict,residual,oracle,agree,mults"
    assert lines[1] == "3,1,Clement,Satisfied,0,true,true,3"
    assert len(lines) == 10  # header + the nine odd p in [3, 20]


def test_scan_multiple_theorems(capsys):
    code, out, _ = invoke(
        capsys,
        "scan", "--from", "3", "--to", "50", "--k", "2",
        "--theorems", "clement,polignac_factorial,twin_half,polignac_half",
        "--format", "csv", "--jobs", "3",
    )
    assert code == 0
    assert "PolignacFactorial" in out and "TwinHalf" in out


def test_scan_rejects_unknown_theorem(capsys):
    code, _, err = invoke(
        capsys, "scan", "--from", "3", "--to", "9", "--theorems", "fermat"
    )
    assert code == 2 and "fermat" in err


def test_bench_single_point(capsys):
    code, out, _ = invoke(capsys, "bench", "--p", "101", "--k", "1")
    assert code == 0
    assert out == "p,k,mults_t3,mults_t7,ratio\n101,1,105,57,0.542857\n"


def test_bench_sweep_and_blocked_point(capsys):
    code, out, _ = invoke(capsys, "bench", "--sweep", "3", "11", "--k", "2")
    assert code == 0
    ps = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert ps == ["5", "7", "11"]
    code, _, err = invoke(capsys, "bench", "--p", "3", "--k", "2")
    assert code == 2 and "polignac_factorial" in err


def test_sieve_listing(capsys):
    code, out, _ = invoke(capsys, "sieve", "--limit", "10")
    assert code == 0 and out == "2\n3\n5\n7\n"
    code, out, _ = invoke(capsys, "sieve", "--limit", "10", "--count")
    assert out == "4\n"
    code, out, _ = invoke(capsys, "sieve", "--limit", "20", "--pairs-k", "2")
    assert out == "3\n7\n13\n"


def test_strict_decimal_numbers(capsys):
    for bad in ("1_000", "0x10", "12x", "", "+5"):
        code, _, _ = invoke(capsys, "sieve", "--limit", bad)
        assert code == 2, bad


def test_unknown_flags_exit_2(capsys):
    code, _, _ = invoke(capsys, "sieve", "--limit", "10", "--frobnicate")
    assert code == 2
    code, _, _ = invoke(capsys, "frobnicate")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primepairs", "test", "--theorem", "clement", "--p", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "Satisfied residual=0 mod 35\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["test", "--theorem", "twin_half", "--p", "5"],
        ["test", "--theorem", "wilson", "--p", "13"],
        ["test", "--theorem", "half_wilson", "--p", "13"],
        ["test", "--theorem", "simionov", "--p", "13", "--k", "4"],
        ["test", "--theorem", "polignac_factorial", "--p", "7", "--k", "2"],
    ],
)
def test_documented_invocations_satisfied(capsys, argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == 0 and out.startswith("Satisfied residual=0 mod ")
