"""Congruence characterizations of primes and prime pairs.

Library layout:

* modmath: modular factorials, double factorials, powers, sign terms, with
  optional multiplication counting.
* theorems: the congruence tests themselves, verdict + residual.
* synthesis: the coefficient solver that merges a mod-p and a mod-(p+L)
  congruence into one mod p(p+L).
* oracle: sieve of Eratosthenes ground truth, pair enumeration, Goldbach
  decompositions.
* scanner: range scans comparing verdicts to the oracle.
* bench: deterministic multiplication-count comparisons.
* cli: the primepairs command.
"""

from .bench import BenchReport, bench_pair, bench_sweep
from .modmath import (
    MulCounter,
    Residue,
    double_factorial_odd_mod,
    factorial_mod,
    mul_mod,
    pow_mod,
    sign_pow,
)
from .oracle import SieveOracle, build_sieve, pnt_estimate
from .scanner import ScanConfig, ScanRow, ScanSummary, emit, scan
from .synthesis import (
    CombinationScheme,
    CoprimalityError,
    combine,
    combine_factorial,
    combine_half_factorial,
    derive_scheme_t3,
    derive_scheme_t7,
    solve_coefficients,
)
from .theorems import (
    TestVerdict,
    TheoremId,
    VerdictKind,
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

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "CombinationScheme",
    "CoprimalityError",
    "MulCounter",
    "Residue",
    "ScanConfig",
    "ScanRow",
    "ScanSummary",
    "SieveOracle",
    "TestVerdict",
    "TheoremId",
    "VerdictKind",
    "bench_pair",
    "bench_sweep",
    "build_sieve",
    "clement",
    "combine",
    "combine_factorial",
    "combine_half_factorial",
    "derive_scheme_t3",
    "derive_scheme_t7",
    "double_factorial_odd_mod",
    "dual_index_corollary",
    "emit",
    "factorial_mod",
    "goldbach_corollary",
    "half_wilson",
    "mul_mod",
    "pnt_estimate",
    "polignac_factorial",
    "polignac_half",
    "pow_mod",
    "scan",
    "sign_pow",
    "simionov",
    "solve_coefficients",
    "twin_half",
    "wilson",
]
