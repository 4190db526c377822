"""Command-line interface: test, scan, solve, bench, sieve.

Exit codes: 0 on success, 1 when a test is NotSatisfied or a scan found a
mismatch, 2 on usage or domain errors.  Data goes to stdout, diagnostics to
stderr.  Numbers are plain decimal (no separators, no hex).
"""

from __future__ import annotations

import argparse
import re
import sys

from . import bench as bench_mod
from . import scanner
from .oracle import build_sieve
from .synthesis import CombinationScheme, CoprimalityError, derive_scheme_t3, derive_scheme_t7, solve_coefficients
from .theorems import (
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

_THEOREM_TOKENS = {
    "wilson": TheoremId.WILSON,
    "clement": TheoremId.CLEMENT,
    "polignac_factorial": TheoremId.POLIGNAC_FACTORIAL,
    "simionov": TheoremId.SIMIONOV,
    "half_wilson": TheoremId.HALF_WILSON,
    "twin_half": TheoremId.TWIN_HALF,
    "polignac_half": TheoremId.POLIGNAC_HALF,
    "goldbach_corollary": TheoremId.GOLDBACH_COROLLARY,
    "dual_index_corollary": TheoremId.DUAL_INDEX_COROLLARY,
}


def _natural(text: str) -> int:
    if re.fullmatch(r"[0-9]+", text) is None:
        raise argparse.ArgumentTypeError(f"expected a decimal number, got {text!r}")
    return int(text)


def _integer(text: str) -> int:
    if re.fullmatch(r"-?[0-9]+", text) is None:
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primepairs",
        description="Factorial congruence tests for primes and prime pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="run one congruence test at one point")
    p_test.add_argument("--theorem", required=True, choices=sorted(_THEOREM_TOKENS))
    p_test.add_argument("--p", required=True, type=_natural)
    p_test.add_argument("--k", type=_natural)
    p_test.add_argument("--k1", type=_natural)
    p_test.add_argument("--k2", type=_natural)
    p_test.add_argument("--p1", type=_natural)
    p_test.add_argument("--p2", type=_natural)

    p_scan = sub.add_parser("scan", help="cross-validate tests against the sieve over a range")
    p_scan.add_argument("--from", dest="p_min", required=True, type=_natural)
    p_scan.add_argument("--to", dest="p_max", required=True, type=_natural)
    p_scan.add_argument("--k", type=_natural, default=1)
    p_scan.add_argument("--theorems", required=True, help="comma-separated test names")
    p_scan.add_argument("--format", choices=("table", "csv"), default="table")
    p_scan.add_argument("--mults", action="store_true", help="count modular multiplications")
    p_scan.add_argument("--jobs", type=_natural, default=1)

    p_solve = sub.add_parser("solve", help="derive combination coefficients")
    p_solve.add_argument("--lambda", dest="offset", type=_natural)
    p_solve.add_argument("--g", type=_natural)
    p_solve.add_argument("--c1", type=_integer)
    p_solve.add_argument("--c2", type=_integer)
    p_solve.add_argument("--preset", choices=("t3", "t7"))
    p_solve.add_argument("--k", type=_natural)
    p_solve.add_argument("--sign", choices=("+", "-"), default="+")

    p_bench = sub.add_parser("bench", help="compare step counts of the two pair tests")
    p_bench.add_argument("--p", type=_natural)
    p_bench.add_argument("--k", type=_natural, default=1)
    p_bench.add_argument("--sweep", nargs=2, type=_natural, metavar=("FROM", "TO"))
    p_bench.add_argument("--time", action="store_true", help="also report wall-clock times")

    p_sieve = sub.add_parser("sieve", help="list primes or prime pairs")
    p_sieve.add_argument("--limit", required=True, type=_natural)
    p_sieve.add_argument("--pairs-k", dest="pairs_k", type=_natural)
    p_sieve.add_argument("--count", action="store_true")

    return parser


def _cmd_test(args: argparse.Namespace) -> int:
    tid = _THEOREM_TOKENS[args.theorem]
    if tid.needs_k and args.k is None:
        print(f"error: --theorem {args.theorem} requires --k", file=sys.stderr)
        return 2
    if tid is TheoremId.WILSON:
        verdict = wilson(args.p)
    elif tid is TheoremId.CLEMENT:
        verdict = clement(args.p)
    elif tid is TheoremId.POLIGNAC_FACTORIAL:
        verdict = polignac_factorial(args.p, args.k)
    elif tid is TheoremId.SIMIONOV:
        verdict = simionov(args.p, args.k)
    elif tid is TheoremId.HALF_WILSON:
        verdict = half_wilson(args.p)
    elif tid is TheoremId.TWIN_HALF:
        verdict = twin_half(args.p)
    elif tid is TheoremId.POLIGNAC_HALF:
        verdict = polignac_half(args.p, args.k)
    elif tid is TheoremId.GOLDBACH_COROLLARY:
        if args.p1 is None or args.p2 is None:
            print("error: goldbach_corollary requires --p1 and --p2", file=sys.stderr)
            return 2
        verdict = goldbach_corollary(args.p, args.p1, args.p2)
    else:
        if args.k1 is None or args.k2 is None:
            print("error: dual_index_corollary requires --k1 and --k2", file=sys.stderr)
            return 2
        verdict = dual_index_corollary(args.p, args.k1, args.k2)

    if verdict.kind is VerdictKind.PRECONDITION_VIOLATED:
        print(f"PreconditionViolated: {verdict.reason}", file=sys.stderr)
        return 2
    assert verdict.residual is not None
    print(f"{verdict.kind.value} residual={verdict.residual.value} mod {verdict.residual.modulus}")
    return 0 if verdict.satisfied else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    theorems = set()
    for token in args.theorems.split(","):
        token = token.strip()
        if token not in _THEOREM_TOKENS:
            print(f"error: unknown theorem {token!r}", file=sys.stderr)
            return 2
        theorems.add(_THEOREM_TOKENS[token])
    config = scanner.ScanConfig(
        p_min=args.p_min,
        p_max=args.p_max,
        k=args.k,
        theorems=frozenset(theorems),
        output_format=args.format,
        count_mults=args.mults,
    )
    oracle = build_sieve(args.p_max + 2 * args.k)
    rows, summary = scanner.scan(config, oracle, jobs=max(args.jobs, 1))
    sys.stdout.write(scanner.emit(rows, summary, config.output_format))
    return 0 if not summary.mismatches else 1


def _scheme_table(scheme: CombinationScheme) -> str:
    header = ("lambda", "g", "C1", "C2", "X", "Y")
    values = (scheme.offset, scheme.g, scheme.c1, scheme.c2, scheme.x, scheme.y)
    cells = [str(v) for v in values]
    widths = [max(len(h), len(c)) for h, c in zip(header, cells)]
    top = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    bottom = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
    return top + "\n" + bottom


def _signed_term(n: int, symbol: str) -> str:
    return f"+{n}{symbol}" if n >= 0 else f"-{-n}{symbol}"


def _congruence_text(scheme: CombinationScheme, f1_text: str) -> str:
    lead = scheme.x * scheme.g
    rhs = f"{-scheme.y}p" if scheme.y != 0 else "0"
    c1 = _signed_term(scheme.c1, "")
    return f"{lead}[{f1_text}{c1}] ≡ {rhs} (mod p(p+{scheme.offset}))"


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.preset is not None:
        if args.k is None:
            print("error: --preset requires --k", file=sys.stderr)
            return 2
        if args.preset == "t3":
            scheme = derive_scheme_t3(args.k)
            print(_scheme_table(scheme))
            print(_congruence_text(scheme, "(p-1)!"))
        else:
            s = 1 if args.sign == "+" else -1
            scheme = derive_scheme_t7(args.k, s)
            print(_scheme_table(scheme))
            print(_congruence_text(scheme, "[((p-1)/2)!]^2"))
            # Sign-folded rendering, valid whichever class p falls in.
            lead = scheme.x * scheme.g
            d0 = scheme.y * s
            print(
                f"{lead}[((p-1)/2)!]^2 + (-1)^((p-1)/2)[{lead}{_signed_term(d0, 'p')}] "
                f"≡ 0 (mod p(p+{scheme.offset}))"
            )
            scaled = derive_scheme_t7(args.k, s, scaled=True)
            print(
                f"note: the scaled variant X={scaled.x}, Y={scaled.y} (factor 4^k={4 ** args.k}) "
                f"satisfies the same identity and has the same zero set; 4^k is a unit mod odd moduli"
            )
    else:
        missing = [
            flag
            for flag, value in (
                ("--lambda", args.offset),
                ("--g", args.g),
                ("--c1", args.c1),
                ("--c2", args.c2),
            )
            if value is None
        ]
        if missing:
            print(f"error: solve requires {' '.join(missing)} (or --preset)", file=sys.stderr)
            return 2
        scheme = solve_coefficients(args.offset, args.g, args.c1, args.c2)
        print(_scheme_table(scheme))
        print(_congruence_text(scheme, "f1(p)"))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    if (args.p is None) == (args.sweep is None):
        print("error: bench needs exactly one of --p or --sweep", file=sys.stderr)
        return 2
    if args.sweep is not None:
        reports = bench_mod.bench_sweep(args.sweep[0], args.sweep[1], args.k, args.time)
    else:
        reports = [bench_mod.bench_pair(args.p, args.k, args.time)]
    sys.stdout.write(bench_mod.emit_csv(reports, include_time=args.time))
    return 0


def _cmd_sieve(args: argparse.Namespace) -> int:
    oracle = build_sieve(args.limit)
    if args.pairs_k is not None:
        top = args.limit - 2 * args.pairs_k
        values = oracle.pairs(args.pairs_k, top) if top >= 2 else []
    else:
        values = oracle.primes()
    if args.count:
        print(len(values))
    else:
        for v in values:
            print(v)
    return 0


def run(argv: list[str]) -> int:
    """Parse argv (without the program name) and execute; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "test":
            return _cmd_test(args)
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_sieve(args)
    except (ValueError, CoprimalityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
