"""Command-line front end.

Every library operation is reachable from a subcommand; reports are
emitted as JSON (decimal-string numerics, stable key order), CSV, or
plain text, and the report-shaped subcommands can render a matplotlib
figure next to the delimited output.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 insufficient precision.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass


from . import (
    IntPolynomial,
    PrecisionError,
    all_roots,
    binet_int,
    char_poly,
    delta_closed_form,
    delta_recursion,
    derive_bounds,
    fibonacci,
    find_solutions,
    intersection_scan,
    kbonacci,
    matveev_A,
    matveev_C,
    minpoly_of_quotient,
    mod25_flagged,
    mod25_scan,
    norm_linear_resultant,
    padic_val,
    reproduce_example_3_4,
    threshold_search,
    verify_growth,
    verify_prop_k2,
    weil_height,
    window_coefficient,
    window_coefficient_minpoly,
)
from .balls import ComplexBall, RealBall
from .bounds import Gamma
from .roots import log_abs
from .serialize import (
    ball_to_json,
    bound_report_to_json,
    csv_dumps,
    json_dumps,
    rootset_to_json,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

PRECISION_ENV = "FIBSUM_PRECISION"


@dataclass
class CliConfig:
    precision_bits: int = 256
    output_format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def _poly_arg(text: str) -> IntPolynomial:
    """Comma-separated integer coefficients, ascending degree."""
    try:
        return IntPolynomial([int(t) for t in text.split(",")])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}: {exc}") from exc


def _default_precision() -> int:
    return int(os.environ.get(PRECISION_ENV, "256"))


def _emit(payload: dict, config: CliConfig) -> None:
    if config.output_format == "text":
        for key, value in sorted(payload.items()):
            print(f"{key}: {value}")
    else:
        sys.stdout.write(json_dumps(payload))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision",
        type=int,
        default=None,
        help=f"precision in bits (default 256, or ${PRECISION_ENV})",
    )
    common.add_argument(
        "--format", choices=["json", "csv", "text"], default="json", help="output format"
    )
    common.add_argument("--threads", type=int, default=1, help="worker threads for search")

    parser = argparse.ArgumentParser(
        prog="fibsum",
        description="Window sums of k-step Fibonacci sequences landing in the "
        "Fibonacci sequence: exact search, certified constants, effective bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("seq", help="sequence values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add_parser("roots", help="certified root set of the order-k polynomial")
    p.add_argument("--k", type=int, required=True)

    p = add_parser("binet-check", help="power-sum formula vs exact recurrence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add_parser("norm", help="norm determinant by three independent routes")
    p.add_argument("--k", type=int, required=True)

    p = add_parser("scan-mod25", help="norm determinant residues mod 25")
    p.add_argument("--k-lo", type=int, default=2)
    p.add_argument("--k-hi", type=int, default=100)
    p.add_argument("--plot", help="write a residue bar chart to this file")

    p = add_parser("v5-check", help="5-adic valuation identity for k = 1 mod 5")
    p.add_argument("--k", type=int, nargs="+", required=True)

    p = add_parser("minpoly", help="minimal polynomial of num(r)/den(r)")
    p.add_argument("--k", type=int, required=True, help="order of the root's polynomial")
    p.add_argument("--d", type=int, help="window length: uses num=T^(d+1)-1, den=(k+1)T-2k")
    p.add_argument("--num", type=_poly_arg, help="numerator coefficients, ascending")
    p.add_argument("--den", type=_poly_arg, help="denominator coefficients, ascending")

    p = add_parser("height", help="logarithmic height from a primitive polynomial")
    p.add_argument("--poly", type=_poly_arg, required=True)

    p = add_parser("matveev", help="lower-bound constants C, A_i, lambda for (k, d)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add_parser("bound", help="full effective-bound report for (k, d)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add_parser("threshold", help="first power of two where a+b*ln(n+2)-c*n < 0")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--refine", action="store_true", help="binary-search below the doubling hit")

    p = add_parser("search", help="exhaustive solution scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--plot", help="write a solution scatter to this file")

    p = add_parser("intersect", help="order-k values that are Fibonacci numbers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add_parser("verify-k2", help="exhaustive check of the k = 2 characterization")
    p.add_argument("--d-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=200)

    p = add_parser("verify-growth", help="certified dominant-root growth envelope")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--plot", help="write a growth figure to this file")

    p = add_parser(
        "repro-example-3-4",
        help="recompute every constant of the published k=3, d=1 example",
    )
    p.add_argument("--plot-dir", help="directory for companion figures")

    return parser


def _cmd_seq(args, config: CliConfig) -> int:
    value = kbonacci(args.k, args.n) if args.k != 2 else fibonacci(args.n)
    _emit({"k": args.k, "n": args.n, "value": str(value)}, config)
    return EXIT_OK


def _cmd_roots(args, config: CliConfig) -> int:
    rs = all_roots(args.k, config.precision_bits)
    _emit(rootset_to_json(rs), config)
    return EXIT_OK


def _cmd_binet_check(args, config: CliConfig) -> int:
    failures = []
    for n in range(1, args.n_max + 1):
        if binet_int(args.k, n, config.precision_bits) != kbonacci(args.k, n):
            failures.append(n)
    _emit(
        {"failures": failures, "k": args.k, "n_max": args.n_max, "ok": not failures},
        config,
    )
    return EXIT_OK if not failures else EXIT_VERIFICATION_FAILED


def _cmd_norm(args, config: CliConfig) -> int:
    k = args.k
    closed = delta_closed_form(k)
    rec = delta_recursion(k)
    res = norm_linear_resultant(k)
    agree = (-1) ** k * closed == rec == res
    _emit(
        {
            "closed_form": str(closed),
            "determinant_recursion": str(rec),
            "k": k,
            "resultant": str(res),
            "three_way_agreement": agree,
        },
        config,
    )
    return EXIT_OK if agree else EXIT_VERIFICATION_FAILED


def _cmd_scan_mod25(args, config: CliConfig) -> int:
    scan = mod25_scan(args.k_lo, args.k_hi)
    flagged = mod25_flagged(scan)
    if args.plot:
        from .plots import plot_mod25

        plot_mod25(scan, args.plot)
    if config.output_format == "csv":
        rows = [["k", "residue_mod_25"]] + [[str(k), str(r)] for k, r in scan]
        sys.stdout.write(csv_dumps(rows))
    else:
        _emit(
            {
                "flagged": flagged,
                "k_hi": args.k_hi,
                "k_lo": args.k_lo,
                "residues": [[k, r] for k, r in scan],
            },
            config,
        )
    return EXIT_OK if not flagged else EXIT_VERIFICATION_FAILED


def _cmd_v5_check(args, config: CliConfig) -> int:
    results = []
    ok = True
    for k in args.k:
        v_delta = padic_val(5, delta_closed_form(k))
        v_km1 = padic_val(5, k - 1)
        match = v_delta == v_km1
        ok = ok and match
        results.append(
            {"k": k, "match": match, "v5_delta": v_delta, "v5_k_minus_1": v_km1}
        )
    _emit({"ok": ok, "results": results}, config)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def _cmd_minpoly(args, config: CliConfig) -> int:
    prec = config.precision_bits
    f = char_poly(args.k)
    if args.d is not None:
        poly = window_coefficient_minpoly(args.k, args.d)
        value = window_coefficient(args.k, args.d, prec)
        from .intpoly import certify_irreducible

        certify_irreducible(poly)
    else:
        if args.num is None or args.den is None:
            raise ValueError("provide either --d or both --num and --den")
        dom = all_roots(args.k, prec).dominant
        num_v = args.num.eval_ball(ComplexBall.from_real(dom))
        den_v = args.den.eval_ball(ComplexBall.from_real(dom))
        quotient = num_v / den_v
        poly = minpoly_of_quotient(f, args.num, args.den, quotient)
        value = quotient.real_ball()
    _emit(
        {
            "coefficients": poly.to_json(),
            "display": str(poly),
            "k": args.k,
            "value": ball_to_json(value),
        },
        config,
    )
    return EXIT_OK


def _cmd_height(args, config: CliConfig) -> int:
    h = weil_height(args.poly.primitive(), config.precision_bits)
    _emit({"height": ball_to_json(h), "poly": args.poly.to_json()}, config)
    return EXIT_OK


def _cmd_matveev(args, config: CliConfig) -> int:
    prec = config.precision_bits
    report = derive_bounds(args.k, args.d, prec)
    ell = 2 * args.k
    c_const = matveev_C(4, ell, prec)
    poly_c3 = window_coefficient_minpoly(args.k, args.d)
    poly_phi = IntPolynomial([-1, -1, 1])
    poly_s5 = IntPolynomial([-5, 0, 1])
    dom = all_roots(args.k, prec).dominant
    five_sqrt = RealBall.exact_int(5, prec).sqrt()
    phi = (RealBall.exact_int(1, prec) + five_sqrt) / 2
    gammas = (
        Gamma(poly_c3, ComplexBall.from_real(report.c3), weil_height(poly_c3, prec)),
        Gamma(char_poly(args.k), ComplexBall.from_real(dom), weil_height(char_poly(args.k), prec)),
        Gamma(poly_phi, ComplexBall.from_real(phi), weil_height(poly_phi, prec)),
        Gamma(poly_s5, ComplexBall.from_real(five_sqrt), weil_height(poly_s5, prec)),
    )
    a_values = [matveev_A(g.height, log_abs(g.value), ell) for g in gammas]
    _emit(
        {
            "A": [ball_to_json(a) for a in a_values],
            "C": ball_to_json(c_const),
            "d": args.d,
            "field_degree": ell,
            "k": args.k,
            "lambda": ball_to_json(report.lam),
        },
        config,
    )
    return EXIT_OK


def _cmd_bound(args, config: CliConfig) -> int:
    report = derive_bounds(args.k, args.d, config.precision_bits)
    _emit(bound_report_to_json(report), config)
    return EXIT_OK


def _cmd_threshold(args, config: CliConfig) -> int:
    prec = config.precision_bits
    a = RealBall.from_decimal(args.a, prec)
    b = RealBall.from_decimal(args.b, prec)
    c = RealBall.from_decimal(args.c, prec)
    n = threshold_search(a, b, c, refine=args.refine)
    _emit({"a": args.a, "b": args.b, "c": args.c, "threshold": str(n)}, config)
    return EXIT_OK


def _cmd_search(args, config: CliConfig) -> int:
    report = find_solutions(
        args.k, args.d, args.n_max, partitions=args.partitions, threads=config.threads
    )
    if args.plot:
        from .plots import plot_search

        plot_search(report, args.plot)
    if config.output_format == "csv":
        sys.stdout.write(csv_dumps(report.csv_rows()))
    else:
        _emit(report.to_json_dict(), config)
    return EXIT_OK


def _cmd_intersect(args, config: CliConfig) -> int:
    hits = intersection_scan(args.k, args.n_max)
    _emit({"k": args.k, "n_max": args.n_max, "values": [str(v) for v in sorted(hits)]}, config)
    return EXIT_OK


def _cmd_verify_k2(args, config: CliConfig) -> int:
    report = verify_prop_k2(args.d_max, args.n_max)
    _emit(
        {
            "characterization_failures": list(report.characterization_failures),
            "checked": report.checked,
            "d_max": report.d_max,
            "n_max": report.n_max,
            "ok": report.ok,
            "sandwich_failures": list(report.sandwich_failures),
        },
        config,
    )
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def _cmd_verify_growth(args, config: CliConfig) -> int:
    report = verify_growth(args.k, args.n_max, config.precision_bits)
    if args.plot:
        from .plots import plot_growth

        plot_growth(report, args.plot)
    _emit(
        {
            "k": report.k,
            "lower_failures": list(report.lower_failures),
            "n_max": report.n_max,
            "ok": report.ok,
            "power_of_two_failures": list(report.power_of_two_failures),
            "upper_failures": list(report.upper_failures),
        },
        config,
    )
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def _cmd_repro(args, config: CliConfig) -> int:
    report = reproduce_example_3_4(config.precision_bits)
    if args.plot_dir:
        os.makedirs(args.plot_dir, exist_ok=True)
        from .plots import plot_growth, plot_search

        plot_search(find_solutions(3, 1, 500), os.path.join(args.plot_dir, "solutions_k3_d1.png"))
        plot_growth(
            verify_growth(3, 200, config.precision_bits),
            os.path.join(args.plot_dir, "growth_k3.png"),
        )
    _emit(report.to_json_dict(), config)
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


_HANDLERS = {
    "seq": _cmd_seq,
    "roots": _cmd_roots,
    "binet-check": _cmd_binet_check,
    "norm": _cmd_norm,
    "scan-mod25": _cmd_scan_mod25,
    "v5-check": _cmd_v5_check,
    "minpoly": _cmd_minpoly,
    "height": _cmd_height,
    "matveev": _cmd_matveev,
    "bound": _cmd_bound,
    "threshold": _cmd_threshold,
    "search": _cmd_search,
    "intersect": _cmd_intersect,
    "verify-k2": _cmd_verify_k2,
    "verify-growth": _cmd_verify_growth,
    "repro-example-3-4": _cmd_repro,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        precision = args.precision if args.precision is not None else _default_precision()
        config = CliConfig(
            precision_bits=precision, output_format=args.format, threads=args.threads
        )
        return _HANDLERS[args.command](args, config)
    except PrecisionError as exc:
        print(f"insufficient precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
