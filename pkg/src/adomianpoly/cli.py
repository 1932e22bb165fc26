"""Command-line front end: ``zpoly``, ``apoly``, ``count`` and ``pendulum``."""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .adm_series import PendulumProblem, evaluate_series, exact_sin_derivative, pendulum_solve
from .adomian import adomian, monomial_count, render
from .diophantine import count
from .reduced import format_fraction, reduced_polynomial

_ANGLE = re.compile(r"^\s*([+-]?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$")


class UsageError(Exception):
    pass


def parse_angle(text: str) -> float:
    """A float literal, or a multiple of pi such as ``pi/2``, ``-3pi/4``."""
    match = _ANGLE.match(text)
    if match:
        num = match.group(1)
        num = int(num) if num not in ("", "+", "-") else (-1 if num == "-" else 1)
        den = int(match.group(2) or 1)
        return num * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or multiple of pi: {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return format_fraction(c)
    if isinstance(c, int):
        return f"{c}/1"
    return _fmt_float(c)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adomianpoly", description="Reduced and Adomian polynomials, pendulum series")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zpoly", parents=[common], help="print the reduced polynomial Z_{m,k}")
    z.add_argument("m", type=int)
    z.add_argument("k", type=int)

    a = sub.add_parser("apoly", parents=[common], help="print the Adomian polynomial A_m")
    a.add_argument("m", type=int)

    c = sub.add_parser("count", parents=[common], help="number of monomials in Z_{m,k}, or per k in A_m")
    c.add_argument("m", type=int)
    c.add_argument("k", type=int, nargs="?")

    p = sub.add_parser("pendulum", parents=[common], help="series solution of u'' + b sin u = 0")
    p.add_argument("--a", type=parse_angle, required=True, help="initial angle, e.g. 1.0 or pi/2")
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--components", type=int, default=10, help="M, number of Adomian polynomials used")
    p.add_argument("--order", type=int, default=None, help="truncation degree N (default 2M)")
    p.add_argument("--domain", choices=("auto", "rational", "float"), default="auto")
    p.add_argument("--eval", type=_float_list, default=None, metavar="T1,T2,...", help="also print (t, u(t)) samples")
    return parser


def _zpoly(args) -> str:
    if args.m < 1:
        raise UsageError(f"m must be >= 1, got {args.m}")
    if args.k < 1 or args.k > args.m:
        raise UsageError(f"need 1 <= k <= m, got m={args.m}, k={args.k}")
    z = reduced_polynomial(args.m, args.k)
    return json.dumps(z.to_dict()) if args.format == "json" else z.render()


def _apoly(args) -> str:
    if args.m < 0:
        raise UsageError(f"m must be >= 0, got {args.m}")
    return render(adomian(args.m), args.format)


def _count(args) -> str:
    if args.m < 1:
        raise UsageError(f"m must be >= 1, got {args.m}")
    if args.k is not None:
        if args.k < 1 or args.k > args.m:
            raise UsageError(f"need 1 <= k <= m, got m={args.m}, k={args.k}")
        n = count(args.m, args.k)
        return json.dumps({"m": args.m, "k": args.k, "count": n}) if args.format == "json" else str(n)
    per_k = [count(args.m, k) for k in range(1, args.m + 1)]
    total = monomial_count(args.m)
    if args.format == "json":
        return json.dumps({"m": args.m, "counts": per_k, "total": total})
    lines = [f"k={k}: {n}" for k, n in enumerate(per_k, start=1)]
    lines.append(f"total: {total}")
    return "\n".join(lines)


def _pendulum(args) -> str:
    if args.b <= 0:
        raise UsageError(f"b must be > 0, got {args.b}")
    if args.components < 1:
        raise UsageError(f"components must be >= 1, got {args.components}")
    order = 2 * args.components if args.order is None else args.order
    if order < 2 * args.components:
        raise UsageError(f"need order N >= 2M = {2 * args.components}, got {order}")
    problem = PendulumProblem(args.a, args.b, args.components, order)

    domain = args.domain
    if domain == "auto":
        try:
            exact_sin_derivative(0, args.a)
            domain = "rational"
        except ValueError:
            domain = "float"
    try:
        series = pendulum_solve(problem, exact=(domain == "rational"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    coeffs = [_fmt_float(series[0])] + [_fmt_coeff(c) for c in series.coefficients[1:]]
    samples = None
    if args.eval is not None:
        samples = [(t, float(evaluate_series(series, t))) for t in args.eval]

    if args.format == "json":
        record = {
            "a": args.a,
            "b": args.b,
            "M": args.components,
            "N": order,
            "domain": domain,
            "coefficients": coeffs if domain == "rational" else [float(c) for c in series.coefficients],
        }
        if samples is not None:
            record["samples"] = [[t, u] for t, u in samples]
        return json.dumps(record)

    lines = [f"# u'' + b sin(u) = 0, a={_fmt_float(args.a)}, b={_fmt_float(args.b)}, M={args.components}, N={order}, domain={domain}"]
    lines += [f"t^{n}: {c}" for n, c in enumerate(coeffs)]
    if samples is not None:
        lines.append("# t u(t)")
        lines += [f"{_fmt_float(t)} {_fmt_float(u)}" for t, u in samples]
    return "\n".join(lines)


_COMMANDS = {"zpoly": _zpoly, "apoly": _apoly, "count": _count, "pendulum": _pendulum}


def run(argv=None, stdout=None) -> int:
    """Parse ``argv``, dispatch, write the result; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
