"""
Command-line interface.

    rotquad rule --points N --order n
    rotquad sweep-n --problem paper:a=2 --omega 1e4 --order 2-8 --inner adaptive --inner fixed:35
    rotquad sweep-omega --problem paper:a=2 --order 4 --omega-list log:2:8:7 [--baseline]
    rotquad verify [--quick]

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error, 3 numerical non-convergence.
"""

import argparse
import csv
import math
import sys
import time

import numpy as np

from .errors import InvalidOrder, NoConvergence, RotquadError
from .gauss_sum import build_rule
from .inner import Adaptive, parse_inner_method
from .oscillatory import continuum_approx, decompose, integrate
from .testbed import parse_problem
from .verification import run_battery

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2, 3


def fmt(x):
    return f"{float(x):.17g}"


class UsageError(RotquadError):
    pass


def parse_orders(text):
    """``6``, ``2,4,6`` or ``2-8`` (inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty order list {text!r}")
    return out


def parse_omegas(text):
    """Comma list, ``log:<lo_exp>:<hi_exp>:<count>``, or ``twopi:<m1,m2,...>``."""
    text = text.strip()
    if text.startswith("log:"):
        lo, hi, count = text[4:].split(":")
        values = list(np.logspace(float(lo), float(hi), int(count)))
    elif text.startswith("twopi:"):
        values = [2.0 * math.pi * float(m) for m in text[6:].split(",") if m.strip()]
    else:
        values = [float(v) for v in text.split(",") if v.strip()]
    if not values:
        raise UsageError(f"empty omega list {text!r}")
    return [float(v) for v in values]


def _order_for(order, omega, clamp):
    N = decompose(omega).whole_periods
    if clamp and order > N - 1:
        order = N - 1
    if order < 1 or order >= N:
        raise InvalidOrder(
            f"order {order} needs 1 <= order <= N - 1 = {N - 1} at omega={omega:g} "
            "(use --clamp to cap it)"
        )
    return order


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def cmd_rule(args):
    rule = build_rule(args.points, args.order)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "node", "weight"])
    for k, (s, wk) in enumerate(zip(rule.nodes, rule.weights), start=1):
        w.writerow([k, fmt(s), fmt(wk)])
    print(f"rule N={args.points} n={args.order}: {rule.iterations} sweeps", file=sys.stderr)
    return EXIT_OK


def cmd_sweep_n(args):
    problem = parse_problem(args.problem)
    if problem.exact_value is None:
        raise UsageError(f"problem {problem.name} has no exact value")
    methods = [parse_inner_method(m) for m in (args.inner or ["adaptive"])]
    orders = parse_orders(args.order)
    exact = problem.exact_value(args.omega)
    orders = [_order_for(n, args.omega, args.clamp) for n in orders]
    stream, close = _open_out(args.out)
    try:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(["n", "inner_method", "abs_error", "f_evals", "wall_ns"])
        for n in orders:
            for method in methods:
                t0 = time.perf_counter_ns()
                r = integrate(problem.integrand, args.omega, n, method)
                wall = time.perf_counter_ns() - t0
                w.writerow([n, str(method), fmt(abs(r.value - exact)), r.evaluations, wall])
    finally:
        if close:
            stream.close()
    return EXIT_OK


def cmd_sweep_omega(args):
    problem = parse_problem(args.problem)
    if problem.exact_value is None:
        raise UsageError(f"problem {problem.name} has no exact value")
    method = parse_inner_method(args.inner[0]) if args.inner else Adaptive()
    omegas = parse_omegas(args.omega_list)
    order = parse_orders(args.order)
    if len(order) != 1:
        raise UsageError("sweep-omega takes a single --order")
    orders = [_order_for(order[0], omega, args.clamp) for omega in omegas]
    header = ["omega", "N", "alpha", "abs_error", "f_evals", "wall_ns"]
    if args.baseline:
        header.append("riemann_abs_error")
    stream, close = _open_out(args.out)
    try:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(header)
        for omega, n in zip(omegas, orders):
            d = decompose(omega)
            exact = problem.exact_value(omega)
            t0 = time.perf_counter_ns()
            r = integrate(problem.integrand, omega, n, method)
            wall = time.perf_counter_ns() - t0
            row = [fmt(omega), d.whole_periods, fmt(d.remainder_fraction),
                   fmt(abs(r.value - exact)), r.evaluations, wall]
            if args.baseline:
                b = continuum_approx(problem.integrand, omega, n, method)
                row.append(fmt(abs(b.value - exact)))
            w.writerow(row)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def cmd_verify(args):
    t0 = time.perf_counter()
    checks = run_battery(quick=args.quick, perturb_weights=args.perturb_weights)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<15} {c.detail}")
    ok = all(c.passed for c in checks)
    print(f"{'all checks passed' if ok else 'verification FAILED'} "
          f"({time.perf_counter() - t0:.2f} s)")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rotquad", description="Quadrature for integrals of a rapidly rotating phase."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rule", help="print Gauss summation nodes and weights as CSV")
    p.add_argument("-N", "--points", type=int, required=True)
    p.add_argument("-n", "--order", type=int, required=True)
    p.set_defaults(func=cmd_rule)

    def common(p, order_default):
        p.add_argument("--problem", default="paper:a=2",
                       help="paper:a=<v> | polyphase:<c0,c1,...> | const")
        p.add_argument("-n", "--order", default=order_default,
                       help="order, comma list or range like 2-8")
        p.add_argument("--inner", action="append",
                       help="adaptive[:abs_tol[:rel_tol]] or fixed:<order>; repeatable")
        p.add_argument("--out", help="output CSV path (default: stdout)")
        p.add_argument("--clamp", action="store_true", help="clamp order to N - 1")

    p = sub.add_parser("sweep-n", help="error versus number of summation nodes")
    common(p, "2-8")
    p.add_argument("--omega", type=float, default=1e4)
    p.set_defaults(func=cmd_sweep_n)

    p = sub.add_parser("sweep-omega", help="error versus frequency at fixed order")
    common(p, "4")
    p.add_argument("--omega-list", default="log:2:8:7",
                   help="comma list, log:<lo_exp>:<hi_exp>:<count> or twopi:<m1,m2,...>")
    p.add_argument("--baseline", action="store_true",
                   help="add the error of the slot-sum-as-integral baseline")
    p.set_defaults(func=cmd_sweep_omega)

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--quick", action="store_true", help="only N <= 100")
    p.add_argument("--perturb-weights", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (RotquadError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
