"""Invariant battery behind ``rotquad verify``."""

from dataclasses import dataclass, replace

import numpy as np

from .chebyshev import verify_proposition
from .gauss_sum import apply, build_rule, direct_sum
from .gram import build_basis, equidistant_nodes, evaluate
from .oscillatory import decompose
from .roots import gram_roots_report
from .testbed import paper_problem


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _rules(grid, perturb):
    for N, n in grid:
        rule = build_rule(N, n)
        if perturb:
            rule = replace(rule, weights=rule.weights * (1.0 + perturb))
        yield N, n, rule


def check_orthonormality(Ns):
    worst = 0.0
    for N in Ns:
        m = min(12, N - 1)
        basis = build_basis(N, m)
        x = equidistant_nodes(N)
        P = np.array([evaluate(basis, k, x) for k in range(m + 1)])
        worst = max(worst, np.max(np.abs(P @ P.T - np.eye(m + 1))))
    return Check("orthonormality", worst <= 1e-9, f"max |gram - I| = {worst:.2e}")


def check_rules(Ns, polys_per_case, perturb, seed=2024):
    rng = np.random.default_rng(seed)
    grid = [(N, n) for N in Ns for n in range(1, min(10, N - 1) + 1)]
    worst_exact = worst_sum = 0.0
    min_weight = np.inf
    for N, n, rule in _rules(grid, perturb):
        min_weight = min(min_weight, float(np.min(rule.weights)))
        worst_sum = max(worst_sum, abs(float(np.sum(rule.weights)) - 2.0))
        for _ in range(polys_per_case):
            P = np.polynomial.Polynomial(rng.uniform(-1.0, 1.0, 2 * n))
            exact = direct_sum(N, P)
            worst_exact = max(worst_exact, abs(apply(rule, P) - exact) / (1.0 + abs(exact)))
    return [
        Check("exactness", worst_exact <= 1e-10, f"max scaled error = {worst_exact:.2e}"),
        Check(
            "weights",
            min_weight > 0 and worst_sum <= 1e-12,
            f"min w = {min_weight:.3e}, max |sum w - 2| = {worst_sum:.2e}",
        ),
    ]


def check_roots(Ns):
    worst_sym = 0.0
    max_sweeps = 0
    ok = True
    for N in Ns:
        top = min(12, N - 1)
        basis = build_basis(N, top)
        previous = None
        for n in range(1, top + 1):
            report = gram_roots_report(basis, n)
            s = report.roots
            max_sweeps = max(max_sweeps, report.iterations)
            worst_sym = max(worst_sym, float(np.max(np.abs(s + s[::-1]))))
            ok &= bool(np.all(np.abs(s) < 1.0) and np.all(np.diff(s) > 0))
            if previous is not None:
                ok &= bool(np.all(s[:-1] < previous) and np.all(previous < s[1:]))
            previous = s
    passed = ok and worst_sym <= 1e-12 and max_sweeps <= 20
    return Check("roots", passed, f"max sweeps = {max_sweeps}, symmetry = {worst_sym:.1e}")


def proposition_battery(Ns, perturb=0.0):
    omega = 1e4
    inner = paper_problem(2).inner_closed_form
    functions = {
        "cubic": np.polynomial.Polynomial([0.3, -1.0, 0.5, 2.0]),
        "pole": lambda x: 1.0 / (2.0 + x),
        "exp": np.exp,
        "inner": lambda y: inner(y, omega),
    }
    grid = [(N, n) for N in Ns for n in range(1, min(8, N - 1) + 1)]
    failures = []
    count = 0
    for N, n, rule in _rules(grid, perturb):
        for name, G in functions.items():
            count += 1
            result = verify_proposition(G, N, n, rule=rule)
            if not result.satisfied:
                failures.append((name, N, n, result))
    return count, failures


def check_proposition(Ns, perturb):
    count, failures = proposition_battery(Ns, perturb)
    detail = f"{count - len(failures)}/{count} cases"
    if failures:
        name, N, n, r = failures[0]
        detail += f"; first failure {name} N={N} n={n}: {r.lhs:.2e} > 4 d = {r.rhs:.2e}"
    return Check("proposition", not failures, detail)


def run_battery(quick=False, perturb_weights=0.0):
    """Run every check; ``quick`` restricts to ``N <= 100``."""
    if quick:
        ortho, exact_N, root_N, prop_N, polys = (4, 10, 50), (5, 17, 64), (10, 100), (4, 10, 50), 10
    else:
        ortho = (4, 10, 50, 1000)
        exact_N = (5, 17, 64, 1001)
        root_N = (10, 10**4, 10**6)
        prop_N = (4, 10, 50, 1000, decompose(1e4).whole_periods)
        polys = 50
    checks = [check_orthonormality(ortho)]
    checks += check_rules(exact_N, polys, perturb_weights)
    checks.append(check_roots(root_N))
    checks.append(check_proposition(prop_N, perturb_weights))
    return checks
