"""Command-line front end.

Exit status: 0 on success, 1 on usage or I/O errors, 2 when a computed
quantity violates one of the proven inequalities (which can only mean a bug).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

import numpy as np

from . import bounds, extremal, lemma_opt, matio, neardiag, sampling, spectral
from .matcore import Kind, TraceNormError, entrywise_l1, entrywise_max

log = logging.getLogger("tracenorm")

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2

FAMILIES = {
    "jn-minus-in": extremal.jn_minus_in,
    "ones": extremal.ones_matrix,
    "herm-extremal": extremal.herm_extremal,
    "e-matrix": extremal.e_matrix,
    "herm-dual-extremal": extremal.herm_dual_extremal,
    "block-identity": extremal.block_identity_example,
    "real-equality": lambda n: extremal.real_equality_family(np.repeat([1.0, -1.0], n // 2)),
}


class UsageError(TraceNormError):
    pass


def _emit(report: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        for key, val in report.items():
            out.write(f"{key}: {val}\n")


def _load(args):
    if not args.file:
        raise UsageError("--file is required")
    try:
        return matio.read_matrix(args.file)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.file}") from None


def cmd_gamma(args):
    g = bounds.gamma(args.n)
    return EXIT_OK, {
        "n": args.n,
        "gamma": g.by_sum,
        "gamma_closed_form": g.by_closed_form,
        "limit": 4 / math.pi,
        "real_bound": bounds.real_bound_constant(args.n),
        "hermitian_bound": bounds.hermitian_bound_constant(args.n),
    }


def cmd_verify(args):
    if args.file:
        A = _load(args)
        kind = Kind.coerce(args.kind) if args.kind else A.kind
        check = bounds.check_real_bound if kind is Kind.REAL else bounds.check_hermitian_bound
        report = check(A)
        status = EXIT_OK if report.passed else EXIT_VIOLATION
        return status, report.as_dict()

    if args.n is None:
        raise UsageError("verify needs --file or --n")
    kind = Kind.coerce(args.kind or "real")
    dist = args.distribution or ("unit_disk" if kind is Kind.HERMITIAN else "gaussian")
    stack = sampling.random_matrices(kind, args.n, args.count, dist, True, args.seed)
    ratios = bounds.bound_ratios(stack)
    bound = bounds.real_bound_constant(args.n) if kind is Kind.REAL else bounds.hermitian_bound_constant(args.n)
    slack = ratios - bound
    failures = int(np.count_nonzero(slack < -args.tolerance))
    report = {
        "kind": kind.value,
        "n": args.n,
        "count": args.count,
        "distribution": dist,
        "bound": bound,
        "min_ratio": float(ratios.min()),
        "min_slack": float(slack.min()),
        "failures": failures,
    }
    return (EXIT_VIOLATION if failures else EXIT_OK), report


def cmd_construct(args):
    A = FAMILIES[args.family](args.n)
    return EXIT_OK, A


def cmd_random(args):
    kind = Kind.coerce(args.kind or "real")
    A = sampling.random_matrix(kind, args.n, args.distribution, not args.keep_diag, args.seed)
    return EXIT_OK, A


def cmd_eig(args):
    A = _load(args)
    dec = spectral.eigh(A)
    return EXIT_OK, {
        "n": A.n,
        "kind": A.kind.value,
        "eigenvalues": dec.eigenvalues.tolist(),
        "trace_norm": float(np.abs(dec.eigenvalues).sum()),
        "spectral_norm": float(np.abs(dec.eigenvalues).max()),
        "entrywise_l1": entrywise_l1(A),
        "entrywise_max": entrywise_max(A),
    }


def cmd_nearest_diag(args):
    A = _load(args)
    opts = neardiag.SolverOptions(
        max_iters=args.max_iters,
        tol=args.tolerance,
        restarts=args.restarts,
        step_rule=args.step_rule,
        seed=args.seed,
    )
    res = neardiag.solve(A, opts)
    bound = neardiag.theorem_bound(A)
    within = res.value <= bound + 1e-6
    return (EXIT_OK if within else EXIT_VIOLATION), {
        "n": A.n,
        "kind": A.kind.value,
        "value": res.value,
        "lower_bound": res.lower_bound,
        "gap": res.gap,
        "d_star": res.d_star.tolist(),
        "theorem_bound": bound,
        "within_theorem": bool(within),
        "converged": res.converged,
    }


def cmd_lemma_max(args):
    res = lemma_opt.alternating_maximize(args.n, restarts=args.restarts, rng_seed=args.seed)
    g = bounds.gamma(args.n).value
    status = EXIT_OK if res.value <= g + 1e-9 else EXIT_VIOLATION
    return status, {
        "n": args.n,
        "value": res.value,
        "gamma_n": g,
        "gap": g - res.value,
        "structure_match": res.structure_match,
        "restarts": res.restarts_used,
    }


def cmd_seidel_min(args):
    value, argmin = bounds.seidel_min_energy(args.n)
    expected = 2.0 * args.n - 2.0
    status = EXIT_OK if abs(value - expected) <= 1e-8 else EXIT_VIOLATION
    return status, {
        "n": args.n,
        "min_energy": value,
        "expected": expected,
        "argmin": argmin.entries.real.tolist(),
        "argmin_switching_equivalent_to_jn_minus_in": bounds.is_switching_equivalent(
            argmin, extremal.jn_minus_in(args.n)
        ),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=lambda s: int(s, 0), default=0, help="64-bit RNG seed")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="tracenorm",
        description="Trace-norm bounds for zero-diagonal symmetric and Hermitian matrices.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common], help="the constant gamma_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", parents=[common], help="check a matrix file or fuzz random ones")
    p.add_argument("--file")
    p.add_argument("--kind", choices=("real", "hermitian"))
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--distribution", choices=sampling.DISTRIBUTIONS)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="emit an extremal matrix as JSON")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("random", parents=[common], help="emit a seeded random matrix as JSON")
    p.add_argument("--kind", choices=("real", "hermitian"), default="real")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--distribution", choices=sampling.DISTRIBUTIONS, default="gaussian")
    p.add_argument("--keep-diag", action="store_true", help="draw the diagonal too")
    p.add_argument("--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("eig", parents=[common], help="spectrum and norms of a matrix file")
    p.add_argument("--file")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("nearest-diag", parents=[common], help="min over diagonal D of ||A - D||")
    p.add_argument("--file")
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--tolerance", type=float, default=1e-7)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--step-rule", choices=("polyak_with_lb", "diminishing"), default="polyak_with_lb")
    p.set_defaults(func=cmd_nearest_diag)

    p = sub.add_parser("lemma-max", parents=[common], help="maximise F over simplex x circle^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=32)
    p.set_defaults(func=cmd_lemma_max)

    p = sub.add_parser("seidel-min", parents=[common], help="minimum Seidel energy by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_seidel_min)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    log.propagate = False
    try:
        return _run(args)
    finally:
        log.removeHandler(handler)


def _run(args) -> int:
    log.debug("running %s", args.command)
    try:
        status, result = args.func(args)
    except (TraceNormError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR

    if isinstance(result, dict):
        _emit(result, args.format)
    elif getattr(args, "output", None):
        matio.write_matrix(result, args.output)
    else:
        sys.stdout.write(matio.dumps(result))
    if status == EXIT_VIOLATION:
        log.error("a proven inequality was violated; this indicates a bug")
    return status

if __name__ == "__main__":
    sys.exit(main())
