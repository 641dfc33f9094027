"""Command-line front end: ``catsl2 {t-matrix, verify, theta}``.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import morclass, uqsl2
from .homalg import theta_hw_complex
from .qcore import LaurentPoly
from .verify import SUITES, Bounds, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- subcommands -----------------------------------------------------------------------

def cmd_t_matrix(args) -> tuple[int, str]:
    if args.N is None or args.lam is None:
        raise UsageError("t-matrix needs --N and --lambda")
    try:
        op = uqsl2.t_matrix(args.N, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        return EXIT_OK, _dump(op.to_json())
    lines = [f"t: V({args.N})[{args.lam}] -> V({args.N})[{-args.lam}]"]
    lines += ["  ".join(repr(e) for e in row) for row in op.matrix]
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    bounds = Bounds(
        n=args.n if args.n is not None else Bounds.n,
        max_deg=args.max_deg if args.max_deg is not None else Bounds.max_deg,
        N=args.N if args.N is not None else Bounds.N,
        max_n=args.max_n if args.max_n is not None else Bounds.max_n,
        seed=args.seed,
        backend=args.backend,
    )
    if min(bounds.n, bounds.N, bounds.max_n) < 0 or bounds.max_deg < 0:
        raise UsageError("bounds must be nonnegative")
    try:
        report = run_suite(args.suite, bounds, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    code = EXIT_OK if report["passed"] else EXIT_FAIL
    if args.format == "json":
        return code, _dump(report)
    lines = [f"suite={report['suite']} seed={report['seed']}"]
    for r in report["rows"]:
        mark = "PASS" if r["passed"] else "FAIL"
        key = ":".join(str(k) for k in r["key"])
        lines.append(f"{mark}  {r['suite']:<10} {key:<28} {r['anchor']}")
    lines.append(f"{report['total'] - report['failed']}/{report['total']} passed")
    for rep in report["reproducers"]:
        lines.append("reproduce: " + json.dumps(rep, sort_keys=True))
    return code, "\n".join(lines)


def theta_report(N: int, k: int) -> dict:
    if N < 0 or k < 0 or 2 * k > N:
        raise UsageError(f"need 0 <= k <= N/2, got N={N}, k={k}")
    lam = N - 2 * k
    terms = []
    for s, (sign, c) in enumerate(morclass.theta_terms(N, lam)):
        terms.append({"s": s, "sign": sign, "class": c.to_json()})
    hw = []
    for p in range(N // 2 + 1):
        h = theta_hw_complex(N, N - 2 * p, p)
        hw.append({"p": p, "lambda": N - 2 * p, "exact": h.exact,
                   "sigma": h.sigma, "extension_degree": h.extension_degree})
    return {
        "N": N,
        "k": k,
        "lambda": lam,
        "terms": terms,
        "term_count": len(terms),
        "euler_matches_t": morclass.euler_matches_t(N, lam),
        "hw_complexes": hw,
    }


def cmd_theta(args) -> tuple[int, str]:
    if args.N is None or args.k is None:
        raise UsageError("theta needs --N and --k")
    rep = theta_report(args.N, args.k)
    ok = rep["euler_matches_t"] and all(h["exact"] for h in rep["hw_complexes"])
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return code, _dump(rep)
    lines = [f"Theta for N={rep['N']}, lambda={rep['lambda']}: {rep['term_count']} terms"]
    for t in rep["terms"]:
        syms = " + ".join(f"({_fmt_term(x['poly'])}) F^({x['a']})E^({x['b']})" for x in t["class"]["terms"])
        lines.append(f"  s={t['s']} [{t['sign']:+d}]  {syms}")
    lines.append(f"Euler characteristic matches t: {rep['euler_matches_t']}")
    for h in rep["hw_complexes"]:
        lines.append(f"  hw complex p={h['p']} lambda={h['lambda']}: exact={h['exact']}")
    return code, "\n".join(lines)


def _fmt_term(poly_json) -> str:
    return repr(LaurentPoly.from_json(poly_json))


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int)
    common.add_argument("--lambda", dest="lam", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--max-deg", type=int)
    common.add_argument("--max-n", type=int)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, help="worker processes (default: $CATSL2_JOBS or 1)")

    parser = argparse.ArgumentParser(prog="catsl2", description="Exact checks for the sl2 reflection functor.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("t-matrix", parents=[common], help="t-block on the weight-lambda space of V(N)")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--backend", choices=("numba", "numpy"))
    sub.add_parser("theta", parents=[common], help="Theta terms and their checks for lambda = N - 2k")
    return parser


COMMANDS = {"t-matrix": cmd_t_matrix, "verify": cmd_verify, "theta": cmd_theta}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"catsl2: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
