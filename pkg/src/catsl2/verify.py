"""Verification suites.

Each suite expands into independent cases. A case names a top-level check
function plus keyword parameters, so it can be shipped to a worker process.
Rows come back as plain dicts and are sorted by case key before reporting.
"""
from __future__ import annotations

import os
import random
from math import comb
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _accel, geomdim, homvanish, morclass, qcore, uqsl2
from . import nilhecke as nh
from .homalg import (
    bridge_shift,
    build_koszul,
    build_modified_koszul,
    gaussian_convolve,
    homology_all,
    is_exact,
    random_qcomplex,
    scalar_homology_dims,
    theta_hw_complex,
    theta_shift,
    top_class_degree,
)

SUITES = ("qcore", "nilhecke", "uqsl2", "morclass", "homalg", "homvanish", "geomdim")


@dataclass(frozen=True)
class Bounds:
    n: int = 5            # nil-Hecke strands
    max_deg: int = 8      # monomial degree bound for operator identities
    N: int = 12           # highest weight for module-level checks
    max_n: int = 30       # homvanish sweep bound
    seed: int = 0         # base seed for randomized complexes
    backend: str | None = None


@dataclass(frozen=True)
class Case:
    suite: str
    key: tuple
    anchor: str
    check: str
    params: dict = field(default_factory=dict, hash=False, compare=False)


# -- check functions -----------------------------------------------------------------
# each returns (passed, detail)

def _qcore_telescoping(max_s: int, max_lam: int):
    bad = []
    for s in range(max_s + 1):
        for lam in range(max_lam + 1):
            lhs = qcore.qint(lam + s + 1).shift(s) - qcore.qint(lam + s + 2).shift(s + 1)
            if lhs != qcore.LaurentPoly.monomial(2 * s + lam + 2, -1):
                bad.append([s, lam])
    return not bad, {"cases": (max_s + 1) * (max_lam + 1), "failures": bad[:5]}


def _qcore_binomials(max_n: int):
    count = 0
    for n in range(max_n + 1):
        for k in range(n + 1):
            b = qcore.qbinom(n, k)
            ok = b == b.bar() and b == qcore.qbinom(n, n - k)
            ok = ok and b.eval_at_one() == comb(n, k)
            if 0 < k < n:
                pascal = qcore.qbinom(n - 1, k - 1).shift(n - k) + qcore.qbinom(n - 1, k).shift(-k)
                ok = ok and b == pascal
            if not ok:
                return False, {"n": n, "k": k}
            count += 1
    return True, {"cases": count}


def _nh_relations(n: int, max_deg: int, backend):
    table = nh.relation_table(n, max_deg, backend)
    return all(table.values()), {"relations": table}


def _nh_staircase(n: int, backend):
    sign = nh.staircase_idempotent_check(n, backend=backend)
    return sign in (1, -1), {"sign": sign}


def _nh_reduced_words(n: int):
    return nh.reduced_word_independence(n), {}


def _nh_symmetric(n: int, sym_deg: int):
    a = nh.sym2_checks(n, sym_deg)
    b = nh.w0_kills_pair_symmetric(n, min(sym_deg, 4)) if n >= 2 else True
    return a and b, {"commutes": a, "w0_kills": b}


def _uq_module(N: int):
    checks = {
        "commutator": uqsl2.commutator_check(N),
        "divided_commutation": uqsl2.lusztig_commutation_check(N),
        "t_intertwines": uqsl2.t_intertwines_check(N),
        "t_blocks_unit_det": uqsl2.t_blocks_invertible(N),
    }
    return all(checks.values()), checks


def _uq_highest(N: int):
    rows = []
    ok = True
    for p in range((N // 2) + 1):
        lam = N - 2 * p
        sign, exp = uqsl2.highest_weight_image(N, p)
        good = sign == (-1) ** p and exp == p * (lam + p + 1)
        ok = ok and good and uqsl2.lowest_from_highest_check(N, lam)
        rows.append([p, sign, exp])
    return ok, {"images": rows}


def _mc_euler(N: int):
    bad = [lam for lam in range(N % 2, N + 1, 2) if not morclass.euler_matches_t(N, lam)]
    return not bad, {"failures": bad}


def _mc_oracle(N: int, max_len: int, max_r: int):
    cases, failures = morclass.oracle_sweep(N, max_len, max_r)
    return failures == 0, {"cases": cases, "failures": failures}


def _ha_modified_koszul(lam: int, p: int):
    c = build_modified_koszul(lam, p)
    nz = {i: h.dims for i, h in homology_all(c).items() if not h.is_zero()}
    want = {p: {top_class_degree(lam, p): 1}}
    return c.d_squared_zero() and nz == want, {"homology": {str(k): {str(d): m for d, m in v.items()} for k, v in nz.items()}}


def _ha_koszul(dim_m: int, seed: int):
    rng = random.Random(seed)
    degrees = sorted(rng.randint(0, 4) for _ in range(dim_m))
    ok = all(is_exact(build_koszul(degrees, l)) for l in range(1, dim_m + 1))
    return ok, {"degrees": degrees}


def _ha_convolve(start: int, stop: int, exact: bool):
    bad = []
    for seed in range(start, stop):
        qc = random_qcomplex(seed, exact=exact)
        rep = gaussian_convolve(qc)
        if exact:
            good = rep.final_zero
        else:
            good = rep.final_dims() == scalar_homology_dims(qc)
        if not (good and rep.triangle_relation_holds(qc)):
            bad.append(seed)
    return not bad, {"seeds": [start, stop], "failing_seeds": bad}


def _ha_hw(lam: int, p: int):
    h = theta_hw_complex(lam + 2 * p, lam, p)
    ok = h.exact and h.extension_degree == p * (lam + p + 1)
    return ok, {"sigma": h.sigma, "extension_degree": h.extension_degree}


def _ha_bridge(lam: int, p: int):
    e = bridge_shift(lam, p)
    sigma = theta_shift(lam, p)
    return e == sigma, {"shift": e, "expected": sigma}


def _hv_sweep(max_n: int, backend):
    out = homvanish.gap_sweep(max_n, backend)
    ok = out["cond1_failures"] == 0 and out["cond2_failures"] == 0
    return ok, out


def _hv_rows(max_n: int):
    total, bad = 0, []
    for N in range(max_n + 1):
        for lam in range(N % 2, N + 1, 2):
            c = homvanish.check_convolution_conditions(N, lam)
            total += len(c.rows)
            if not (c.passed and c.closed_form_agrees):
                bad.append([N, lam])
    return not bad, {"cases": total, "failures": bad}


def _hv_discriminants(max_k: int):
    ok = all(homvanish.discriminants(k)[0] < 0 for k in range(2, max_k + 1))
    ok = ok and all(homvanish.discriminants(k)[1] < 0 for k in range(3, max_k + 1))
    ok = ok and all(homvanish.discriminants(k) == (-4 * k * k + 8, -4 * k * k + 16) for k in range(max_k + 1))
    return ok, {"k_max": max_k}


def _hv_no_f_part(bound: int):
    bad = []
    for lam in range(-bound, bound + 1):
        for r in range(bound + 1):
            for a in range(1, bound + 1):
                if homvanish.no_f_part_contradiction(lam, r, a) != (lam + r + a > 0):
                    bad.append([lam, r, a])
    return not bad, {"failures": bad[:5]}


def _gd_dims(max_n: int):
    bad = []
    for N in range(max_n + 1):
        for k2 in range(N + 1):
            for k1 in range(k2 + 1):
                if geomdim.dim_correspondence(k1, k2, N) != geomdim.half_sum(k1, k2, N):
                    bad.append([k1, k2, N])
    return not bad, {"failures": bad[:5]}


def _gd_ledger(max_half: int):
    verdicts = {"symmetric": 0, "asymmetric": 0, "cases": 0}
    ok = True
    for N in range(2 * max_half + 2):
        for k in range(min(N // 2, max_half) + 1):
            for s in range(k + 1):
                res = geomdim.canonical_ledger(N, k, s)
                ok = ok and res["det V'"] == 0 and res["det V~"] == 0 and res["det C^N"] == 0
                v = geomdim.ledger_verdict(N, k, s)
                verdicts["cases"] += 1
                verdicts["symmetric"] += v.matches_symmetric
                verdicts["asymmetric"] += v.matches_asymmetric
    return ok, {"matches": verdicts}


CHECKS = {f.__name__.lstrip("_"): f for f in (
    _qcore_telescoping, _qcore_binomials,
    _nh_relations, _nh_staircase, _nh_reduced_words, _nh_symmetric,
    _uq_module, _uq_highest,
    _mc_euler, _mc_oracle,
    _ha_modified_koszul, _ha_koszul, _ha_convolve, _ha_hw, _ha_bridge,
    _hv_sweep, _hv_rows, _hv_discriminants, _hv_no_f_part,
    _gd_dims, _gd_ledger,
)}


# -- case expansion ----------------------------------------------------------------

def _cases_qcore(b: Bounds):
    yield Case("qcore", ("telescoping",), "q^s[lam+s+1] - q^(s+1)[lam+s+2] = -q^(2s+lam+2)",
               "qcore_telescoping", {"max_s": 50, "max_lam": 50})
    yield Case("qcore", ("binomials",), "quantum binomials: bar-invariant, symmetric, Pascal rule, q=1 limit",
               "qcore_binomials", {"max_n": 20})


def _cases_nilhecke(b: Bounds):
    for n in range(1, b.n + 1):
        yield Case("nilhecke", ("relations", n), "nil affine Hecke relations on polynomials",
                   "nh_relations", {"n": n, "max_deg": b.max_deg, "backend": b.backend})
    for n in range(1, min(b.n, 4) + 1):
        yield Case("nilhecke", ("staircase", n), "t_w0 x^delta t_w0 = +-t_w0",
                   "nh_staircase", {"n": n, "backend": b.backend})
        yield Case("nilhecke", ("reduced_words", n), "t_w independent of reduced word",
                   "nh_reduced_words", {"n": n})
        yield Case("nilhecke", ("symmetric", n), "t_i f = f t_i and t_w0 f t_w0 = 0 for f symmetric in x_i, x_i+1",
                   "nh_symmetric", {"n": n, "sym_deg": 6})


def _cases_uqsl2(b: Bounds):
    for N in range(b.N + 1):
        yield Case("uqsl2", ("module", N), "t f = -q^2 k^-1 e t; t-blocks have unit determinant",
                   "uq_module", {"N": N})
        yield Case("uqsl2", ("highest", N), "t f^(p) b0 = (-1)^p q^(p(lam+p+1)) f^(lam+p) b0",
                   "uq_highest", {"N": N})


def _cases_morclass(b: Bounds):
    for N in range(b.N + 1):
        yield Case("morclass", ("euler", N), "sum_s (-1)^s q^s [Theta_s] equals the t-block",
                   "mc_euler", {"N": N})
    for N in range(min(b.N, 10) + 1):
        yield Case("morclass", ("oracle", N), "normal form evaluates to the composed matrices",
                   "mc_oracle", {"N": N, "max_len": 4, "max_r": 3})


def _cases_homalg(b: Bounds):
    for lam in range(11):
        for p in range((10 - lam) // 2 + 1):
            yield Case("homalg", ("modified_koszul", lam, p),
                       "modified Koszul homology is one class in degree 2(p+1)(lam+p) at position p",
                       "ha_modified_koszul", {"lam": lam, "p": p})
            yield Case("homalg", ("hw_complex", lam, p),
                       "extended highest-weight complex is exact",
                       "ha_hw", {"lam": lam, "p": p})
    for lam in range(9):
        for p in range((8 - lam) // 2 + 1):
            yield Case("homalg", ("bridge", lam, p),
                       "graded dims of C'_s match Theta_s F^(p) up to q^(p(lam+p-1)+2(lam+p))",
                       "ha_bridge", {"lam": lam, "p": p})
    for m in range(1, 6):
        for rep in range(4):
            yield Case("homalg", ("koszul", m, rep), "Koszul complexes with l >= 1 are exact",
                       "ha_koszul", {"dim_m": m, "seed": b.seed + 100 * m + rep})
    for block in range(8):
        start = b.seed + 25 * block
        yield Case("homalg", ("convolve_exact", block), "exact Q-decorated complexes reduce to zero",
                   "ha_convolve", {"start": start, "stop": start + 25, "exact": True})
    for block in range(4):
        start = b.seed + 10_000 + 25 * block
        yield Case("homalg", ("convolve_control", block), "non-exact controls reduce to their homology",
                   "ha_convolve", {"start": start, "stop": start + 25, "exact": False})


def _cases_homvanish(b: Bounds):
    backends = [b.backend] if b.backend else ["numpy"] + (["numba"] if _accel.HAVE_NUMBA and not _accel.numba_disabled() else [])
    for be in backends:
        yield Case("homvanish", ("sweep", be), "degree-gap inequalities for convolution uniqueness",
                   "hv_sweep", {"max_n": b.max_n, "backend": be})
    yield Case("homvanish", ("rows",), "degree-gap inequalities, per-case reports against the closed form",
               "hv_rows", {"max_n": b.max_n})
    yield Case("homvanish", ("discriminants",), "discriminants -4k^2+8 and -4k^2+16 are negative",
               "hv_discriminants", {"max_k": 50})
    yield Case("homvanish", ("no_f_part",), "degree bounds contradict exactly when lam+r+a > 0",
               "hv_no_f_part", {"bound": 15})


def _cases_geomdim(b: Bounds):
    yield Case("geomdim", ("dims",), "correspondence dimension equals half the summed cotangent dimensions",
               "gd_dims", {"max_n": 20})
    yield Case("geomdim", ("ledger",), "canonical bundle ledger cancels det V', det V~, det C^N",
               "gd_ledger", {"max_half": 10})


_EXPANDERS = {
    "qcore": _cases_qcore, "nilhecke": _cases_nilhecke, "uqsl2": _cases_uqsl2,
    "morclass": _cases_morclass, "homalg": _cases_homalg, "homvanish": _cases_homvanish,
    "geomdim": _cases_geomdim,
}


def cases_for(suite: str, bounds: Bounds) -> list[Case]:
    names = SUITES if suite == "all" else (suite,)
    for s in names:
        if s not in _EXPANDERS:
            raise ValueError(f"unknown suite {s!r}")
    return [c for s in names for c in _EXPANDERS[s](bounds)]


def run_case(case: Case) -> dict:
    try:
        ok, detail = CHECKS[case.check](**case.params)
        error = None
    except Exception as exc:  # a crash is a failed check, reported with its reproducer
        ok, detail, error = False, {}, f"{type(exc).__name__}: {exc}"
    row = {
        "suite": case.suite,
        "key": list(case.key),
        "anchor": case.anchor,
        "params": case.params,
        "passed": bool(ok),
        "detail": detail,
    }
    if error:
        row["error"] = error
    return row


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get("CATSL2_JOBS")
        jobs = int(env) if env else 1
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    return jobs


def _sort_key(row: dict):
    return SUITES.index(row["suite"]), [(0, k, "") if isinstance(k, int) else (1, 0, str(k)) for k in row["key"]]


def run_suite(suite: str, bounds: Bounds | None = None, jobs: int | None = None) -> dict:
    bounds = bounds or Bounds()
    cases = cases_for(suite, bounds)
    jobs = resolve_jobs(jobs)
    if jobs == 1:
        rows = [run_case(c) for c in cases]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_case, cases))
    rows.sort(key=_sort_key)
    failed = [r for r in rows if not r["passed"]]
    return {
        "suite": suite,
        "seed": bounds.seed,
        "passed": not failed,
        "total": len(rows),
        "failed": len(failed),
        "rows": rows,
        "reproducers": [{"suite": r["suite"], "check": r["key"][0], "params": r["params"]} for r in failed],
    }
