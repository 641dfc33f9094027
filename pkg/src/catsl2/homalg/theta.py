"""The extended highest-weight complex built from modified Koszul complexes,
plus the degree bookkeeping that ties it to the Theta terms."""
from __future__ import annotations

from dataclasses import dataclass

from ..morclass import f_part_multiplicity, theta_after_f
from ..nilhecke.poly import MultiPoly
from ..qcore import LaurentPoly, qbinom
from .complexes import (
    GradedComplex,
    GradedVS,
    build_modified_koszul,
    homology_all,
    top_class_degree,
    top_class_label,
)


def theta_shift(lam: int, p: int) -> int:
    """sigma = p(lam+p-1) + 2(lam+p), the shift identifying C'_s with Theta_s F^{(p)}."""
    return p * (lam + p - 1) + 2 * (lam + p)


def extension_degree(lam: int, p: int) -> int:
    """Degree of the extension copy k<-p(lam+p+1)>."""
    return p * (lam + p + 1)


def _check(N: int, lam: int, p: int):
    if lam < 0 or p < 0:
        raise ValueError("need lambda >= 0 and p >= 0")
    if N != lam + 2 * p:
        raise ValueError(f"need N = lambda + 2p, got N={N}, lambda={lam}, p={p}")


@dataclass
class HighestWeightComplex:
    complex: GradedComplex
    sigma: int
    extension_degree: int
    exact: bool


def theta_hw_complex(N: int, lam: int, p: int) -> HighestWeightComplex:
    """k<-p(lam+p+1)> -> C'_p<sigma> -> ... -> C'_0<sigma>, the first map hitting v^p (x) v."""
    _check(N, lam, p)
    ck = build_modified_koszul(lam, p)
    sigma = theta_shift(lam, p)
    objs = [o.shift(sigma) for o in ck.objects]
    ext = GradedVS(((("ext",), extension_degree(lam, p)),))
    top_idx = objs[p].labels().index(top_class_label(lam, p))
    diffs = dict(ck.diffs)
    diffs[p + 1] = {(top_idx, 0): 1}
    ext_complex = GradedComplex(objs + [ext], diffs, 0)
    exact = all(h.is_zero() for h in homology_all(ext_complex).values())
    return HighestWeightComplex(ext_complex, sigma, extension_degree(lam, p), exact)


def phi_degree(lam: int, p: int, s: int, f_deg: int) -> int:
    return f_deg - p * (lam + p - 1) - s * (s + 1) // 2


def g_degree(lam: int, p: int, f_deg: int) -> int:
    return f_deg - p * (lam + p - 1)


# -- C'_s basis <-> monomials m_a x_{s+1}^{b_1} ... x_p^{b_{p-s}} ----------------

def symwedge_image(label, lam: int, p: int) -> MultiPoly:
    """Send e^alpha (x) e_J ^ v to m_a(x_1..x_s) * prod_k x_{s+k}^{b_k}."""
    alpha, J = label
    v = lam + p
    a = [i for i, c in enumerate(alpha) for _ in range(c)]
    b = [j for j in J if j != v]
    s = len(a)
    if len(b) != p - s:
        raise ValueError("label is not in C'_s")
    from ..nilhecke.poly import monomial_symmetric

    head = monomial_symmetric(a, s) if s else MultiPoly.const(1, 0)
    tail_exps = tuple(b)
    # pad the symmetric part with the tail variables
    out = {}
    for e, c in head.terms.items():
        out[tuple(e) + tail_exps] = c
    return MultiPoly(p, out)


def w_monomials(lam: int, p: int, s: int) -> set[MultiPoly]:
    """The monomial labels of W_s enumerated directly."""
    from itertools import combinations, combinations_with_replacement

    from ..nilhecke.poly import monomial_symmetric

    out = set()
    for a in combinations_with_replacement(range(lam + p + 1), s):
        head = monomial_symmetric(list(a), s) if s else MultiPoly.const(1, 0)
        for b in combinations(range(lam + p), p - s):
            out.add(MultiPoly(p, {tuple(e) + tuple(b): c for e, c in head.terms.items()}))
    return out


def w_degree(f: MultiPoly) -> int:
    """Degree with deg x_i = 2 (f is homogeneous)."""
    degs = {2 * sum(e) for e in f.terms}
    assert len(degs) == 1
    return degs.pop()


def symwedge_bijection_check(lam: int, p: int) -> bool:
    """The basis map C'_s -> W_s is a bijection and preserves degree after the shifts.

    C'_s sits in degree d - sigma after <sigma>; the monomial side carries the
    shift <p(lam+p-1)>, so the check is d - sigma == w - p(lam+p-1).
    """
    ck = build_modified_koszul(lam, p)
    sigma = theta_shift(lam, p)
    for s in range(p + 1):
        basis = ck.obj(s).basis
        images = [symwedge_image(lab, lam, p) for lab, _ in basis]
        if len(set(images)) != len(images):
            return False
        if set(images) != w_monomials(lam, p, s):
            return False
        if len(images) != qbinom(lam + p + s, s).eval_at_one() * qbinom(lam + p, p - s).eval_at_one():
            return False
        for (lab, d), img in zip(basis, images):
            if d - sigma != w_degree(img) - p * (lam + p - 1):
                return False
    return True


# -- graded-dimension bridge ---------------------------------------------------------

@dataclass
class BridgeRow:
    s: int
    koszul: LaurentPoly
    f_part: LaurentPoly
    shift: int | None  # e with koszul = q^e * f_part, None when no such e


def _monomial_ratio(a: LaurentPoly, b: LaurentPoly) -> int | None:
    if a.is_zero() or b.is_zero():
        return None
    e = a.min_deg() - b.min_deg()
    return e if a == b.shift(e) else None


def graded_dim_bridge(lam: int, p: int) -> list[BridgeRow]:
    ck = build_modified_koszul(lam, p)
    N = lam + 2 * p
    rows = []
    for s in range(p + 1):
        kd = ck.obj(s).graded_dim()
        fp = f_part_multiplicity(theta_after_f(N, p, s), lam + p)
        rows.append(BridgeRow(s, kd, fp, _monomial_ratio(kd, fp)))
    return rows


def bridge_shift(lam: int, p: int) -> int | None:
    """The single q-power relating the two sides for every s, or None."""
    shifts = {r.shift for r in graded_dim_bridge(lam, p)}
    if len(shifts) != 1 or None in shifts:
        return None
    return shifts.pop()
