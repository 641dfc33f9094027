"""Dimension counts for cotangent bundles of Grassmannians and their
correspondences, and exponent bookkeeping for a canonical bundle."""
from __future__ import annotations

from dataclasses import dataclass

GENERATORS = ("det V'", "det V", "det V''", "det V~", "det C^N")
_IDX = {g: i for i, g in enumerate(GENERATORS)}


def dim_grassmannian(k: int, N: int) -> int:
    _range(k, N)
    return k * (N - k)


def dim_cotangent(k: int, N: int) -> int:
    """dim T*G(k, N)."""
    return 2 * dim_grassmannian(k, N)


def dim_correspondence(k1: int, k2: int, N: int) -> int:
    """Dimension of the correspondence with dim V' = k1 <= dim V = k2."""
    if not 0 <= k1 <= k2 <= N:
        raise ValueError(f"need 0 <= k1 <= k2 <= N, got {(k1, k2, N)}")
    return N * (k1 + k2) - k1 * k1 - k2 * k2


def half_sum(k1: int, k2: int, N: int) -> int:
    total = dim_cotangent(k1, N) + dim_cotangent(k2, N)
    assert total % 2 == 0
    return total // 2


def component_count(k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return k + 1


def _range(k: int, N: int):
    if not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= N, got k={k}, N={N}")


@dataclass(frozen=True)
class BundleExpr:
    """A line bundle as an integer exponent vector over GENERATORS."""

    exponents: tuple = (0,) * len(GENERATORS)

    @classmethod
    def det(cls, name: str, e: int = 1) -> "BundleExpr":
        v = [0] * len(GENERATORS)
        v[_IDX[name]] = e
        return cls(tuple(v))

    @classmethod
    def det_quotient(cls, top: str, bottom: str, e: int) -> "BundleExpr":
        """det(top/bottom)^e = det(top)^e det(bottom)^{-e}."""
        return cls.det(top, e) + cls.det(bottom, -e)

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        return BundleExpr(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def normalize(self) -> "BundleExpr":
        """det C^N is trivial."""
        v = list(self.exponents)
        v[_IDX["det C^N"]] = 0
        return BundleExpr(tuple(v))

    def __getitem__(self, name: str) -> int:
        return self.exponents[_IDX[name]]

    def to_json(self) -> dict:
        return {"generators": list(GENERATORS), "exponents": list(self.exponents)}

    def __str__(self):
        parts = [f"({g})^{e}" for g, e in zip(GENERATORS, self.exponents) if e]
        return " ".join(parts) if parts else "O"


def _check_ledger(N: int, k: int, s: int):
    if not (0 <= s <= k and 2 * k <= N):
        raise ValueError(f"need 0 <= s <= k <= N/2, got N={N}, k={k}, s={s}")


def canonical_contributions(N: int, k: int, s: int) -> list[BundleExpr]:
    """The four factors: two relative Grassmannian-bundle pieces and two section twists."""
    _check_ledger(N, k, s)
    Q = BundleExpr.det_quotient
    m = N - 2 * k
    return [
        Q("det V", "det V'", m + s) + Q("det V~", "det V", -s),
        Q("det V''", "det V'", s) + Q("det V~", "det V''", -(m + s)),
        Q("det C^N", "det V~", -(m + 2 * s)) + Q("det V~", "det V'", k - s),
        Q("det V~", "det V'", -k + s) + BundleExpr.det("det V'", m + 2 * s),
    ]


def canonical_ledger(N: int, k: int, s: int) -> BundleExpr:
    total = BundleExpr()
    for c in canonical_contributions(N, k, s):
        total = total + c
    total = total.normalize()
    if total["det V'"] or total["det V~"]:
        raise ArithmeticError(f"det V' or det V~ survives in the ledger: {total}")
    return total


@dataclass(frozen=True)
class LedgerVerdict:
    N: int
    k: int
    s: int
    det_V: int
    det_V2: int
    symmetric_form: int   # N - 2k + 2s for both factors
    asymmetric_form: int  # N - 2k + s on det V
    matches_symmetric: bool
    matches_asymmetric: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def ledger_verdict(N: int, k: int, s: int) -> LedgerVerdict:
    res = canonical_ledger(N, k, s)
    sym, asym = N - 2 * k + 2 * s, N - 2 * k + s
    dv, dv2 = res["det V"], res["det V''"]
    return LedgerVerdict(N, k, s, dv, dv2, sym, asym,
                         dv == sym and dv2 == sym, dv == asym and dv2 == sym)
