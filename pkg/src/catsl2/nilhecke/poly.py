"""Integer polynomials in n commuting variables (dictionary representation)."""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Mapping

Exps = tuple[int, ...]


class MultiPoly:
    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] | None = None):
        if n < 0:
            raise ValueError("number of variables must be >= 0")
        self.n = n
        t: dict[Exps, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                e = tuple(int(a) for a in e)
                if len(e) != n or any(a < 0 for a in e):
                    raise ValueError(f"bad exponent vector {e} for n={n}")
                if c:
                    w = t.get(e, 0) + int(c)
                    if w:
                        t[e] = w
                    else:
                        t.pop(e, None)
        self._t = t

    @classmethod
    def _raw(cls, n: int, t: dict[Exps, int]) -> "MultiPoly":
        p = cls.__new__(cls)
        p.n = n
        p._t = t
        return p

    @classmethod
    def var(cls, i: int, n: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: int = 1) -> "MultiPoly":
        e = tuple(exps)
        return cls(len(e), {e: c})

    @classmethod
    def const(cls, c: int, n: int) -> "MultiPoly":
        return cls._raw(n, {(0,) * n: c} if c else {})

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._t}) <= 1

    def _check(self, other: "MultiPoly"):
        if other.n != self.n:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        self._check(other)
        t = dict(self._t)
        for e, c in other._t.items():
            w = t.get(e, 0) + c
            if w:
                t[e] = w
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.n, {e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly._raw(self.n, {e: c * other for e, c in self._t.items()} if other else {})
        self._check(other)
        t: dict[Exps, int] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = t.get(e, 0) + c1 * c2
                if w:
                    t[e] = w
                else:
                    t.pop(e, None)
        return MultiPoly._raw(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __hash__(self):
        return hash((self.n, frozenset(self._t.items())))

    def swap(self, i: int) -> "MultiPoly":
        """Apply the transposition s_i exchanging x_i and x_{i+1}."""
        def sw(e):
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            return tuple(e)
        return MultiPoly._raw(self.n, {sw(e): c for e, c in self._t.items()})

    def is_symmetric_in(self, i: int) -> bool:
        return self.swap(i) == self

    def divide_by_difference(self, i: int) -> "MultiPoly":
        """Exact division by ``x_i - x_{i+1}`` using x_i as leading variable."""
        rem = dict(self._t)
        quo: dict[Exps, int] = {}
        a = i - 1
        while rem:
            e = max(rem, key=lambda m: (m[a], m))
            if e[a] == 0:
                raise ArithmeticError("polynomial is not divisible by x_i - x_{i+1}")
            c = rem.pop(e)
            qe = list(e)
            qe[a] -= 1
            qe = tuple(qe)
            quo[qe] = quo.get(qe, 0) + c
            # subtract c * x^qe * (x_i - x_{i+1}): the x_i part cancelled e already
            ne = list(qe)
            ne[a + 1] += 1
            ne = tuple(ne)
            w = rem.get(ne, 0) + c
            if w:
                rem[ne] = w
            else:
                rem.pop(ne, None)
        return MultiPoly._raw(self.n, {e: c for e, c in quo.items() if c})

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in sorted(self._t.items())]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "MultiPoly":
        if n is None:
            if not data:
                raise ValueError("cannot infer n from an empty term list")
            n = len(data[0]["exponents"])
        return cls(n, ((tuple(d["exponents"]), d["coeff"]) for d in data))

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items(), reverse=True):
            mono = "*".join(f"x{k + 1}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def monomials_up_to(n: int, max_deg: int) -> list[Exps]:
    """All exponent vectors of total degree <= max_deg, sorted by (degree, vector)."""
    out = []
    for d in range(max_deg + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for k in combo:
                e[k] += 1
            out.append(tuple(e))
    return sorted(out, key=lambda e: (sum(e), e))


def staircase(n: int) -> MultiPoly:
    """x^delta = x_1^{n-1} x_2^{n-2} ... x_n^0."""
    return MultiPoly.monomial(tuple(n - 1 - k for k in range(n)))


def monomial_symmetric(parts: Iterable[int], n: int) -> MultiPoly:
    """Monomial symmetric function m_parts in n variables."""
    from itertools import permutations

    parts = list(parts)
    if len(parts) > n:
        raise ValueError("more parts than variables")
    parts += [0] * (n - len(parts))
    return MultiPoly(n, {e: 1 for e in set(permutations(parts))})


def demazure(i: int, f: MultiPoly) -> MultiPoly:
    """Divided difference ``(f - s_i f) / (x_i - x_{i+1})``."""
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"Demazure index {i} out of range 1..{f.n - 1}")
    return (f - f.swap(i)).divide_by_difference(i)
