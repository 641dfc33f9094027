"""Exact Laurent polynomials in q over the integers, and quantum numbers.

Everything here is integer arithmetic on Python ints; there is no floating
point anywhere in the package.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable integer Laurent polynomial ``sum c_e q^e``.

    Zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, v in items:
                if not isinstance(e, int) or not isinstance(v, int):
                    raise TypeError("exponents and coefficients must be int")
                if v:
                    c[e] = c.get(e, 0) + v
                    if not c[e]:
                        del c[e]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c} if c else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_deg(self) -> int:
        return min(self._c)

    def max_deg(self) -> int:
        return max(self._c)

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_unit(self) -> bool:
        """True for ``+-q^m``, the units of Z[q, q^-1]."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        return LaurentPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if self.is_unit():
                (e, v), = self._c.items()
                return LaurentPoly.monomial(-e * -n, v ** -n)
            raise ValueError("only units have negative powers")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``q^m``."""
        return LaurentPoly._raw({e + m: v for e, v in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``q -> q^-1``."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def divmod(self, d: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division by ``d`` (leading-term on the high end).

        Exact whenever ``d`` divides ``self``; the remainder is returned so
        callers can assert it is zero.
        """
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        dmax = d.max_deg()
        dlead = d[dmax]
        rem = dict(self._c)
        quo: dict[int, int] = {}
        if not rem:
            return LaurentPoly(), LaurentPoly()
        # any exact quotient lives in exponents >= lo
        lo = self.min_deg() - d.min_deg()
        while rem:
            top = max(rem)
            e = top - dmax
            if e < lo or rem[top] % dlead:
                break
            c = rem[top] // dlead
            quo[e] = c
            for de, dv in d._c.items():
                k = de + e
                w = rem.get(k, 0) - c * dv
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quo), LaurentPoly._raw(rem)

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(d)
        if r:
            raise ArithmeticError(f"{d} does not divide {self}")
        return q

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def to_json(self) -> list[list[int]]:
        return [[e, v] for e, v in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        exps = [int(e) for e, _ in data]
        if exps != sorted(set(exps)):
            raise ValueError("exponents must be strictly ascending")
        if any(int(v) == 0 for _, v in data):
            raise ValueError("zero coefficients are not allowed")
        return cls((int(e), int(v)) for e, v in data)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                qq = "q" if e == 1 else f"q^{e}"
                mono = qq if abs(v) == 1 else f"{abs(v)}*{qq}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


GradedDim = LaurentPoly
ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
q = LaurentPoly.monomial(1)


def qint(k: int) -> LaurentPoly:
    """Quantum integer ``[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}``; ``[0] = 0``."""
    if k < 0:
        raise ValueError(f"qint requires k >= 0, got {k}")
    return LaurentPoly._raw({k - 1 - 2 * i: 1 for i in range(k)})


def qint_signed(n: int) -> LaurentPoly:
    """``[n]`` for any integer, with ``[-n] = -[n]``."""
    return qint(n) if n >= 0 else -qint(-n)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("qfactorial of a negative integer")
    out = ONE
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Quantum binomial ``[n]! / ([k]! [n-k]!)`` by exact division.

    The division remainder is checked to be zero. ``k < 0`` or ``k > n``
    gives 0.
    """
    if n < 0:
        raise ValueError(f"qbinom requires n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    num = qfactorial(n)
    den = qfactorial(k) * qfactorial(n - k)
    quo, rem = num.divmod(den)
    assert not rem, f"non-exact quantum binomial division for ({n}, {k})"
    return quo


@lru_cache(maxsize=None)
def qbinom_general(n: int, k: int) -> LaurentPoly:
    """``[n choose k]`` for any integer ``n`` and ``k >= 0``.

    ``prod_{i<k} [n-i] / [k]!``; for negative ``n`` this is
    ``(-1)^k [k-n-1 choose k]``.
    """
    if k < 0:
        return ZERO
    if n >= 0:
        return qbinom(n, k)
    return qbinom(k - n - 1, k) * (-1 if k % 2 else 1)


def graded_dim_grassmannian(k: int, n: int) -> LaurentPoly:
    """Graded dimension of the symmetrically graded cohomology of G(k, n)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return qbinom(n, k)


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def shift_power(m: int) -> LaurentPoly:
    """The q-power attached to the grading shift <m>: q acts by <-1>."""
    return LaurentPoly.monomial(-m)


def homological_sign(m: int) -> int:
    """Sign attached to the homological shift [m]."""
    return -1 if m % 2 else 1
