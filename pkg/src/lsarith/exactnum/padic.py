"""Capped-precision elements of Q_p.

A nonzero value is p^valuation * unit with the unit known modulo
p^prec (relative precision). A zero carries only its absolute precision:
it is known to be divisible by p^prec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PREC = 64


class PrecisionError(ArithmeticError):
    pass


def vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True, eq=False)
class PAdicScalar:
    p: int
    val: int | None
    unit: int
    prec: int

    @classmethod
    def zero(cls, p: int, prec: int = DEFAULT_PREC) -> "PAdicScalar":
        return cls(p, None, 0, prec)

    @classmethod
    def from_rational(cls, x, p: int, prec: int = DEFAULT_PREC) -> "PAdicScalar":
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        a, b = x.numerator, x.denominator
        va, vb = vp(a, p), vp(b, p)
        a //= p**va
        b //= p**vb
        mod = p**prec
        return cls(p, va - vb, a * pow(b, -1, mod) % mod, prec)

    @property
    def valuation(self):
        return math.inf if self.val is None else self.val

    @property
    def abs_prec(self) -> int:
        return self.prec if self.val is None else self.val + self.prec

    def is_zero(self) -> bool:
        return self.val is None

    def is_unit(self) -> bool:
        return self.val == 0

    def _check(self, other: "PAdicScalar") -> "PAdicScalar":
        if not isinstance(other, PAdicScalar):
            other = PAdicScalar.from_rational(other, self.p, self.prec)
        if other.p != self.p:
            raise ValueError("different primes")
        return other

    def __add__(self, other) -> "PAdicScalar":
        o = self._check(other)
        p = self.p
        A = min(self.abs_prec, o.abs_prec)
        v = min(self.valuation, o.valuation, A)
        if v >= A:
            return PAdicScalar.zero(p, A)
        s = 0
        for x in (self, o):
            if x.val is not None:
                s += x.unit * p ** (x.val - v)
        s %= p ** (A - v)
        if s == 0:
            return PAdicScalar.zero(p, A)
        k = vp(s, p)
        prec = A - v - k
        return PAdicScalar(p, v + k, (s // p**k) % p**prec, prec)

    __radd__ = __add__

    def __neg__(self) -> "PAdicScalar":
        if self.val is None:
            return self
        return PAdicScalar(self.p, self.val, (-self.unit) % self.p**self.prec, self.prec)

    def __sub__(self, other) -> "PAdicScalar":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "PAdicScalar":
        return (-self) + other

    def __mul__(self, other) -> "PAdicScalar":
        o = self._check(other)
        if self.val is None or o.val is None:
            # a zero times y is known modulo p^(abs_prec + v(y))
            if self.val is None and o.val is None:
                return PAdicScalar.zero(self.p, self.prec + o.prec)
            z, y = (self, o) if self.val is None else (o, self)
            return PAdicScalar.zero(self.p, z.prec + y.val)
        prec = min(self.prec, o.prec)
        return PAdicScalar(self.p, self.val + o.val, self.unit * o.unit % self.p**prec, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PAdicScalar":
        if self.val is None:
            raise ZeroDivisionError("p-adic zero")
        mod = self.p**self.prec
        return PAdicScalar(self.p, -self.val, pow(self.unit, -1, mod), self.prec)

    def __truediv__(self, other) -> "PAdicScalar":
        return self * self._check(other).inverse()

    def __rtruediv__(self, other) -> "PAdicScalar":
        return self.inverse() * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, PAdicScalar):
            try:
                other = self._check(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self - other).is_zero()

    # equality depends on precision, so values are deliberately unhashable
    __hash__ = None

    def unit_residue(self, k: int) -> int:
        """The unit part modulo p^k."""
        if self.val is None:
            raise ZeroDivisionError("zero has no unit part")
        if k > self.prec:
            raise PrecisionError(f"unit known to {self.prec} digits, {k} requested")
        return self.unit % self.p**k

    def residue(self, k: int) -> int:
        """The value modulo p^k, for an element of Z_p."""
        if k <= 0:
            return 0
        if self.val is None:
            if self.prec < k:
                raise PrecisionError("zero not known to the requested precision")
            return 0
        if self.val < 0:
            raise ValueError("not a p-adic integer")
        if self.abs_prec < k:
            raise PrecisionError(f"value known modulo p^{self.abs_prec}, p^{k} requested")
        return self.p**self.val * self.unit % self.p**k

    def __repr__(self) -> str:
        if self.val is None:
            return f"O({self.p}^{self.prec})"
        return f"{self.p}^{self.val}*{self.unit} + O({self.p}^{self.abs_prec})"
