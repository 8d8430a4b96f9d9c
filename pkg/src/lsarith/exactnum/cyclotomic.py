"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1), i.e. as
the reduced residue modulo the n-th cyclotomic polynomial.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials (lowest degree first), exact division."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divmod_exact(p, list(cyclotomic_poly(d)))
    return tuple(p)


def phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta^k in the power basis for 0 <= k < 2n."""
    f = cyclotomic_poly(n)
    d = len(f) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(2 * n):
        rows.append(tuple(cur))
        # multiply by zeta: shift, then reduce the top coefficient (Phi_n is monic)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * f[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(n: int, coeffs: list) -> tuple[Fraction, ...]:
    """Reduce a coefficient list in powers of zeta (any length < 2n) mod Phi_n."""
    table = _power_table(n)
    d = phi(n)
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % n]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True)
class CycNumber:
    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != phi(self.conductor):
            raise ValueError("coefficient vector has the wrong length")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable) -> "CycNumber":
        """Element sum c_i zeta^i; any number of terms, reduced mod Phi_n."""
        return cls(n, _reduce(n, [Fraction(c) for c in coeffs]))

    @classmethod
    def rational(cls, n: int, x) -> "CycNumber":
        return cls(n, (Fraction(x),) + (Fraction(0),) * (phi(n) - 1))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNumber":
        return cls(n, tuple(Fraction(c) for c in _power_table(n)[k % n]))

    @classmethod
    def zero(cls, n: int) -> "CycNumber":
        return cls.rational(n, 0)

    @classmethod
    def one(cls, n: int) -> "CycNumber":
        return cls.rational(n, 1)

    # -- field operations ------------------------------------------------

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.conductor != self.conductor:
                raise ValueError(f"conductor mismatch: {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycNumber(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.conductor, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = len(self.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNumber(self.conductor, _reduce(self.conductor, prod))

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm to Q: the product of all Galois conjugates."""
        return _norm_and_cofactor(self)[0]

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        nrm, cof = _norm_and_cofactor(self)
        return cof * (1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "CycNumber":
        if e < 0:
            return self.inverse() ** (-e)
        out = CycNumber.one(self.conductor)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.coeffs == other.coeffs
        n = lcm(self.conductor, other.conductor)
        return self.lift(n).coeffs == other.lift(n).coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, n: int) -> "CycNumber":
        """Image under Q(zeta_k) -> Q(zeta_n), zeta_k -> zeta_n^(n/k), for k | n."""
        if n % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {n}")
        step = n // self.conductor
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CycNumber(n, _reduce(n, coeffs))

    def galois(self, a: int) -> "CycNumber":
        """sigma_a: zeta -> zeta^a, for a coprime to the conductor."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError(f"sigma_{a} is not an automorphism of Q(zeta_{n})")
        coeffs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            coeffs[(a * i) % n] += c
        return CycNumber(n, _reduce(n, coeffs))

    def embed(self, a: int = 1) -> complex:
        """Complex embedding zeta -> exp(2 pi i a / n)."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError(f"a = {a} is not coprime to {n}")
        z = cmath.exp(2j * cmath.pi * a / n)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs) if c)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CycNumber({self.conductor}: {' + '.join(terms) or '0'})"


def galois_apply(a: int, x: CycNumber) -> CycNumber:
    return x.galois(a)


def galois_group(n: int) -> list[int]:
    return [a for a in range(1, n + 1) if gcd(a, n) == 1] if n > 1 else [1]


def _norm_and_cofactor(x: CycNumber) -> tuple[Fraction, CycNumber]:
    # x * prod_{a != 1} sigma_a(x) is the norm, a rational number
    cof = CycNumber.one(x.conductor)
    for a in galois_group(x.conductor):
        if a % x.conductor != 1 % x.conductor:
            cof = cof * x.galois(a)
    nrm = x * cof
    if not nrm.is_rational():
        raise ArithmeticError("norm is not rational")
    return nrm.coeffs[0], cof


def common_conductor(*xs: CycNumber) -> int:
    n = 1
    for x in xs:
        n = lcm(n, x.conductor)
    return n
