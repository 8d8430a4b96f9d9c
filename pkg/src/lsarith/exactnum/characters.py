"""Smooth characters of Q_p^x with values in a cyclotomic field, their abelian
Euler factors, and the convergence and temperedness gates used by the GL(2)
computation.

JSON record of a character::

    {"p": 3, "c": 1, "zeta_order": 2, "unit_values": [0, 1],
     "value_at_uniformizer": ["1/9"], "weight": "4"}

``unit_values[i]`` is the exponent e with chi(u) = zeta_n^e, where u runs
over the units of Z/p^c in increasing order. ``value_at_uniformizer`` is the
coefficient list of chi(p) in the power basis of Q(zeta_n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import CycNumber
from .padic import PAdicScalar, PrecisionError

MAX_CHECKED_CONDUCTOR = 3


class Pole(ZeroDivisionError):
    """An Euler factor is evaluated at one of its poles."""


@lru_cache(maxsize=None)
def units_mod(p: int, c: int) -> tuple[int, ...]:
    if c == 0:
        return ()
    return tuple(u for u in range(1, p**c) if u % p)


@lru_cache(maxsize=None)
def _unit_index(p: int, c: int) -> dict[int, int]:
    return {u: i for i, u in enumerate(units_mod(p, c))}


def unit_generator(p: int, c: int) -> int:
    """Smallest generator of (Z/p^c)^x; raises if the group is not cyclic."""
    us = units_mod(p, c)
    order = len(us)
    for g in us:
        x, k = g, 1
        while x != 1:
            x = x * g % p**c
            k += 1
        if k == order:
            return g
    if c == 0 or order == 1:
        return 1
    raise ValueError(f"(Z/{p}^{c})^x is not cyclic")


def _frac(x) -> Fraction:
    return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SmoothCharacter:
    p: int
    c: int
    zeta_order: int
    unit_exps: tuple[int, ...]
    value_at_uniformizer: CycNumber
    weight: Fraction

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("negative conductor exponent")
        n = self.zeta_order
        if len(self.unit_exps) != len(units_mod(self.p, self.c)):
            raise ValueError("unit table has the wrong length")
        object.__setattr__(self, "unit_exps", tuple(e % n for e in self.unit_exps))
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.value_at_uniformizer.conductor != n:
            object.__setattr__(self, "value_at_uniformizer", self.value_at_uniformizer.lift(n))
        if self.value_at_uniformizer.is_zero():
            raise ValueError("chi(uniformizer) must be nonzero")
        if self.c <= MAX_CHECKED_CONDUCTOR:
            self._check_homomorphism()

    def _check_homomorphism(self) -> None:
        us = units_mod(self.p, self.c)
        idx = _unit_index(self.p, self.c)
        mod = self.p**self.c
        n = self.zeta_order
        for i, u in enumerate(us):
            for j in range(i, len(us)):
                k = idx[u * us[j] % mod]
                if (self.unit_exps[i] + self.unit_exps[j] - self.unit_exps[k]) % n:
                    raise ValueError("unit table is not a homomorphism")

    # -- constructors ----------------------------------------------------

    @classmethod
    def unramified(cls, p: int, value, weight=0, zeta_order: int | None = None) -> "SmoothCharacter":
        if not isinstance(value, CycNumber):
            value = CycNumber.rational(zeta_order or 1, value)
        return cls(p, 0, value.conductor, (), value, Fraction(weight))

    @classmethod
    def trivial(cls, p: int) -> "SmoothCharacter":
        return cls.unramified(p, 1)

    @classmethod
    def from_generator(cls, p: int, c: int, zeta_order: int, exp: int, value: CycNumber, weight=0) -> "SmoothCharacter":
        """chi(g) = zeta_n^exp on the smallest generator g of (Z/p^c)^x."""
        us = units_mod(p, c)
        g = unit_generator(p, c)
        exps = {}
        x = 1
        for k in range(len(us)):
            exps[x] = k * exp
            x = x * g % p**c
        if len(us) * exp % zeta_order:
            raise ValueError("exponent incompatible with the group order")
        return cls(p, c, zeta_order, tuple(exps[u] for u in us), value, Fraction(weight))

    @classmethod
    def legendre(cls, p: int, value=1, weight=0) -> "SmoothCharacter":
        """The quadratic character of conductor 1 (p odd) times an unramified part."""
        if p == 2:
            raise ValueError("no quadratic character of conductor 1 at p = 2")
        squares = {u * u % p for u in range(1, p)}
        v = value if isinstance(value, CycNumber) else CycNumber.rational(1, value)
        n = lcm(2, v.conductor)
        exps = tuple(0 if u in squares else n // 2 for u in units_mod(p, 1))
        return cls(p, 1, n, exps, v.lift(n), Fraction(weight))

    # -- evaluation ------------------------------------------------------

    def unit_value(self, u: int) -> CycNumber:
        if self.c == 0:
            return CycNumber.one(self.zeta_order)
        k = _unit_index(self.p, self.c)[u % self.p**self.c]
        return CycNumber.zeta(self.zeta_order, self.unit_exps[k])

    def unit_exponent(self, u: int) -> Fraction:
        """chi(u) = exp(2 pi i * this), as an element of Q/Z."""
        if self.c == 0:
            return Fraction(0)
        k = _unit_index(self.p, self.c)[u % self.p**self.c]
        return Fraction(self.unit_exps[k], self.zeta_order) % 1

    def lift(self, n: int) -> "SmoothCharacter":
        """Same character, with values viewed in Q(zeta_n) for a multiple n."""
        if n % self.zeta_order:
            raise ValueError(f"{self.zeta_order} does not divide {n}")
        s = n // self.zeta_order
        return SmoothCharacter(self.p, self.c, n, tuple(e * s for e in self.unit_exps), self.value_at_uniformizer.lift(n), self.weight)

    def raise_conductor(self, c: int) -> "SmoothCharacter":
        """Same character, tabulated on (Z/p^c)^x for c >= self.c."""
        if c < self.c:
            raise ValueError("cannot lower the conductor exponent")
        if c == self.c:
            return self
        mod = self.p**self.c
        exps = tuple(0 if self.c == 0 else self.unit_exps[_unit_index(self.p, self.c)[u % mod]] for u in units_mod(self.p, c))
        return SmoothCharacter(self.p, c, self.zeta_order, exps, self.value_at_uniformizer, self.weight)

    def galois(self, a: int) -> "SmoothCharacter":
        """sigma_a o chi."""
        n = self.zeta_order
        if gcd(a, n) != 1:
            raise ValueError(f"sigma_{a} is not an automorphism of Q(zeta_{n})")
        return SmoothCharacter(self.p, self.c, n, tuple(e * a for e in self.unit_exps), self.value_at_uniformizer.galois(a), self.weight)

    def __mul__(self, other: "SmoothCharacter") -> "SmoothCharacter":
        if other.p != self.p:
            raise ValueError("different primes")
        n = lcm(self.zeta_order, other.zeta_order)
        c = max(self.c, other.c)
        a = self.lift(n).raise_conductor(c)
        b = other.lift(n).raise_conductor(c)
        return SmoothCharacter(
            self.p, c, n,
            tuple(x + y for x, y in zip(a.unit_exps, b.unit_exps)),
            a.value_at_uniformizer * b.value_at_uniformizer,
            self.weight + other.weight,
        )

    def inverse(self) -> "SmoothCharacter":
        return SmoothCharacter(self.p, self.c, self.zeta_order, tuple(-e for e in self.unit_exps), self.value_at_uniformizer.inverse(), -self.weight)

    def twist(self, factor, weight_shift=0) -> "SmoothCharacter":
        """Multiply by the unramified character sending p to ``factor``."""
        return self * SmoothCharacter.unramified(self.p, factor, weight_shift)

    @property
    def is_unramified(self) -> bool:
        return not any(self.unit_exps)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "c": self.c,
            "zeta_order": self.zeta_order,
            "unit_values": list(self.unit_exps),
            "value_at_uniformizer": [format_fraction(x) for x in self.value_at_uniformizer.coeffs],
            "weight": format_fraction(self.weight),
        }

    @classmethod
    def from_json(cls, rec) -> "SmoothCharacter":
        if isinstance(rec, str):
            rec = json.loads(rec)
        missing = {"p", "c", "zeta_order", "unit_values", "value_at_uniformizer", "weight"} - set(rec)
        if missing:
            raise ValueError(f"character record lacks {sorted(missing)}")
        n = int(rec["zeta_order"])
        value = CycNumber.from_coeffs(n, [_frac(x) for x in rec["value_at_uniformizer"]])
        return cls(int(rec["p"]), int(rec["c"]), n, tuple(int(e) for e in rec["unit_values"]), value, _frac(rec["weight"]))


def common_field(*chis: SmoothCharacter) -> list[SmoothCharacter]:
    n = 1
    for chi in chis:
        n = lcm(n, chi.zeta_order)
    return [chi.lift(n) for chi in chis]


def char_eval(chi: SmoothCharacter, x: PAdicScalar) -> CycNumber:
    if x.p != chi.p:
        raise ValueError("different primes")
    if x.is_zero():
        raise ValueError("characters of F^x are not defined at 0")
    if x.prec < chi.c:
        raise PrecisionError(f"need {chi.c} unit digits, have {x.prec}")
    u = chi.unit_value(x.unit_residue(chi.c)) if chi.c else CycNumber.one(chi.zeta_order)
    return u * chi.value_at_uniformizer**x.val


def restrictions_agree(chi1: SmoothCharacter, chi2: SmoothCharacter) -> bool:
    if chi1.p != chi2.p:
        raise ValueError("different primes")
    c = max(chi1.c, chi2.c)
    return all(chi1.unit_exponent(u) == chi2.unit_exponent(u) for u in units_mod(chi1.p, c))


@dataclass(frozen=True)
class EulerFactor:
    """(1 - c q^{-s})^{-1}."""

    c: CycNumber
    q: int

    def at(self, s0: int) -> CycNumber:
        if int(s0) != s0:
            raise ValueError("evaluation point must be an integer")
        f = 1 - self.c * Fraction(self.q) ** (-int(s0))
        if f.is_zero():
            raise Pole(f"Euler factor has a pole at s = {s0}")
        return f.inverse()


def euler_factor(chi1: SmoothCharacter, chi2: SmoothCharacter) -> EulerFactor | None:
    """Euler factor of chi1 chi2^{-1}; None when that character is ramified."""
    a, b = common_field(chi1, chi2)
    if not restrictions_agree(a, b):
        return None
    return EulerFactor(a.value_at_uniformizer / b.value_at_uniformizer, a.p)


def l_value(chi1: SmoothCharacter, chi2: SmoothCharacter, s0: int) -> CycNumber:
    """L(s0, chi1 x chi2^{-1}) in the common cyclotomic field of the pair.

    The L-factor of a ramified character is 1.
    """
    ef = euler_factor(chi1, chi2)
    if ef is None:
        return CycNumber.one(lcm(chi1.zeta_order, chi2.zeta_order))
    return ef.at(s0)


def right_of_axis_check(chi1: SmoothCharacter, chi2: SmoothCharacter) -> bool:
    """Convergence gate for the GL(2) Borel: -<rho, alpha> + (w1 - w2)/2 > 0."""
    if chi1.p != chi2.p:
        raise ValueError("different primes")
    return -1 + (chi1.weight - chi2.weight) / 2 > 0


def weight_consistency(chi: SmoothCharacter, a: int = 1, tol: float = 1e-9) -> bool:
    """|iota_a(chi(p))| == p^{-w/2} under zeta_n -> exp(2 pi i a / n)."""
    got = abs(chi.value_at_uniformizer.embed(a))
    want = float(chi.p) ** (-float(chi.weight) / 2)
    return abs(got - want) <= tol * max(1.0, want)


__all__ = [
    "EulerFactor",
    "Pole",
    "SmoothCharacter",
    "char_eval",
    "common_field",
    "euler_factor",
    "l_value",
    "restrictions_agree",
    "right_of_axis_check",
    "units_mod",
    "weight_consistency",
]
