"""2x2 matrices over capped-precision Q_p, the Iwasawa decomposition, and the
coset basis of (B cap K) \\ K / K(m), identified with P^1(Z/p^m)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactnum.padic import DEFAULT_PREC, PAdicScalar, PrecisionError

MAX_LEVEL = 3

Mat2 = tuple[PAdicScalar, PAdicScalar, PAdicScalar, PAdicScalar]  # (a, b, c, d) row-major


class LevelTooLarge(ValueError):
    pass


def working_precision(m: int) -> int:
    return m + DEFAULT_PREC


def mat2(p: int, entries: Sequence, prec: int = DEFAULT_PREC) -> Mat2:
    """A 2x2 matrix from four rationals or p-adic scalars (row-major)."""
    out = []
    for x in entries:
        out.append(x if isinstance(x, PAdicScalar) else PAdicScalar.from_rational(Fraction(x), p, prec))
    if len(out) != 4:
        raise ValueError("need four entries")
    return tuple(out)


def mul2(g: Mat2, h: Mat2) -> Mat2:
    a, b, c, d = g
    e, f, k, l = h
    return (a * e + b * k, a * f + b * l, c * e + d * k, c * f + d * l)


def det2(g: Mat2) -> PAdicScalar:
    a, b, c, d = g
    return a * d - b * c


def eq2(g: Mat2, h: Mat2) -> bool:
    return all(x == y for x, y in zip(g, h))


def in_K(g: Mat2) -> bool:
    return all(x.valuation >= 0 for x in g) and det2(g).valuation == 0


def iwasawa(g: Mat2) -> tuple[Mat2, Mat2]:
    """g = b * kappa with b upper triangular and kappa in GL_2(Z_p)."""
    a, b, c, d = g
    p = a.p
    one = PAdicScalar.from_rational(1, p, a.prec)
    zero = PAdicScalar.zero(p, a.prec)
    dt = det2(g)
    if dt.is_zero():
        raise ValueError("matrix is not invertible at the working precision")
    if in_K(g):
        return (one, zero, zero, one), g
    if c.valuation >= d.valuation:
        t = c / d
        kappa = (one, zero, t, one)
        bb = (a - b * t, b, zero, d)
    else:
        t = d / c
        kappa = (zero, -one, one, t)
        bb = (dt / c, a, zero, c)
    if not eq2(mul2(bb, kappa), g):
        raise PrecisionError("Iwasawa factors do not multiply back to g")
    return bb, kappa


@dataclass(frozen=True)
class CosetBasis:
    """Representatives kappa_j of (B cap K) \\ K / K(m).

    Labels are ("I", a) for [[1, 0], [a, 1]], a in Z/p^m, followed by
    ("II", d) for [[0, -1], [1, d]], d in pZ/p^m; the bottom row of each
    representative is the corresponding point of P^1(Z/p^m).
    """

    p: int
    m: int
    labels: tuple[tuple[str, int], ...]
    reps: tuple[Mat2, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def locate(self, kappa: Mat2) -> tuple[int, PAdicScalar, PAdicScalar]:
        """(j, t1, t2) with kappa in diag(t1, t2) N(Z_p) kappa_j K(m)."""
        p, m = self.p, self.m
        dt = det2(kappa)
        if m == 0:
            one = PAdicScalar.from_rational(1, p, dt.prec)
            return 0, one, one
        _, _, c, d = kappa
        if d.valuation == 0:
            j = _index(p, m, "I", (c / d).residue(m))
            return j, dt / d, d
        if c.valuation != 0:
            raise ValueError("matrix is not in K")
        j = _index(p, m, "II", (d / c).residue(m))
        return j, dt / c, c


def _index(p: int, m: int, kind: str, t: int) -> int:
    if kind == "I":
        return t
    return p**m + t // p


def coset_basis(p: int, m: int) -> CosetBasis:
    if m < 0:
        raise ValueError("level must be nonnegative")
    if m > MAX_LEVEL:
        raise LevelTooLarge(f"level {m} exceeds the supported maximum {MAX_LEVEL}")
    prec = working_precision(m)
    if m == 0:
        return CosetBasis(p, 0, (("I", 0),), (mat2(p, (1, 0, 0, 1), prec),))
    labels = [("I", a) for a in range(p**m)] + [("II", d) for d in range(0, p**m, p)]
    reps = [mat2(p, (1, 0, a, 1), prec) if k == "I" else mat2(p, (0, -1, 1, a), prec) for k, a in labels]
    return CosetBasis(p, m, tuple(labels), tuple(reps))


def projective_line(p: int, m: int) -> list[tuple[int, int]]:
    """Points of P^1(Z/p^m) as normalized primitive pairs (c, d)."""
    if m == 0:
        return [(0, 1)]
    q = p**m
    return [(a, 1) for a in range(q)] + [(1, d) for d in range(0, q, p)]


def k_generators(p: int, m: int) -> list[list[int]]:
    """Generators of GL_2(Z/p^m): w, the two elementary unipotents and diag(u, 1)."""
    gens = [[0, -1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1]]
    mod = p ** max(m, 1)
    gens += [[u, 0, 0, 1] for u in range(2, mod) if u % p]
    return gens
