"""Numeric Riemann-sum oracle for the intertwining integral

    T f(kappa) = int_{Q_p} f(w u(x) kappa) dx,

truncated to |x| <= p^R and evaluated under a complex embedding.

The integrand is evaluated by the exact Iwasawa pipeline at one sample point
per cell. Cells are: x + P^m' for x in Z_p, and on each shell p^-r Z_p^x
either x + P^m' (r <= m) or x (1 + P^m') (r > m), where m' = max(m, 1).
The integrand is constant on every such cell, so the only error is the
truncated tail, bounded by C * rho^R with rho = p^(1 - (w1 - w2)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum.characters import SmoothCharacter
from .cosets import coset_basis, mat2, mul2, working_precision
from .operator import OperatorMatrix, _check_pair, _gate, evaluate

# A shell whose sum is this small relative to its total mass is treated as
# cancelling exactly (characters that disagree on units).
CANCEL_TOL = 1e-9


@dataclass
class OracleResult:
    matrix: list[list[complex]]
    R: int
    embedding: int
    rho: float
    tail_bound: float
    # shells[r] is the matrix of shell-r contributions, r = 1..R
    shell_values: dict[int, list[list[complex]]] = field(repr=False)
    shell_mass: dict[int, float] = field(repr=False)

    def deviation(self, exact: OperatorMatrix) -> list[list[float]]:
        e = exact.embed(self.embedding)
        return [[abs(x - y) for x, y in zip(r, s)] for r, s in zip(self.matrix, e)]

    def relative_errors(self, exact: OperatorMatrix) -> list[list[float]]:
        """|oracle - exact| / |exact|; exact zeros use the largest |entry|."""
        e = exact.embed(self.embedding)
        scale = max(abs(x) for row in e for x in row) or 1.0
        out = []
        for orow, erow, xrow in zip(self.matrix, e, exact.entries):
            out.append([abs(o - v) / (scale if x.is_zero() else abs(v)) for o, v, x in zip(orow, erow, xrow)])
        return out

    def convergence_ratio(self, r_lo: int = 10) -> float | None:
        """Per-shell decay measured between shells r_lo and R on the entry
        with the largest final shell; None when the shells cancel."""
        r_hi = self.R
        if r_lo >= r_hi or self.shell_mass.get(r_hi, 0.0) == 0.0:
            return None
        hi = self.shell_values[r_hi]
        lo = self.shell_values[r_lo]
        j, i = max(((j, i) for j in range(len(hi)) for i in range(len(hi))), key=lambda t: abs(hi[t[0]][t[1]]))
        if abs(hi[j][i]) <= CANCEL_TOL * self.shell_mass[r_hi] or abs(lo[j][i]) == 0.0:
            return None
        return (abs(hi[j][i]) / abs(lo[j][i])) ** (1.0 / (r_hi - r_lo))


def numeric_oracle(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int, R: int = 40, a: int = 1) -> OracleResult:
    c1, c2 = _check_pair(chi1, chi2, p, m)
    _gate(c1, c2)
    basis = coset_basis(p, m)
    dim = len(basis)
    mp = max(m, 1)
    prec = working_precision(m) + R
    w = mat2(p, (0, -1, 1, 0), prec)
    total = [[0j] * dim for _ in range(dim)]
    shells: dict[int, list[list[complex]]] = {}
    mass: dict[int, float] = {}

    def cells(r: int):
        """(x, vol) samples for shell r (r = 0 means all of Z_p)."""
        if r == 0:
            return [(Fraction(t), Fraction(1, p**mp)) for t in range(p**mp)]
        e = mp if r <= m else mp - r
        mod = p ** (r + e)
        return [(Fraction(u, p**r), Fraction(1, p**e) if e >= 0 else Fraction(p**-e)) for u in range(1, mod) if u % p]

    for r in range(0, R + 1):
        acc = [[0j] * dim for _ in range(dim)]
        m_r = 0.0
        for x, vol in cells(r):
            u = mat2(p, (1, x, 0, 1), prec)
            wu = mul2(w, u)
            for j, kappa in enumerate(basis.reps):
                ev = evaluate(c1, c2, basis, mul2(wu, kappa))
                z = ev.value.embed(a) * float(vol)
                acc[j][ev.index] += z
                m_r += abs(z)
        for j in range(dim):
            for i in range(dim):
                total[j][i] += acc[j][i]
        if r:
            shells[r] = acc
            mass[r] = m_r
    rho = float(p) ** (1 - float(c1.weight - c2.weight) / 2)
    C = (1 - 1 / p) * rho / (1 - rho)
    return OracleResult(total, R, a, rho, C * rho**R, shells, mass)


def expected_ratio(chi1: SmoothCharacter, chi2: SmoothCharacter) -> float:
    return float(chi1.p) ** (1 - float(chi1.weight - chi2.weight) / 2)


__all__ = ["OracleResult", "expected_ratio", "numeric_oracle"]
