"""The standard intertwining operator for GL(2) at s = -1 on K(m)-invariants.

For f in the algebraically induced space of chi1 x chi2 and kappa in K,

    T f(kappa) = q^-m sum_{a in P^-m / P^m} f(w u(a) kappa)
                 + delta * (1 - 1/q) * (c q)^(m+1) * L(-1) * f(kappa),

with w = [[0, -1], [1, 0]], u(a) = [[1, a], [0, 1]], c = chi1(p)/chi2(p),
delta = 1 when chi1 and chi2 agree on units (else 0) and L(-1) the Euler
factor of chi1 chi2^-1 at -1. The first term is the integral over P^-m; the
second sums the shells of valuation -r, r >= m + 1, with vol(Z_p) = 1.

Matrices are indexed [target rep][source basis vector]: entry (j, i) is
T f_i(kappa_j), where f_i is supported on (B cap K) kappa_i K(m) with
f_i(kappa_i) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from ..exactnum.characters import (
    SmoothCharacter,
    char_eval,
    common_field,
    l_value,
    restrictions_agree,
    right_of_axis_check,
)
from ..exactnum.cyclotomic import CycNumber, galois_group
from .cosets import CosetBasis, Mat2, coset_basis, iwasawa, mat2, mul2, working_precision


class ConvergenceError(ValueError):
    """The pair is not on the right of the unitary axis."""


@dataclass(frozen=True)
class Evaluation:
    """f(g) = value for the basis vector ``index``, zero for the others.

    ``v1`` is the valuation of the argument fed to chi1, needed to twist chi1
    by an unramified character.
    """

    index: int
    value: CycNumber
    v1: int


def evaluate(chi1: SmoothCharacter, chi2: SmoothCharacter, basis: CosetBasis, g: Mat2) -> Evaluation:
    """Evaluate the basis of the induced space at g in GL_2(Q_p)."""
    b, kappa = iwasawa(g)
    j, t1, t2 = basis.locate(kappa)
    x1, x2 = b[0] * t1, b[3] * t2
    return Evaluation(j, char_eval(chi1, x1) * char_eval(chi2, x2), x1.val)


def _check_pair(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int) -> tuple[SmoothCharacter, SmoothCharacter]:
    if chi1.p != p or chi2.p != p:
        raise ValueError(f"characters are not defined over Q_{p}")
    if max(chi1.c, chi2.c) > m:
        raise ValueError(f"conductor exceeds the level m = {m}: no K({m})-invariants")
    a, b = common_field(chi1, chi2)
    return a, b


@dataclass(frozen=True)
class InducedVector:
    """A K(m)-invariant vector of the induced space, by its values on the reps."""

    basis: CosetBasis
    values: tuple[CycNumber, ...]
    chi1: SmoothCharacter
    chi2: SmoothCharacter

    def __post_init__(self):
        if len(self.values) != len(self.basis):
            raise ValueError("one value per coset representative is required")
        # with conductors <= m every rep has trivial stabiliser character,
        # so any choice of values is consistent on overlaps
        _check_pair(self.chi1, self.chi2, self.basis.p, self.basis.m)

    def __call__(self, g: Mat2) -> CycNumber:
        a, b = common_field(self.chi1, self.chi2)
        e = evaluate(a, b, self.basis, g)
        return e.value * self.values[e.index]


def target_characters(chi1: SmoothCharacter, chi2: SmoothCharacter) -> tuple[SmoothCharacter, SmoothCharacter]:
    """chi2(1) x chi1(-1), where chi(n) = chi |.|^n."""
    q = chi1.p
    return chi2.twist(Fraction(1, q), 2), chi1.twist(q, -2)


@dataclass(frozen=True)
class OperatorMatrix:
    entries: tuple[tuple[CycNumber, ...], ...]
    p: int
    m: int
    chi1: SmoothCharacter
    chi2: SmoothCharacter
    normalised: bool = False

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def conductor(self) -> int:
        return self.entries[0][0].conductor

    def galois(self, a: int) -> "OperatorMatrix":
        return OperatorMatrix(
            tuple(tuple(x.galois(a) for x in row) for row in self.entries),
            self.p, self.m, self.chi1.galois(a), self.chi2.galois(a), self.normalised,
        )

    def embed(self, a: int = 1) -> list[list[complex]]:
        return [[x.embed(a) for x in row] for row in self.entries]

    def scaled(self, s: CycNumber) -> list[list[CycNumber]]:
        return [[s * x for x in row] for row in self.entries]

    def same_entries(self, other: "OperatorMatrix") -> bool:
        return self.dim == other.dim and all(x == y for r, s in zip(self.entries, other.entries) for x, y in zip(r, s))

    def apply(self, f: InducedVector) -> InducedVector:
        vals = tuple(sum((row[i] * f.values[i] for i in range(self.dim)), CycNumber.zero(self.conductor)) for row in self.entries)
        t1, t2 = target_characters(self.chi1, self.chi2)
        return InducedVector(f.basis, vals, t1, t2)


@lru_cache(maxsize=256)
def _finite_sum_terms(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int) -> tuple[tuple[int, int, CycNumber, int], ...]:
    """(j, i, value, v1) for every rep j and every a in P^-m / P^m."""
    basis = coset_basis(p, m)
    prec = working_precision(m)
    w = mat2(p, (0, -1, 1, 0), prec)
    terms = []
    for j, kappa in enumerate(basis.reps):
        for t in range(p ** (2 * m)):
            u = mat2(p, (1, Fraction(t, p**m), 0, 1), prec)
            e = evaluate(chi1, chi2, basis, mul2(mul2(w, u), kappa))
            terms.append((j, e.index, e.value, e.v1))
    return tuple(terms)


def _gate(chi1: SmoothCharacter, chi2: SmoothCharacter) -> None:
    if not right_of_axis_check(chi1, chi2):
        raise ConvergenceError(
            f"(w1 - w2)/2 = {(chi1.weight - chi2.weight) / 2} is not > 1: the integral does not converge"
        )


def intertwiner_matrix(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int) -> OperatorMatrix:
    a, b = _check_pair(chi1, chi2, p, m)
    _gate(a, b)
    n = a.zeta_order
    dim = len(coset_basis(p, m))
    rows = [[CycNumber.zero(n) for _ in range(dim)] for _ in range(dim)]
    for j, i, val, _ in _finite_sum_terms(a, b, p, m):
        rows[j][i] = rows[j][i] + val
    scale = Fraction(1, p**m)
    rows = [[x * scale for x in row] for row in rows]
    if restrictions_agree(a, b):
        c = a.value_at_uniformizer / b.value_at_uniformizer
        extra = (c * p) ** (m + 1) * Fraction(p - 1, p) * l_value(a, b, -1)
        for j in range(dim):
            rows[j][j] = rows[j][j] + extra
    return OperatorMatrix(tuple(map(tuple, rows)), p, m, a, b, False)


def normalisation_factor(chi1: SmoothCharacter, chi2: SmoothCharacter) -> CycNumber:
    """(L(-1) / L(0))^-1 for chi1 x chi2^-1."""
    return l_value(chi1, chi2, 0) / l_value(chi1, chi2, -1)


def normalized_matrix(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int) -> OperatorMatrix:
    t = intertwiner_matrix(chi1, chi2, p, m)
    s = normalisation_factor(t.chi1, t.chi2)
    return OperatorMatrix(tuple(map(tuple, t.scaled(s))), p, m, t.chi1, t.chi2, True)


# -- rationality in an unramified twist ----------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Finite sum of coeff * z^exp with coefficients in one cyclotomic field."""

    terms: tuple[tuple[int, CycNumber], ...]
    conductor: int

    @classmethod
    def from_dict(cls, d: dict[int, CycNumber], n: int) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in d.items() if not c.is_zero())), n)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d[e] + c if e in d else c
        return LaurentPoly.from_dict(d, self.conductor)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: dict[int, CycNumber] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d[e1 + e2] + c1 * c2 if e1 + e2 in d else c1 * c2
        return LaurentPoly.from_dict(d, self.conductor)

    def __call__(self, z) -> CycNumber:
        out = CycNumber.zero(self.conductor)
        for e, c in self.terms:
            out = out + c * (z**e if isinstance(z, CycNumber) else Fraction(z) ** e)
        return out

    def galois(self, a: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e, c.galois(a)) for e, c in self.terms), self.conductor)

    @property
    def degree_range(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return self.terms[0][0], self.terms[-1][0]

    def coefficient_list(self) -> tuple[int, list[CycNumber]]:
        """(lowest exponent, dense coefficients)."""
        if not self.terms:
            return 0, []
        lo, hi = self.degree_range
        d = dict(self.terms)
        return lo, [d.get(e, CycNumber.zero(self.conductor)) for e in range(lo, hi + 1)]


@dataclass(frozen=True)
class RationalFamilyMatrix:
    """Entry (j, i) is numerators[j][i] / denominator^powers[j][i], where the
    denominator is 1 - c q z."""

    numerators: tuple[tuple[LaurentPoly, ...], ...]
    powers: tuple[tuple[int, ...], ...]
    denominator: LaurentPoly
    p: int
    m: int
    chi1: SmoothCharacter
    chi2: SmoothCharacter

    def specialize(self, z=1) -> OperatorMatrix:
        den = self.denominator(z)
        if den.is_zero():
            raise ZeroDivisionError("the family has a pole at this z")
        rows = tuple(
            tuple(num(z) / den**e for num, e in zip(nrow, erow))
            for nrow, erow in zip(self.numerators, self.powers)
        )
        return OperatorMatrix(rows, self.p, self.m, self.chi1, self.chi2, False)


def rational_family(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int) -> RationalFamilyMatrix:
    """T for chi1 nu_z x chi2, with nu_z unramified and nu_z(p) = z formal."""
    a, b = _check_pair(chi1, chi2, p, m)
    _gate(a, b)
    n = a.zeta_order
    dim = len(coset_basis(p, m))
    acc: list[list[dict[int, CycNumber]]] = [[{} for _ in range(dim)] for _ in range(dim)]
    scale = Fraction(1, p**m)
    for j, i, val, v1 in _finite_sum_terms(a, b, p, m):
        d = acc[j][i]
        d[v1] = d[v1] + val * scale if v1 in d else val * scale
    nums = [[LaurentPoly.from_dict(acc[j][i], n) for i in range(dim)] for j in range(dim)]
    powers = [[0] * dim for _ in range(dim)]
    c = a.value_at_uniformizer / b.value_at_uniformizer
    one = CycNumber.one(n)
    den = LaurentPoly.from_dict({0: one, 1: -(c * p)}, n)
    if restrictions_agree(a, b):
        # (1 - 1/q)(c q z)^(m+1) / (1 - c q z) on the diagonal
        k = (c * p) ** (m + 1) * Fraction(p - 1, p)
        extra = LaurentPoly.from_dict({m + 1: k}, n)
        for j in range(dim):
            nums[j][j] = nums[j][j] * den + extra
            powers[j][j] = 1
    return RationalFamilyMatrix(
        tuple(map(tuple, nums)), tuple(map(tuple, powers)), den, p, m, a, b
    )


# -- right translation by K ------------------------------------------------


def right_translation_matrix(chi1: SmoothCharacter, chi2: SmoothCharacter, basis: CosetBasis, k0: Mat2) -> list[list[CycNumber]]:
    """Entry (j, i) is f_i(kappa_j k0)."""
    a, b = common_field(chi1, chi2)
    n = a.zeta_order
    dim = len(basis)
    rows = [[CycNumber.zero(n) for _ in range(dim)] for _ in range(dim)]
    for j, kappa in enumerate(basis.reps):
        e = evaluate(a, b, basis, mul2(kappa, k0))
        rows[j][e.index] = e.value
    return rows


def _matmul(x: Sequence[Sequence[CycNumber]], y: Sequence[Sequence[CycNumber]]) -> list[list[CycNumber]]:
    n = len(x)
    zero = CycNumber.zero(x[0][0].conductor)
    return [[sum((x[i][k] * y[k][j] for k in range(n) if not x[i][k].is_zero()), zero) for j in range(n)] for i in range(n)]


def k_equivariance_check(chi1: SmoothCharacter, chi2: SmoothCharacter, p: int, m: int, k0: Sequence[int]) -> bool:
    """T R(k0) == R'(k0) T, with R and R' right translation on the source and
    target spaces. ``k0`` is given as four integers (row-major) read mod p^(2m)."""
    t = intertwiner_matrix(chi1, chi2, p, m)
    basis = coset_basis(p, m)
    g = mat2(p, [int(x) for x in k0], working_precision(m))
    if not (all(x.valuation >= 0 for x in g) and (g[0] * g[3] - g[1] * g[2]).valuation == 0):
        raise ValueError("k0 is not in GL_2(Z_p)")
    src = right_translation_matrix(t.chi1, t.chi2, basis, g)
    tgt = right_translation_matrix(*target_characters(t.chi1, t.chi2), basis, g)
    lhs = _matmul(t.entries, src)
    rhs = _matmul(tgt, t.entries)
    return all(x == y for r, s in zip(lhs, rhs) for x, y in zip(r, s))


def galois_transport_check(
    build: Callable[[SmoothCharacter, SmoothCharacter, int, int], OperatorMatrix],
    chi1: SmoothCharacter,
    chi2: SmoothCharacter,
    p: int,
    m: int,
) -> dict[int, bool]:
    """sigma_a(T(chi)) == T(sigma_a chi) for each sigma_a of the common field."""
    a, b = common_field(chi1, chi2)
    t = build(a, b, p, m)
    out = {}
    for s in galois_group(a.zeta_order):
        out[s] = t.galois(s).same_entries(build(a.galois(s), b.galois(s), p, m))
    return out


__all__ = [
    "ConvergenceError",
    "Evaluation",
    "InducedVector",
    "LaurentPoly",
    "OperatorMatrix",
    "RationalFamilyMatrix",
    "evaluate",
    "galois_transport_check",
    "intertwiner_matrix",
    "k_equivariance_check",
    "normalisation_factor",
    "normalized_matrix",
    "rational_family",
    "right_translation_matrix",
    "target_characters",
]
