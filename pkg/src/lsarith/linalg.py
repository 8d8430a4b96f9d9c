"""Small exact linear algebra over Q and Z.

Vectors are tuples of :class:`~fractions.Fraction` (or ints); matrices are
tuples of row tuples. Everything here is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


# These stay in int arithmetic when given ints (roots, Weyl matrices) and
# fall through to Fraction otherwise; callers divide via Fraction(...).
def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(x, y))


def add(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def as_int_if_integral(x: Sequence) -> tuple:
    """Tuple of ints when every entry is integral, else of Fractions."""
    fr = tuple(Fraction(a) for a in x)
    if all(a.denominator == 1 for a in fr):
        return tuple(int(a) for a in fr)
    return fr


def mat_vec(m: Sequence[Sequence], x: Sequence) -> Vector:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def solve(columns: Sequence[Sequence], target: Sequence) -> Vector | None:
    """Coefficients c with sum_i c_i * columns[i] == target, or None.

    The columns must be linearly independent; the system may be
    overdetermined (more coordinates than columns).
    """
    k = len(columns)
    n = len(target)
    # augmented rows: coordinate equations
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    return tuple(rows[i][k] for i in range(k))


def orthogonal_projector(basis: Sequence[Sequence], form: Sequence[Sequence] | None = None) -> Matrix:
    """Matrix of the projection onto the orthogonal complement of span(basis).

    ``form`` is the Gram matrix of the ambient bilinear form (identity if
    omitted). The projector P satisfies P(v) = v - B G^{-1} B^T F v where G is
    the Gram matrix of ``basis``.
    """
    if not basis:
        raise ValueError("empty basis: use identity")
    n = len(basis[0])
    f = form if form is not None else identity(n)
    bf = [mat_vec(f, b) for b in basis]  # F b_i
    gram = [[dot(bi, fbj) for fbj in bf] for bi in basis]
    ginv = inverse(gram)
    # P = I - sum_{ij} b_i ginv_ij (F b_j)^T
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            v = Fraction(int(r == c))
            for i, bi in enumerate(basis):
                for j, fbj in enumerate(bf):
                    if ginv[i][j]:
                        v -= bi[r] * ginv[i][j] * fbj[c]
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [v * inv for v in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF of an integer matrix, zero rows dropped.

    The result is upper echelon with positive pivots and entries above each
    pivot reduced into [0, pivot).
    """
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out: list[list[int]] = []
    for c in range(ncols):
        # gcd-combine all remaining rows on column c
        live = [r for r in a if r[c] != 0]
        rest = [r for r in a if r[c] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[c] // p[c]
                r2 = [x - q * y for x, y in zip(r, p)]
                (nxt if r2[c] != 0 else rest).append(r2)
            live = nxt
        if live:
            p = live[0]
            if p[c] < 0:
                p = [-x for x in p]
            for r in out:
                q = r[c] // p[c]
                if q:
                    r[:] = [x - q * y for x, y in zip(r, p)]
            out.append(p)
        a = [r for r in rest if any(r)]
    return out


def clear_denominators(vectors: Sequence[Sequence]) -> tuple[int, list[list[int]]]:
    """Common denominator D and the integer vectors D*v."""
    d = 1
    for v in vectors:
        for x in v:
            d = lcm(d, Fraction(x).denominator)
    return d, [[int(Fraction(x) * d) for x in v] for v in vectors]


def in_lattice(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of an integer vector in the Z-span of HNF rows."""
    r = [int(x) for x in v]
    for row in hnf:
        c = next(i for i, x in enumerate(row) if x)
        if r[c] % row[c]:
            return False
        q = r[c] // row[c]
        r = [x - q * y for x, y in zip(r, row)]
    return not any(r)


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g
