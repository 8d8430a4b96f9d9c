"""Root systems and Weyl groups of the classical types in standard coordinates.

Type A is modelled in GL coordinates: ``CartanType("A", N)`` is the root
datum of GL(N), with N ambient coordinates and N - 1 simple roots. For the
other families ``rank`` is both the number of coordinates and of simple
roots.

Simple roots are stored 0-based. Their *labels* follow the usual textbook
numbering: alpha_i = e_i - e_{i+1} with coordinates labelled from 1 for
A, B, C and from 0 for D (so the D-datum of rank n + 1 has coordinates
e_0, ..., e_n and its first simple root is e_0 - e_1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from . import linalg
from .linalg import Vector

MAX_RANK = 9

Weight = Vector


class UnsupportedRank(ValueError):
    pass


class NotARoot(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        lo = {"A": 2, "B": 1, "C": 1, "D": 2}[self.family]
        if not (lo <= self.rank <= MAX_RANK):
            raise UnsupportedRank(f"{self.family}{self.rank}: rank must be in [{lo}, {MAX_RANK}]")

    @property
    def dim(self) -> int:
        """Number of ambient coordinates."""
        return self.rank

    @property
    def n_simple(self) -> int:
        return self.rank - 1 if self.family == "A" else self.rank

    @property
    def label_base(self) -> int:
        return 0 if self.family == "D" else 1

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _e(n: int, i: int, c: int = 1) -> tuple[int, ...]:
    return tuple(c if j == i else 0 for j in range(n))


def _simple_roots(t: CartanType) -> list[Vector]:
    n = t.dim
    chain = [linalg.sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
    if t.family == "A":
        return chain
    if t.family == "B":
        return chain + [_e(n, n - 1)]
    if t.family == "C":
        return chain + [_e(n, n - 1, 2)]
    return chain + [linalg.add(_e(n, n - 2), _e(n, n - 1))]


def reflect(v: Sequence, alpha: Sequence) -> tuple:
    """s_alpha(v) = v - 2 (v, alpha)/(alpha, alpha) alpha."""
    c = Fraction(2 * linalg.dot(v, alpha), linalg.dot(alpha, alpha))
    if c.denominator == 1:
        c = int(c)
    return linalg.as_int_if_integral(x - c * a for x, a in zip(v, alpha))


def reflection_matrix(alpha: Sequence) -> tuple[tuple[int, ...], ...]:
    n = len(alpha)
    cols = [reflect(_e(n, j), alpha) for j in range(n)]
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    for row in rows:
        for x in row:
            if x.denominator != 1:
                raise ValueError("reflection is not integral")
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] = ()

    def __call__(self, v: Sequence) -> Vector:
        return linalg.mat_vec(self.matrix, v)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(linalg.mat_mul(self.matrix, other.matrix), self.word + other.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanType
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    lattice_basis: tuple[Vector, ...]
    bilinear_form: tuple[tuple[int, ...], ...]
    _simple_coords: dict = field(default_factory=dict, compare=False, repr=False)
    _longest: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.cartan.dim

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def roots(self) -> frozenset[Vector]:
        return frozenset(self.positive_roots) | frozenset(tuple(-x for x in b) for b in self.positive_roots)

    def form(self, x: Sequence, y: Sequence):
        # the form is the standard Euclidean one in every supported family
        return linalg.dot(x, y)

    def simple_coords(self, beta: Sequence) -> tuple[int, ...]:
        """Coordinates of a root in the basis of simple roots."""
        key = tuple(beta)
        if key not in self._simple_coords:
            c = linalg.solve(self.simple_roots, key)
            if c is None:
                raise NotARoot(f"{key} is not in the span of the simple roots")
            self._simple_coords[key] = linalg.as_int_if_integral(c)
        return self._simple_coords[key]

    def is_positive(self, beta: Sequence) -> bool:
        return tuple(beta) in self._positive_set

    @cached_property
    def _positive_set(self) -> frozenset[Vector]:
        return frozenset(self.positive_roots)

    def coroot(self, beta: Sequence) -> tuple:
        return linalg.as_int_if_integral(linalg.scale(Fraction(2, self.form(beta, beta)), beta))

    def simple_reflection(self, i: int) -> WeylElement:
        return WeylElement(reflection_matrix(self.simple_roots[i]), (i,))

    def simple_label(self, i: int) -> int:
        return i + self.cartan.label_base

    def index_of_label(self, label: int) -> int:
        i = label - self.cartan.label_base
        if not 0 <= i < self.n_simple:
            raise ValueError(f"{self.cartan} has no simple root labelled {label}")
        return i


def _root_closure(simple: list[Vector]) -> set[Vector]:
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = reflect(v, a)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    return roots


def expected_positive_count(t: CartanType) -> int:
    n = t.rank
    return {"A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[t.family]


@lru_cache(maxsize=None)
def build_root_datum(t: CartanType) -> RootDatum:
    """Root datum with positive roots generated by closure under reflections."""
    if not isinstance(t, CartanType):
        t = CartanType(*t)
    simple = _simple_roots(t)
    roots = _root_closure(simple)
    positive = []
    for r in roots:
        c = linalg.solve(simple, r)
        if c is None:
            raise AssertionError("root outside the span of simple roots")
        c = linalg.as_int_if_integral(c)
        if any(isinstance(x, Fraction) for x in c):
            raise AssertionError("non-integral simple-root coordinates")
        if all(x >= 0 for x in c):
            positive.append(r)
        elif not all(x <= 0 for x in c):
            raise AssertionError("root with mixed-sign coordinates")
    positive.sort(reverse=True)
    if len(positive) != expected_positive_count(t):
        raise AssertionError(f"{t}: found {len(positive)} positive roots")
    n = t.dim
    return RootDatum(
        cartan=t,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        lattice_basis=tuple(_e(n, i) for i in range(n)),
        bilinear_form=linalg.identity(n),
    )


def pairing(datum: RootDatum, lam: Sequence, alpha: Sequence) -> Fraction:
    """<lam, alpha> = 2 (lam, alpha) / (alpha, alpha) for a root alpha."""
    a = tuple(alpha)
    if a not in datum.roots:
        raise NotARoot(f"{a} is not a root of {datum.cartan}")
    return Fraction(2 * datum.form(lam, a), datum.form(a, a))


def rho(datum: RootDatum) -> Vector:
    s = tuple(map(sum, zip(*datum.positive_roots)))
    return linalg.scale(Fraction(1, 2), s)


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(linalg.identity(datum.dim), ())


def longest_element(datum: RootDatum, theta) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``theta``.

    Greedy right multiplication: while some simple root of theta is still
    sent to a positive root, extend the word by that reflection.
    """
    theta = tuple(sorted(set(theta)))
    cache = datum._longest
    if theta not in cache:
        cache[theta] = _longest(datum, theta)
    return cache[theta]


def _longest(datum: RootDatum, theta) -> WeylElement:
    w = identity_element(datum)
    while True:
        for i in theta:
            if datum.is_positive(w(datum.simple_roots[i])):
                w = w * datum.simple_reflection(i)
                break
        else:
            return w


def w0_for_parabolic(datum: RootDatum, alphaP_index: int) -> WeylElement:
    """w_0 = w_{l,G} w_{l,Theta} for Theta = Pi minus alpha_P."""
    all_idx = range(datum.n_simple)
    theta = [i for i in all_idx if i != alphaP_index]
    w0 = longest_element(datum, all_idx) * longest_element(datum, theta)
    simple = set(datum.simple_roots)
    for i in theta:
        if w0(datum.simple_roots[i]) not in simple:
            raise AssertionError("w0(Theta) is not contained in the simple roots")
    if datum.is_positive(w0(datum.simple_roots[alphaP_index])):
        raise AssertionError("w0(alpha_P) is positive")
    return w0


def weyl_group(datum: RootDatum, theta=None) -> list[WeylElement]:
    """All elements of W (or W_theta) by breadth-first closure. Small ranks only."""
    idx = range(datum.n_simple) if theta is None else sorted(theta)
    gens = [datum.simple_reflection(i) for i in idx]
    e = identity_element(datum)
    seen = {e.matrix: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = w * s
                if u.matrix not in seen:
                    seen[u.matrix] = u
                    nxt.append(u)
        frontier = nxt
    return list(seen.values())
