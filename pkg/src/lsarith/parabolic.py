"""Maximal parabolic data: Sigma(N_P), rho_P, gamma_P, point of evaluation,
restriction to the split centre A_P and the integrality test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg
from .linalg import Matrix, Vector
from .rootsys import (
    CartanType,
    RootDatum,
    WeylElement,
    build_root_datum,
    pairing,
    w0_for_parabolic,
)


@dataclass(frozen=True)
class MaximalParabolic:
    datum: RootDatum
    alphaP_index: int

    def __post_init__(self):
        if not 0 <= self.alphaP_index < self.datum.n_simple:
            raise ValueError(f"{self.datum.cartan}: simple-root index {self.alphaP_index} out of range")

    @classmethod
    def of(cls, family: str, rank: int, label: int) -> "MaximalParabolic":
        """Parabolic from a family, rank and textbook simple-root label."""
        d = build_root_datum(CartanType(family, rank))
        return cls(d, d.index_of_label(label))

    @property
    def theta(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.datum.n_simple) if i != self.alphaP_index)

    @property
    def alphaP(self) -> Vector:
        return self.datum.simple_roots[self.alphaP_index]

    @property
    def label(self) -> int:
        return self.datum.simple_label(self.alphaP_index)

    def __repr__(self) -> str:
        return f"MaximalParabolic({self.datum.cartan}, alpha_{self.label})"

    @cached_property
    def sigma_N(self) -> tuple[Vector, ...]:
        return tuple(
            b for b in self.datum.positive_roots if self.datum.simple_coords(b)[self.alphaP_index] > 0
        )

    @cached_property
    def sigma_N_set(self) -> frozenset[Vector]:
        return frozenset(self.sigma_N)

    @cached_property
    def rho_P(self) -> Vector:
        s = tuple(map(sum, zip(*self.sigma_N)))
        return linalg.scale(Fraction(1, 2), s)

    @cached_property
    def gamma_P(self) -> Vector:
        g = linalg.scale(1 / pairing(self.datum, self.rho_P, self.alphaP), self.rho_P)
        if pairing(self.datum, g, self.alphaP) != 1:
            raise AssertionError("<gamma_P, alpha_P> != 1")
        for i in self.theta:
            if pairing(self.datum, g, self.datum.simple_roots[i]) != 0:
                raise AssertionError("gamma_P not orthogonal to Theta")
        return g

    @cached_property
    def restriction(self) -> "CentreRestriction":
        return _centre_restriction(self)


def sigma_N(P: MaximalParabolic) -> tuple[Vector, ...]:
    return P.sigma_N


def rho_P(P: MaximalParabolic) -> Vector:
    return P.rho_P


def gamma_P(P: MaximalParabolic) -> Vector:
    return P.gamma_P


def point_of_evaluation(P: MaximalParabolic) -> Fraction:
    k = -pairing(P.datum, P.rho_P, P.alphaP)
    if (2 * k).denominator != 1:
        raise AssertionError("point of evaluation is not half-integral")
    return k


@dataclass(frozen=True)
class CentreRestriction:
    """Restriction of characters of T to the split centre A_P.

    ``projection`` is the W_Theta-averaging map on coordinates. The lattice
    X*(A_P) is realized as the image of ``source`` (by default the root
    lattice, see :func:`centre_restriction`) with ``image_lattice`` its HNF
    after scaling by ``denominator``.
    """

    projection: Matrix
    image_lattice: tuple[tuple[int, ...], ...]
    denominator: int
    source: str

    def __call__(self, lam) -> Vector:
        return linalg.mat_vec(self.projection, lam)

    def contains(self, lam) -> bool:
        v = self(lam)
        scaled = [x * self.denominator for x in v]
        if any(x.denominator != 1 for x in scaled):
            return False
        return linalg.in_lattice(self.image_lattice, [int(x) for x in scaled])


def _projection(P: MaximalParabolic) -> Matrix:
    d = P.datum
    if not P.theta:
        return tuple(tuple(Fraction(x) for x in row) for row in linalg.identity(d.dim))
    # Averaging over the reflection group W_Theta is the orthogonal projection
    # onto its fixed space, the orthogonal complement of span(Theta).
    return linalg.orthogonal_projector([d.simple_roots[i] for i in P.theta], d.bilinear_form)


def _centre_restriction(P: MaximalParabolic, source: str = "roots") -> CentreRestriction:
    proj = _projection(P)
    d = P.datum
    if source == "roots":
        gens = d.simple_roots
    elif source == "characters":
        gens = d.lattice_basis
    else:
        raise ValueError(f"unknown lattice source {source!r}")
    images = [linalg.mat_vec(proj, g) for g in gens]
    den, ints = linalg.clear_denominators(images)
    hnf = linalg.hermite_normal_form(ints)
    return CentreRestriction(proj, tuple(tuple(r) for r in hnf), den, source)


def centre_restriction(P: MaximalParabolic, source: str = "roots") -> CentreRestriction:
    """Restriction to A_P.

    ``source="roots"`` realizes X*(A_P) as the image of the root lattice
    (the character lattice of the adjoint group); this is the realization
    under which rho_P is integral for GL(n) x GL(n') in GL(N) iff nn' is even,
    always for the D-family Levi GL(1) x O(n, n), and for the Siegel Levi of
    Sp(2n) iff n = 0, 3 mod 4. ``source="characters"`` uses the coordinate
    lattice X*(T) = Z^n instead; it agrees with the root version on the A and
    D families but declares every Siegel rho_P of type C integral.
    """
    if source == "roots":
        return P.restriction
    return _centre_restriction(P, source)


def is_integral_on_A(P: MaximalParabolic, lam, source: str = "roots") -> bool:
    return centre_restriction(P, source).contains(lam)


def associate_parabolic(P: MaximalParabolic) -> tuple[MaximalParabolic, WeylElement]:
    d = P.datum
    w0 = w0_for_parabolic(d, P.alphaP_index)
    image = {w0(d.simple_roots[i]) for i in P.theta}
    rest = [i for i, a in enumerate(d.simple_roots) if a not in image]
    if len(rest) != 1:
        raise AssertionError("w0(Theta) does not omit exactly one simple root")
    Q = MaximalParabolic(d, rest[0])
    if pairing(d, Q.rho_P, Q.alphaP) != pairing(d, P.rho_P, P.alphaP):
        raise AssertionError("<rho_Q, alpha_Q> != <rho_P, alpha_P>")
    return Q, w0


@lru_cache(maxsize=None)
def all_parabolics(family: str, rank: int) -> tuple[MaximalParabolic, ...]:
    d = build_root_datum(CartanType(family, rank))
    return tuple(MaximalParabolic(d, i) for i in range(d.n_simple))
