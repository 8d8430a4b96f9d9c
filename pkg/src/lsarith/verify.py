"""Invariant suites behind ``lsarith verify``. Each check returns True/False;
the runner prints one verdict line per check."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterator

from . import linalg
from .exactnum import CycNumber, SmoothCharacter
from .gl2op import (
    galois_transport_check,
    intertwiner_matrix,
    k_equivariance_check,
    k_generators,
    normalized_matrix,
    numeric_oracle,
    rational_family,
)
from .lsdecomp import adjoint_levels, exponent_linearity_check, h_exponents, ls_report
from .parabolic import MaximalParabolic, all_parabolics, associate_parabolic, is_integral_on_A, point_of_evaluation
from .rootsys import (
    CartanType,
    build_root_datum,
    expected_positive_count,
    pairing,
    w0_for_parabolic,
)

Check = tuple[str, Callable[[], bool]]

LOW_RANK = {"A": 2, "B": 1, "C": 1, "D": 2}
SWEEP_RANK = 6


def _data(max_rank: int):
    for fam in "ABCD":
        for r in range(LOW_RANK[fam], max_rank + 1):
            yield build_root_datum(CartanType(fam, r))


def _parabolics(max_rank: int) -> Iterator[MaximalParabolic]:
    for fam in "ABCD":
        for r in range(LOW_RANK[fam], max_rank + 1):
            yield from all_parabolics(fam, r)


def eps(n: int) -> int:
    """Levi bit of a GL_n factor."""
    return (n - 1) % 2


# -- rootsys -----------------------------------------------------------------


def _positive_counts() -> bool:
    return all(len(d.positive_roots) == expected_positive_count(d.cartan) for d in _data(9))


def _form_invariance() -> bool:
    rng = random.Random(0)
    for d in _data(SWEEP_RANK):
        for _ in range(5):
            lam = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d.dim)]
            mu = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d.dim)]
            for i in range(d.n_simple):
                s = d.simple_reflection(i)
                if d.form(s(lam), s(mu)) != d.form(lam, mu):
                    return False
    return True


def _lattice_pairings() -> bool:
    return all(
        pairing(d, e, a).denominator == 1 for d in _data(9) for e in d.lattice_basis for a in d.simple_roots
    )


def _w0_conditions() -> bool:
    # w0_for_parabolic raises if either defining condition fails
    for d in _data(SWEEP_RANK):
        for i in range(d.n_simple):
            w0_for_parabolic(d, i)
    return True


# -- parabolic ---------------------------------------------------------------


def _gamma_pairings() -> bool:
    for P in _parabolics(SWEEP_RANK):
        d = P.datum
        if pairing(d, P.gamma_P, P.alphaP) != 1:
            return False
        if any(pairing(d, P.gamma_P, d.simple_roots[i]) for i in P.theta):
            return False
    return True


def _half_integral_k() -> bool:
    return all((2 * point_of_evaluation(P)).denominator == 1 for P in _parabolics(SWEEP_RANK))


def _two_rho_integral() -> bool:
    return all(is_integral_on_A(P, linalg.scale(2, P.rho_P)) for P in _parabolics(SWEEP_RANK))


def _associate_pairing() -> bool:
    for P in _parabolics(SWEEP_RANK):
        Q, _ = associate_parabolic(P)
        if pairing(P.datum, Q.rho_P, Q.alphaP) != pairing(P.datum, P.rho_P, P.alphaP):
            return False
    return True


def _projection_properties() -> bool:
    rng = random.Random(1)
    for P in _parabolics(5):
        d, res = P.datum, P.restriction
        if any(any(res(d.simple_roots[i])) for i in P.theta):
            return False
        if res(P.gamma_P) != P.gamma_P:
            return False
        for _ in range(10):
            lam = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d.dim)]
            if res(res(lam)) != res(lam):
                return False
    return True


def _integrality_verdicts() -> bool:
    gl = all(
        is_integral_on_A(P, P.rho_P) == (P.label * (N - P.label) % 2 == 0)
        for N in range(2, 10)
        for P in all_parabolics("A", N)
    )
    dd = all(is_integral_on_A(P, P.rho_P) for n in range(2, 9) for P in [MaximalParabolic.of("D", n + 1, 0)])
    cc = all(
        is_integral_on_A(P, P.rho_P) == (n % 4 in (0, 3)) for n in range(2, 10) for P in [MaximalParabolic.of("C", n, n)]
    )
    return gl and dd and cc


# -- lsdecomp ----------------------------------------------------------------


def _gl_table() -> bool:
    for N in range(2, 10):
        for n in range(1, N):
            r = ls_report(MaximalParabolic.of("A", N, n))
            n2 = N - n
            ok = (
                r.integral == (n * n2 % 2 == 0)
                and r.k == Fraction(-N, 2)
                and r.m == 1
                and r.dims == (n * n2,)
                and r.h == (Fraction(eps(n) - eps(n2), 2),)
                and r.critical
            )
            if not ok:
                return False
    return True


def _orthogonal_table() -> bool:
    for n in range(2, 9):
        r = ls_report(MaximalParabolic.of("D", n + 1, 0))
        if not (r.integral and r.k == -n and r.m == 1 and r.dims == (2 * n,) and r.h == (0,) and r.critical):
            return False
    return True


def _exterior_square_table() -> bool:
    for n in range(2, 10):
        r = ls_report(MaximalParabolic.of("C", n, n))
        e = eps(n)
        ok = (
            r.integral == (n % 4 in (0, 3))
            and r.k == Fraction(-(n + 1), 2)
            and r.dims == (n, n * (n - 1) // 2)
            and r.h == (Fraction(e, 2), Fraction(e))
            and r.critical
        )
        if not ok:
            return False
    return True


def _levels_structure() -> bool:
    for P in _parabolics(SWEEP_RANK):
        blocks = adjoint_levels(P)
        if [b.j for b in blocks] != list(range(1, len(blocks) + 1)):
            return False
        if sum(b.dim for b in blocks) != len(P.sigma_N):
            return False
    return True


def _h_linear() -> bool:
    # h_exponents asserts well-definedness within each level
    for P in _parabolics(SWEEP_RANK):
        h = h_exponents(P)
        if any(hj != j * h[0] for j, hj in enumerate(h, start=1)):
            return False
        if any((2 * hj).denominator != 1 for hj in h):
            return False
    return True


def _exponent_linearity() -> bool:
    return all(exponent_linearity_check(P) for P in _parabolics(SWEEP_RANK))


# -- gl2 ---------------------------------------------------------------------


def _gk_identity() -> bool:
    for q in (2, 3, 5):
        for gap in (4, 6):
            c = Fraction(1, q ** (gap // 2))
            chi1 = SmoothCharacter.unramified(q, c, gap)
            chi2 = SmoothCharacter.trivial(q)
            t = intertwiner_matrix(chi1, chi2, q, 0).entries[0][0]
            tn = normalized_matrix(chi1, chi2, q, 0).entries[0][0]
            if t != (1 - c) / (1 - c * q) or tn != 1:
                return False
    return True


def sample_pairs() -> list[tuple[int, int, SmoothCharacter, SmoothCharacter]]:
    """A fixed panel of (p, m, chi1, chi2) covering the three delta cases."""
    z4 = CycNumber.zeta(4)
    return [
        (2, 0, SmoothCharacter.unramified(2, Fraction(1, 4), 4), SmoothCharacter.trivial(2)),
        (2, 1, SmoothCharacter.unramified(2, z4 / 8, 6), SmoothCharacter.unramified(2, z4**3, 0)),
        (3, 1, SmoothCharacter.legendre(3, Fraction(1, 9), 4), SmoothCharacter.trivial(3)),
        (3, 1, SmoothCharacter.legendre(3, z4 / 9, 4), SmoothCharacter.legendre(3, 1, 0)),
        (3, 0, SmoothCharacter.unramified(3, -z4 / 27, 6), SmoothCharacter.trivial(3)),
    ]


def _galois() -> bool:
    for p, m, a, b in sample_pairs():
        for build in (intertwiner_matrix, normalized_matrix):
            if not all(galois_transport_check(build, a, b, p, m).values()):
                return False
    return True


def _oracle() -> bool:
    for p, m, a, b in sample_pairs():
        o = numeric_oracle(a, b, p, m, R=40)
        if max(max(r) for r in o.relative_errors(intertwiner_matrix(a, b, p, m))) >= 1e-8:
            return False
    return True


def _family() -> bool:
    for p, m, a, b in sample_pairs():
        f = rational_family(a, b, p, m)
        if not f.specialize(1).same_entries(intertwiner_matrix(a, b, p, m)):
            return False
        if any(e > 1 for row in f.powers for e in row):
            return False
    return True


def _equivariance() -> bool:
    for p, m, a, b in sample_pairs():
        if not all(k_equivariance_check(a, b, p, m, k) for k in k_generators(p, m)):
            return False
    return True


SUITES: dict[str, list[Check]] = {
    "rootsys": [
        ("positive root counts match the textbook counts (rank <= 9)", _positive_counts),
        ("bilinear form is invariant under simple reflections", _form_invariance),
        ("lattice vectors pair integrally with simple roots", _lattice_pairings),
        ("w0 maps Theta into simple roots and alpha_P to a negative root", _w0_conditions),
    ],
    "parabolic": [
        ("<gamma_P, alpha_P> = 1 and gamma_P is orthogonal to Theta", _gamma_pairings),
        ("2k is an integer", _half_integral_k),
        ("2 rho_P restricts integrally to A_P", _two_rho_integral),
        ("associate parabolic has the same <rho, alpha>", _associate_pairing),
        ("A_P projection kills Theta, fixes gamma_P, is idempotent", _projection_properties),
        ("integrality verdicts for GL, orthogonal and Siegel cases", _integrality_verdicts),
    ],
    "lsdecomp": [
        ("Rankin-Selberg table (GL_N, N <= 9)", _gl_table),
        ("orthogonal table (D_{n+1}, n <= 8)", _orthogonal_table),
        ("exterior-square table (C_n, n <= 9)", _exterior_square_table),
        ("levels contiguous and dimensions sum to |Sigma(N_P)|", _levels_structure),
        ("h_j well defined, half-integral and equal to j h_1", _h_linear),
        ("restricted coroots scale linearly with the level", _exponent_linearity),
    ],
    "gl2": [
        ("unramified normalised operator is 1", _gk_identity),
        ("Galois transport of standard and normalised operators", _galois),
        ("exact operator matches the numeric oracle at R = 40", _oracle),
        ("rational family specializes at z = 1, denominator power <= 1", _family),
        ("operator commutes with right translation by generators of K", _equivariance),
    ],
}


def run(suite: str, out=print) -> bool:
    names = list(SUITES) if suite == "all" else [suite]
    ok = True
    for name in names:
        for label, fn in SUITES[name]:
            try:
                passed = bool(fn())
                detail = ""
            except Exception as e:  # a raised assertion is a failed invariant
                passed = False
                detail = f" ({type(e).__name__}: {e})"
            out(f"{'PASS' if passed else 'FAIL'} [{name}] {label}{detail}")
            ok &= passed
    return ok
