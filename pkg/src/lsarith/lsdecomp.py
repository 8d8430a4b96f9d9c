"""Adjoint decomposition by levels, Levi epsilon bits, h_j exponents and the
criticality test, gathered into :class:`LSReport`."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .linalg import Vector
from .parabolic import (
    MaximalParabolic,
    associate_parabolic,
    is_integral_on_A,
    point_of_evaluation,
)
from .rootsys import CartanType, pairing


class NotInNilradical(ValueError):
    pass


@dataclass(frozen=True)
class LevelBlock:
    j: int
    roots: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class LeviFactor:
    """A simple factor of the Levi (or a GL(1) direction).

    ``character`` is a generator of the rational characters of the factor
    as a weight (the determinant for GL-type factors, zero when the factor
    has no nontrivial rational characters).
    """

    simple: tuple[int, ...]
    coords: tuple[int, ...]
    kind: str
    rho: Vector
    character: Vector

    @property
    def epsilon(self) -> int:
        return 0 if all(x.denominator == 1 for x in self.rho) else 1


@dataclass(frozen=True)
class LSReport:
    group: CartanType
    alphaP_label: int
    alphaP: Vector
    rhoP: Vector
    gammaP: Vector
    k: Fraction
    integral: bool
    m: int
    dims: tuple[int, ...]
    epsilons: tuple[int, ...]
    h: tuple[Fraction, ...]
    critical: bool
    associate_self: bool


def level(P: MaximalParabolic, beta) -> int:
    b = tuple(beta)
    if b not in P.sigma_N_set:
        raise NotInNilradical(f"{b} is not a root of N_P")
    j = pairing(P.datum, P.gamma_P, b)
    if j.denominator != 1 or j <= 0:
        raise AssertionError(f"level {j} is not a positive integer")
    return int(j)


@lru_cache(maxsize=None)
def adjoint_levels(P: MaximalParabolic) -> tuple[LevelBlock, ...]:
    by_level: dict[int, list[Vector]] = {}
    for b in P.sigma_N:
        by_level.setdefault(level(P, b), []).append(b)
    m = max(by_level)
    if sorted(by_level) != list(range(1, m + 1)):
        raise AssertionError(f"levels {sorted(by_level)} are not contiguous")
    return tuple(LevelBlock(j, tuple(sorted(by_level[j], reverse=True))) for j in range(1, m + 1))


def _components(P: MaximalParabolic) -> list[list[int]]:
    """Theta split into groups of simple roots sharing coordinates.

    Connected Dynkin components are merged when their supports overlap, so
    that e.g. the two orthogonal A1's making up an SO(4) factor count once.
    """
    d = P.datum
    groups: list[tuple[set[int], set[int]]] = []
    for i in P.theta:
        supp = {c for c, x in enumerate(d.simple_roots[i]) if x}
        hits = [g for g in groups if g[1] & supp or any(d.form(d.simple_roots[i], d.simple_roots[j]) for j in g[0])]
        merged = ({i}, set(supp))
        for g in hits:
            merged[0].update(g[0])
            merged[1].update(g[1])
            groups.remove(g)
        groups.append(merged)
    return sorted((sorted(g[0]) for g in groups), key=lambda s: s[0])


def _chain_order(d, idx: list[int]) -> list[int] | None:
    adj = {i: [j for j in idx if j != i and d.form(d.simple_roots[i], d.simple_roots[j])] for i in idx}
    if any(len(v) > 2 for v in adj.values()):
        return None
    ends = [i for i in idx if len(adj[i]) <= 1]
    if not ends:
        return None
    order = [min(ends)]
    while len(order) < len(idx):
        nxt = [j for j in adj[order[-1]] if j not in order]
        if not nxt:
            return None
        order.append(nxt[0])
    return order


def _gl_determinant(d, idx: list[int]) -> Vector | None:
    """Determinant character of a GL-type factor, or None if not GL-type.

    Looks for signed unit vectors w_1..w_k with beta_j = w_j - w_{j+1} along
    the Dynkin chain; the determinant is their sum, sign-normalized so its
    leading nonzero coordinate is positive.
    """
    order = _chain_order(d, idx)
    if order is None:
        return None
    n = d.dim
    units = [tuple((s if c == i else 0) for c in range(n)) for i in range(n) for s in (1, -1)]
    unit_set = set(units)
    dets = []
    for w in units:
        ws = [w]
        for j in order:
            nxt = linalg.sub(ws[-1], d.simple_roots[j])
            if nxt not in unit_set or nxt in ws or linalg.scale(-1, nxt) in ws:
                break
            ws.append(nxt)
        else:
            det = tuple(sum(col) for col in zip(*ws))
            lead = next(x for x in det if x)
            dets.append(det if lead > 0 else linalg.scale(-1, det))
    if not dets:
        return None
    if len(set(dets)) != 1:
        raise AssertionError("ambiguous determinant character")
    return dets[0]


@lru_cache(maxsize=None)
def levi_factors(P: MaximalParabolic) -> tuple[LeviFactor, ...]:
    d = P.datum
    zero = tuple(Fraction(0) for _ in range(d.dim))
    factors = []
    covered: set[int] = set()
    for idx in _components(P):
        roots = [b for b in d.positive_roots if all(c == 0 or i in idx for i, c in enumerate(d.simple_coords(b)))]
        rho = linalg.scale(Fraction(1, 2), tuple(sum(col) for col in zip(*roots)))
        coords = sorted({c for i in idx for c, x in enumerate(d.simple_roots[i]) if x})
        covered.update(coords)
        det = _gl_determinant(d, idx)
        kind = f"GL{len(idx) + 1}" if det is not None else "semisimple"
        factors.append(LeviFactor(tuple(idx), tuple(coords), kind, rho, det if det is not None else zero))
    for c in range(d.dim):
        if c not in covered:
            e = tuple(Fraction(int(i == c)) for i in range(d.dim))
            factors.append(LeviFactor((), (c,), "GL1", zero, e))
    return tuple(sorted(factors, key=lambda f: f.coords[0]))


def epsilon_levi(P: MaximalParabolic) -> tuple[int, ...]:
    return tuple(f.epsilon for f in levi_factors(P))


def epsilon_weight(P: MaximalParabolic) -> Vector:
    """v_eps = sum_i (eps_i / 2) * restriction of the character of factor i."""
    v = tuple(Fraction(0) for _ in range(P.datum.dim))
    for f in levi_factors(P):
        if f.epsilon:
            v = linalg.add(v, linalg.scale(Fraction(f.epsilon, 2), P.restriction(f.character)))
    return v


def h_exponents(P: MaximalParabolic) -> tuple[Fraction, ...]:
    d = P.datum
    v = epsilon_weight(P)
    hs = []
    for blk in adjoint_levels(P):
        vals = {d.form(v, d.coroot(b)) for b in blk.roots}
        if len(vals) != 1:
            raise AssertionError(f"h_{blk.j} depends on the root chosen: {vals}")
        h = vals.pop()
        if (2 * h).denominator != 1:
            raise AssertionError(f"h_{blk.j} = {h} is not half-integral")
        hs.append(h)
    return tuple(hs)


def is_critical(P: MaximalParabolic) -> bool:
    k = point_of_evaluation(P)
    return all((j * k - h).denominator == 1 for j, h in enumerate(h_exponents(P), start=1))


def exponent_linearity_check(P: MaximalParabolic) -> bool:
    """Restriction of every level-j coroot is j times that of a level-1 coroot."""
    d = P.datum
    blocks = adjoint_levels(P)
    base = {P.restriction(d.coroot(b)) for b in blocks[0].roots}
    if len(base) != 1:
        return False
    (r1,) = base
    return all(P.restriction(d.coroot(b)) == linalg.scale(blk.j, r1) for blk in blocks for b in blk.roots)


def ls_report(P: MaximalParabolic) -> LSReport:
    blocks = adjoint_levels(P)
    Q, _ = associate_parabolic(P)
    return LSReport(
        group=P.datum.cartan,
        alphaP_label=P.label,
        alphaP=P.alphaP,
        rhoP=P.rho_P,
        gammaP=P.gamma_P,
        k=point_of_evaluation(P),
        integral=is_integral_on_A(P, P.rho_P),
        m=len(blocks),
        dims=tuple(b.dim for b in blocks),
        epsilons=epsilon_levi(P),
        h=h_exponents(P),
        critical=is_critical(P),
        associate_self=Q.alphaP_index == P.alphaP_index,
    )
