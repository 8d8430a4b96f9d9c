"""Canonical JSON forms. Rationals are "num/den" strings and cyclotomic
numbers are {"zeta_order": n, "coeffs": [...]}, so exact output is free of
floating point and byte-stable."""

from __future__ import annotations

import json
from fractions import Fraction

from .exactnum.characters import format_fraction
from .exactnum.cyclotomic import CycNumber
from .gl2op.operator import LaurentPoly, OperatorMatrix, RationalFamilyMatrix
from .lsdecomp import LSReport


def rat(x) -> str:
    return format_fraction(Fraction(x))


def vec(v) -> list[str]:
    return [rat(x) for x in v]


def cyc(x: CycNumber) -> dict:
    return {"zeta_order": x.conductor, "coeffs": vec(x.coeffs)}


def report(r: LSReport) -> dict:
    return {
        "type": r.group.family,
        "rank": r.group.rank,
        "alpha_p": vec(r.alphaP),
        "rho_p": vec(r.rhoP),
        "gamma_p": vec(r.gammaP),
        "k": rat(r.k),
        "integral": r.integral,
        "m": r.m,
        "dims": list(r.dims),
        "epsilons": list(r.epsilons),
        "h": vec(r.h),
        "critical": r.critical,
        "self_associate": r.associate_self,
    }


def matrix(t: OperatorMatrix) -> list[list[dict]]:
    return [[cyc(x) for x in row] for row in t.entries]


def laurent(f: LaurentPoly) -> dict:
    lo, coeffs = f.coefficient_list()
    return {"lowest_degree": lo, "coeffs": [cyc(c) for c in coeffs]}


def family(f: RationalFamilyMatrix) -> dict:
    return {
        "variable": "z",
        "denominator": laurent(f.denominator),
        "entries": [
            [{"numerator": laurent(n), "denominator_power": e} for n, e in zip(nrow, erow)]
            for nrow, erow in zip(f.numerators, f.powers)
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"
