"""Command-line front end.

    lsarith ls-report <A|B|C|D> <rank> <label|all> [--json|--table]
    lsarith gl2 --chars FILE -p P -m M [--normalised] [--family]
                [--oracle -R R -a A] [--galois] [--equivariance]
    lsarith verify <rootsys|parabolic|lsdecomp|gl2|all>

Simple roots are named by their textbook labels: 1..rank-1 for A (rank is
the GL size N), 1..rank for B and C, 0..rank-1 for D.

Exit codes: 0 success, 1 failed check, 2 invalid request, 3 convergence
gate failed, 4 pole of an L-value.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import serialize
from .exactnum import Pole, SmoothCharacter, weight_consistency
from .gl2op import (
    ConvergenceError,
    coset_basis,
    galois_transport_check,
    intertwiner_matrix,
    k_equivariance_check,
    k_generators,
    normalized_matrix,
    numeric_oracle,
    rational_family,
)
from .gl2op.cosets import LevelTooLarge
from .gl2op.oracle import expected_ratio
from .lsdecomp import ls_report
from .parabolic import MaximalParabolic, all_parabolics
from .rootsys import UnsupportedRank

EXIT_FAIL, EXIT_USAGE, EXIT_CONVERGENCE, EXIT_POLE = 1, 2, 3, 4


def _table(reports) -> str:
    head = ["type", "label", "k", "int", "m", "dims", "eps", "h", "crit", "self"]
    rows = []
    for P, r in reports:
        rows.append([
            f"{r.group.family}{r.group.rank}", str(P.label), str(r.k), "y" if r.integral else "n", str(r.m),
            ",".join(map(str, r.dims)), ",".join(map(str, r.epsilons)), ",".join(map(str, r.h)),
            "y" if r.critical else "n", "y" if r.associate_self else "n",
        ])
    widths = [max(len(x) for x in col) for col in zip(head, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*row).rstrip() for row in [head, *rows]) + "\n"


def cmd_ls_report(args) -> int:
    try:
        if args.label == "all":
            parabolics = list(all_parabolics(args.family, args.rank))
        else:
            parabolics = [MaximalParabolic.of(args.family, args.rank, int(args.label))]
    except (UnsupportedRank, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    reports = [(P, ls_report(P)) for P in parabolics]
    if args.format == "table":
        sys.stdout.write(_table(reports))
        return 0
    docs = [serialize.report(r) for _, r in reports]
    sys.stdout.write(serialize.dumps(docs if args.label == "all" else docs[0]))
    return 0


def _load_pair(path: str) -> tuple[SmoothCharacter, SmoothCharacter]:
    with open(path) as fh:
        doc = json.load(fh)
    return SmoothCharacter.from_json(doc["chi1"]), SmoothCharacter.from_json(doc["chi2"])


def cmd_gl2(args) -> int:
    try:
        chi1, chi2 = _load_pair(args.chars)
        coset_basis(args.p, args.m)
    except (OSError, KeyError, ValueError, TypeError, LevelTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        t = intertwiner_matrix(chi1, chi2, args.p, args.m)
        shown = normalized_matrix(chi1, chi2, args.p, args.m) if args.normalised else t
        doc = {
            "p": args.p,
            "m": args.m,
            "chi1": t.chi1.to_json(),
            "chi2": t.chi2.to_json(),
            "basis": [f"{k}:{a}" for k, a in coset_basis(args.p, args.m).labels],
            "normalised": bool(args.normalised),
            "matrix": serialize.matrix(shown),
            # informational: |chi(p)| = p^(-w/2) under the first embedding
            "weights_consistent": [weight_consistency(t.chi1), weight_consistency(t.chi2)],
        }
        status = 0
        if args.family:
            doc["family"] = serialize.family(rational_family(chi1, chi2, args.p, args.m))
        if args.galois:
            std = galois_transport_check(intertwiner_matrix, chi1, chi2, args.p, args.m)
            nrm = galois_transport_check(normalized_matrix, chi1, chi2, args.p, args.m)
            doc["galois"] = {str(a): {"standard": std[a], "normalised": nrm[a]} for a in sorted(std)}
            if not all(std.values()) or not all(nrm.values()):
                status = EXIT_FAIL
        if args.equivariance:
            gens = k_generators(args.p, args.m)
            ok = all(k_equivariance_check(chi1, chi2, args.p, args.m, k) for k in gens)
            doc["equivariance"] = {"generators": gens, "commutes": ok}
            if not ok:
                status = EXIT_FAIL
        if args.oracle:
            n = t.conductor
            if gcd(args.a, n) != 1:
                print(f"error: embedding index {args.a} is not coprime to {n}", file=sys.stderr)
                return EXIT_USAGE
            o = numeric_oracle(chi1, chi2, args.p, args.m, R=args.R, a=args.a)
            dev = o.deviation(t)
            rel = o.relative_errors(t)
            doc["oracle"] = {
                "R": args.R,
                "embedding": args.a,
                "deviation": dev,
                "max_abs_deviation": max(max(r) for r in dev),
                "max_relative_error": max(max(r) for r in rel),
                "tail_bound": o.tail_bound,
                "convergence_ratio": o.convergence_ratio(),
                "expected_ratio": expected_ratio(t.chi1, t.chi2),
            }
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except Pole as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_POLE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(serialize.dumps(doc))
    return status


def cmd_verify(args) -> int:
    from .verify import run

    return 0 if run(args.suite) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lsarith", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    ls = sub.add_parser("ls-report", help="Langlands-Shahidi data of maximal parabolics")
    ls.add_argument("family", choices=["A", "B", "C", "D"])
    ls.add_argument("rank", type=int)
    ls.add_argument("label", help="simple-root label or 'all'")
    fmt = ls.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--table", dest="format", action="store_const", const="table")
    ls.set_defaults(format="json", func=cmd_ls_report)

    g = sub.add_parser("gl2", help="GL(2) intertwining operator on K(m)-invariants")
    g.add_argument("--chars", required=True, help='JSON file {"chi1": ..., "chi2": ...}')
    g.add_argument("-p", type=int, required=True)
    g.add_argument("-m", type=int, required=True)
    g.add_argument("--normalised", action="store_true")
    g.add_argument("--family", action="store_true")
    g.add_argument("--oracle", action="store_true")
    g.add_argument("-R", type=int, default=40)
    g.add_argument("-a", type=int, default=1)
    g.add_argument("--galois", action="store_true")
    g.add_argument("--equivariance", action="store_true")
    g.set_defaults(func=cmd_gl2)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=["rootsys", "parabolic", "lsdecomp", "gl2", "all"])
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
