"""Command-line front end.

Exit codes: 0 for success / all PASS, 1 when a verifier FAILs or a
stability check certifies instability (the witness is in the output), 2 for
usage or input errors.  Output is deterministic for a fixed command line:
seeds are always echoed and rationals are serialized as exact strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import jsonio
from .mixed import mixed_det, mixed_det_char, mixed_det_pencil
from .polycore import MultiPoly, UniPoly, inertia, interlaces
from .stability import (
    CERTIFIED_UNSTABLE,
    hyperbolic_in_direction,
    line_restriction_test,
    multiaffine_stability_check,
)
from .theorems import CLAIMS, fischer_alpha, fischer_k, majorizes, run_verification

SCHEMA = 1


def _threads() -> int:
    raw = os.environ.get("MIXEDDET_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in sorted(payload.items()):
        print(f"{key}: {json.dumps(value, sort_keys=True)}")


def _parse_int_csv(raw: str) -> List[int]:
    return [int(x) for x in raw.split(",") if x.strip() != ""]


def _parse_rational_csv(raw: str) -> List[Fraction]:
    return [jsonio.parse_rational(x.strip()) for x in raw.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixeddet",
        description="Exact mixed determinants, stability predicates, and "
        "determinantal-inequality verifiers over Gaussian rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("eta", help="mixed determinant of matrix files")
    p.add_argument("matrices", nargs="+")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    common(p)

    p = sub.add_parser("eta-char", help="univariate mixed determinant of (zA, -B)")
    p.add_argument("a")
    p.add_argument("b")
    common(p)

    p = sub.add_parser("eta-pencil", help="multivariate mixed determinant of pencils")
    p.add_argument("pencils", nargs="+")
    p.add_argument("--augment", type=int, default=None, metavar="J",
                   help="append variable v and add v * (deletion of row/col J)")
    p.add_argument("--method", choices=("auto", "symbolic", "interpolation"),
                   default="auto")
    common(p)

    p = sub.add_parser("inertia", help="root-sign counts of a hyperbolic polynomial")
    p.add_argument("poly")
    common(p)

    p = sub.add_parser("interlace", help="whether two polynomials' roots interlace")
    p.add_argument("p")
    p.add_argument("q")
    common(p)

    p = sub.add_parser("fischer", help="symmetrized Fischer products")
    p.add_argument("matrix")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--alpha", type=str, default=None, metavar="CSV")
    common(p)

    p = sub.add_parser("majorize", help="majorization comparison x ≺ y")
    p.add_argument("x", metavar="X_CSV")
    p.add_argument("y", metavar="Y_CSV")
    common(p)

    p = sub.add_parser("stable", help="stability checks")
    p.add_argument("action", choices=("check",))
    p.add_argument("poly")
    p.add_argument("--mode", choices=("multiaffine", "lines", "direction"),
                   default="multiaffine")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--direction", type=str, default=None, metavar="CSV")
    p.add_argument("--bound", type=int, default=100)
    common(p)

    p = sub.add_parser("verify", help="randomized theorem verification suites")
    p.add_argument("claim", metavar="CLAIM",
                   help=f"one of {', '.join(CLAIMS)} or ALL")
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--bound", type=int, default=10)
    common(p)

    return parser


def _cmd_eta(args) -> int:
    mats = [jsonio.load_matrix(path) for path in args.matrices]
    value = mixed_det(mats, mode=args.mode)
    payload = {"schema": SCHEMA, "command": "eta", "seed": args.seed,
               "mode": args.mode, "m": len(mats), "n": mats[0].n}
    if args.mode == "float":
        payload["eta"] = value
    else:
        payload["eta"] = jsonio.format_gaussian(value)
    _emit(payload, args.output)
    return 0


def _cmd_eta_char(args) -> int:
    a = jsonio.load_matrix(args.a)
    b = jsonio.load_matrix(args.b)
    p = mixed_det_char(a, b)
    _emit(
        {
            "schema": SCHEMA,
            "command": "eta-char",
            "seed": args.seed,
            "zero": p.is_zero,
            "poly": jsonio.unipoly_to_obj(p),
        },
        args.output,
    )
    return 0


def _cmd_eta_pencil(args) -> int:
    pens = [jsonio.load_pencil(path) for path in args.pencils]
    f = mixed_det_pencil(pens, augment_delete=args.augment, method=args.method)
    _emit(
        {
            "schema": SCHEMA,
            "command": "eta-pencil",
            "seed": args.seed,
            "nvars": f.nvars,
            "poly": jsonio.multipoly_to_obj(f),
        },
        args.output,
    )
    return 0


def _cmd_inertia(args) -> int:
    p = jsonio.load_poly(args.poly)
    if isinstance(p, MultiPoly):
        p = p.to_unipoly()
    iota = inertia(p)
    _emit(
        {
            "schema": SCHEMA,
            "command": "inertia",
            "seed": args.seed,
            "plus": iota.plus,
            "zero": iota.zero,
            "minus": iota.minus,
        },
        args.output,
    )
    return 0


def _cmd_interlace(args) -> int:
    p = jsonio.load_poly(args.p)
    q = jsonio.load_poly(args.q)
    if isinstance(p, MultiPoly):
        p = p.to_unipoly()
    if isinstance(q, MultiPoly):
        q = q.to_unipoly()
    _emit(
        {
            "schema": SCHEMA,
            "command": "interlace",
            "seed": args.seed,
            "interlaces": interlaces(p, q),
        },
        args.output,
    )
    return 0


def _cmd_fischer(args) -> int:
    a = jsonio.load_matrix(args.matrix)
    payload = {"schema": SCHEMA, "command": "fischer", "seed": args.seed, "d": a.n}
    if args.alpha is not None:
        alpha = _parse_int_csv(args.alpha)
        s, sbar = fischer_alpha(a, alpha)
        payload["alpha"] = alpha
        payload["S"] = jsonio.format_rational(s)
        payload["S_bar"] = jsonio.format_rational(sbar)
    elif args.k is not None:
        s, sbar = fischer_k(a, args.k)
        payload["k"] = args.k
        payload["S"] = jsonio.format_rational(s)
        payload["S_bar"] = jsonio.format_rational(sbar)
    else:
        table = []
        for k in range(a.n + 1):
            s, sbar = fischer_k(a, k)
            table.append(
                {"k": k, "S": jsonio.format_rational(s),
                 "S_bar": jsonio.format_rational(sbar)}
            )
        payload["table"] = table
    _emit(payload, args.output)
    return 0


def _cmd_majorize(args) -> int:
    x = _parse_int_csv(args.x)
    y = _parse_int_csv(args.y)
    _emit(
        {
            "schema": SCHEMA,
            "command": "majorize",
            "seed": args.seed,
            "x": x,
            "y": y,
            "majorizes": majorizes(x, y),
        },
        args.output,
    )
    return 0


def _cmd_stable(args) -> int:
    f = jsonio.load_poly(args.poly)
    if isinstance(f, UniPoly):
        f = MultiPoly.from_unipoly(f)
    if args.mode == "multiaffine":
        verdict = multiaffine_stability_check(
            f, samples=args.trials, seed=args.seed, bound=args.bound
        )
    elif args.mode == "lines":
        verdict = line_restriction_test(
            f, trials=args.trials, seed=args.seed, bound=args.bound
        )
    else:
        if args.direction is None:
            raise ValueError("--mode direction requires --direction CSV")
        direction = _parse_rational_csv(args.direction)
        verdict = hyperbolic_in_direction(
            f, direction, trials=args.trials, seed=args.seed, bound=args.bound
        )
    payload = {"schema": SCHEMA, "command": "stable", "mode": args.mode}
    payload.update(verdict.to_dict())
    payload["seed"] = args.seed
    _emit(payload, args.output)
    return 1 if verdict.status == CERTIFIED_UNSTABLE else 0


def _cmd_verify(args) -> int:
    reports = run_verification(
        args.claim,
        instances=args.instances,
        order=args.order,
        seed=args.seed,
        bound=args.bound,
        threads=_threads(),
    )
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "claim": args.claim.upper(),
        "seed": args.seed,
        "instances": args.instances,
        "order": args.order,
        "reports": [r.to_dict() for r in reports],
        "passed": sum(r.passed for r in reports),
        "failed": sum(not r.passed for r in reports),
    }
    _emit(payload, args.output)
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS = {
    "eta": _cmd_eta,
    "eta-char": _cmd_eta_char,
    "eta-pencil": _cmd_eta_pencil,
    "inertia": _cmd_inertia,
    "interlace": _cmd_interlace,
    "fischer": _cmd_fischer,
    "majorize": _cmd_majorize,
    "stable": _cmd_stable,
    "verify": _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
