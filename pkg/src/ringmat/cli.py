"""Command-line surface.

Four subcommands: charpoly and adjugate compute and print JSON,
verify runs identity checks around one matrix, fuzz runs seeded random
campaigns.  All numeric I/O is decimal strings inside JSON so that
arbitrary-precision values never pass through a float.

Exit codes: 0 success, 1 at least one identity violation, 2 parse or
configuration error, 3 shape or ring mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import report as report_mod
from .charpoly import charpoly, charpoly_newton
from .report import summarize
from .rings import (
    GuardError,
    ParseError,
    PreconditionError,
    QAlgebraRequiredError,
    RingMismatchError,
    ShapeError,
)
from .serialize import matrix_from_json, parse_ring
from .suite import resolve_suite, run_suite


def _read_matrix_arg(text: str, ring):
    """--matrix accepts a file path, "-" for stdin, or inline JSON."""
    if text == "-":
        raw = sys.stdin.read()
    elif text.lstrip().startswith("{"):
        raw = text
    else:
        try:
            with open(text, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(f"matrix: cannot read {text!r}: {exc}") from None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"matrix: invalid JSON: {exc}") from None
    return matrix_from_json(obj, ring)


def _emit(payload, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _params(args) -> dict:
    return {"imax": args.imax, "k": args.k, "p": args.p}


def _add_matrix_opts(p) -> None:
    p.add_argument("--matrix", required=True,
                   help="matrix JSON: a path, '-' for stdin, or inline")
    p.add_argument("--ring", default=None,
                   help="ring override: shorthand (int, rat, mod:8, "
                        "poly:int) or descriptor JSON")
    p.add_argument("--out", default=None, help="write the JSON result here")


def _add_check_opts(p) -> None:
    p.add_argument("--seed", type=int, default=0,
                   help="64-bit seed for any randomized auxiliary inputs")
    p.add_argument("--imax", type=int, default=None,
                   help="power-trace bound for nilpotency converse checks")
    p.add_argument("--k", type=int, default=None,
                   help="nilpotency order for the Almkvist check")
    p.add_argument("--p", type=int, default=None,
                   help="prime for the Frobenius trace check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringmat",
        description="Exact matrix computations and identity verification "
                    "over commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly",
                       help="characteristic polynomial, coefficients, and "
                            "the adjugate expansion of tI - A")
    _add_matrix_opts(p)
    p.add_argument("--newton", action="store_true",
                   help="use the trace recursion when the ring admits "
                        "division by integers")

    p = sub.add_parser("adjugate", help="adjugate matrix")
    _add_matrix_opts(p)
    p.add_argument("--via-charpoly", action="store_true",
                   help="evaluate the charpoly-coefficient formula instead "
                        "of cofactors")

    p = sub.add_parser("verify",
                       help="check identities around one matrix")
    p.add_argument("suite", help="suite or identity names, comma separated "
                                 "(e.g. all, core, adjugate, almkvist)")
    _add_matrix_opts(p)
    _add_check_opts(p)

    p = sub.add_parser("fuzz", help="seeded random verification campaign")
    p.add_argument("--ring", required=True,
                   help="ring to fuzz over: shorthand or descriptor JSON")
    p.add_argument("--suite", default="all",
                   help="suite or identity names, comma separated")
    p.add_argument("--count", type=int, default=100,
                   help="cases per identity")
    p.add_argument("--size", type=int, required=True,
                   help="maximum matrix dimension")
    p.add_argument("--out", default=None, help="write the JSON report here")
    _add_check_opts(p)
    return parser


def _ring_arg(text: str):
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"ring: invalid JSON: {exc}") from None
        return parse_ring(obj)
    return parse_ring(text)


def _cmd_charpoly(args) -> int:
    ring = _ring_arg(args.ring) if args.ring else None
    a = _read_matrix_arg(args.matrix, ring)
    use_newton = args.newton and a.ring.is_q_algebra
    data = charpoly_newton(a) if use_newton else charpoly(a)
    payload = {"ring": a.ring.descriptor(), "n": a.rows,
               "method": "newton" if use_newton else "direct"}
    payload.update(data.to_json())
    _emit(payload, args.out)
    return 0


def _cmd_adjugate(args) -> int:
    ring = _ring_arg(args.ring) if args.ring else None
    a = _read_matrix_arg(args.matrix, ring)
    if args.via_charpoly:
        from .charpoly import adjugate_via_charpoly
        adj = adjugate_via_charpoly(a)
    else:
        adj = a.adjugate()
    _emit(adj.to_json(), args.out)
    return 0


def _finish_reports(reports, out_path: str | None) -> int:
    stats = summarize(reports)
    _emit([r.to_json() for r in reports], out_path)
    sys.stdout.write(
        "total={total} passed={passed} failed={failed} "
        "hypothesis_not_met={hypothesis_not_met}\n".format(**stats))
    return 1 if stats["failed"] else 0


def _cmd_verify(args) -> int:
    names = resolve_suite(args.suite)
    ring = _ring_arg(args.ring) if args.ring else None
    a = _read_matrix_arg(args.matrix, ring)
    reports = run_suite(names, matrix=a, seed=args.seed,
                        params=_params(args))
    return _finish_reports(reports, args.out)


def _cmd_fuzz(args) -> int:
    names = resolve_suite(args.suite)
    ring = _ring_arg(args.ring)
    reports = run_suite(names, ring=ring, seed=args.seed, count=args.count,
                        size=args.size, params=_params(args))
    return _finish_reports(reports, args.out)


_DISPATCH = {
    "charpoly": _cmd_charpoly,
    "adjugate": _cmd_adjugate,
    "verify": _cmd_verify,
    "fuzz": _cmd_fuzz,
}


def main(argv=None) -> int:
    mutate = os.environ.get("RINGMAT_MUTATE", "")
    report_mod.set_mutation(n for n in mutate.split(",") if n)
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ParseError, GuardError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ShapeError, RingMismatchError, QAlgebraRequiredError,
            PreconditionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
