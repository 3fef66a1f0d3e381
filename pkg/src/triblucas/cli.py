"""Command-line front end.

Subcommands: ``seq`` (number families, b-file capable), ``poly`` (polynomial
families), ``table`` (the four reference tables), ``incomplete`` (incomplete
values, optionally evaluated at a rational x), ``gf`` (generating-function
expansion with a matches-direct comparator verdict) and ``verify`` (the
identity suite).  Exit codes: 0 success, 1 verification failure, 2 usage
error.  All output is UTF-8 with "\\n" newlines and deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import genfunc, incomplete, verify
from .errors import DomainError
from .poly import IntPoly, poly_format
from .sequences import (
    tribonacci_lucas_number,
    tribonacci_lucas_poly,
    tribonacci_number,
    tribonacci_poly,
)
from .triangles import TriangleKind, triangle_rows

PLAIN, JSON, CSV, BFILE = "plain", "json", "csv", "bfile"


class _UsageError(Exception):
    pass


def _compact_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational number: {text!r}")


# -- seq -----------------------------------------------------------------------

_NUMBER_FAMILIES = {
    "tribonacci": tribonacci_number,
    "tribonacci-lucas": tribonacci_lucas_number,
}


def _cmd_seq(args) -> int:
    func = _NUMBER_FAMILIES[args.family]
    if args.start < 0 or args.start > args.end:
        raise _UsageError(f"need 0 <= from <= to, got {args.start}..{args.end}")
    pairs = [(n, func(n)) for n in range(args.start, args.end + 1)]
    if args.format == PLAIN:
        out = " ".join(str(v) for _, v in pairs) + "\n"
    elif args.format == BFILE:
        out = "".join(f"{n} {v}\n" for n, v in pairs)
    elif args.format == CSV:
        out = "n,value\n" + "".join(f"{n},{v}\n" for n, v in pairs)
    else:
        out = _compact_json({"family": args.family, "from": args.start,
                             "to": args.end,
                             "values": [str(v) for _, v in pairs]}) + "\n"
    sys.stdout.write(out)
    return 0


# -- poly ----------------------------------------------------------------------

_POLY_FAMILIES = {
    "tribonacci": tribonacci_poly,
    "tl": tribonacci_lucas_poly,
}


def _poly_csv(p: IntPoly) -> str:
    rows = "".join(f"{k},{c}\n" for k, c in enumerate(p.coeffs))
    return "power,coefficient\n" + rows


def _cmd_poly(args) -> int:
    if args.n < 0:
        raise _UsageError(f"index must be nonnegative, got {args.n}")
    p = _POLY_FAMILIES[args.family](args.n)
    if args.format == PLAIN:
        out = poly_format(p) + "\n"
    elif args.format == CSV:
        out = _poly_csv(p)
    else:
        out = _compact_json({"coeffs": [str(c) for c in p.coeffs]}) + "\n"
    sys.stdout.write(out)
    return 0


# -- table ---------------------------------------------------------------------

def _table_rows(which: int, rows: int):
    """(header label, first row index, list of rows of rendered cells)."""
    if which == 1:
        table = triangle_rows(TriangleKind.NUMBERS, rows)
        return "n\\i", 0, [[str(c) for c in row] for row in table.rows]
    if which == 2:
        table = triangle_rows(TriangleKind.POLYNOMIALS, rows)
        return "n\\i", 0, [[poly_format(c) for c in row] for row in table.rows]
    if which == 3:
        body = [[poly_format(incomplete.incomplete_tl_poly(n, s))
                 for s in range(n // 2 + 1)] for n in range(1, rows + 1)]
        return "n\\s", 1, body
    body = [[str(incomplete.incomplete_tl_number(n, s))
             for s in range(n // 2 + 1)] for n in range(1, rows + 1)]
    return "n\\s", 1, body


def _cmd_table(args) -> int:
    if args.rows < 1:
        raise _UsageError(f"rows must be >= 1, got {args.rows}")
    label, first, body = _table_rows(args.which, args.rows)
    if args.format == PLAIN:
        width = max(len(row) for row in body)
        lines = [label + "\t" + "\t".join(str(i) for i in range(width))]
        for offset, row in enumerate(body):
            lines.append(str(first + offset) + "\t" + "\t".join(row))
        out = "\n".join(lines) + "\n"
    elif args.format == CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n"] + [f"col{i}" for i in range(max(len(r) for r in body))])
        for offset, row in enumerate(body):
            writer.writerow([first + offset] + row)
        out = buf.getvalue()
    else:
        out = _compact_json({"table": args.which, "first_row": first,
                             "rows": body}) + "\n"
    sys.stdout.write(out)
    return 0


# -- incomplete ------------------------------------------------------------------

_INCOMPLETE_FAMILIES = {
    "tribonacci": incomplete.incomplete_tribonacci_poly,
    "tl": incomplete.incomplete_tl_poly,
}


def _cmd_incomplete(args) -> int:
    try:
        p = _INCOMPLETE_FAMILIES[args.family](args.n, args.s)
    except DomainError as exc:
        raise _UsageError(str(exc))
    if args.x is not None:
        value = Fraction(p.evaluate(_parse_fraction(args.x)))
        if args.format == PLAIN:
            out = f"{value}\n"
        elif args.format == CSV:
            out = f"value\n{value}\n"
        else:
            out = _compact_json({"value": str(value)}) + "\n"
    else:
        if args.format == PLAIN:
            out = poly_format(p) + "\n"
        elif args.format == CSV:
            out = _poly_csv(p)
        else:
            out = _compact_json({"coeffs": [str(c) for c in p.coeffs]}) + "\n"
    sys.stdout.write(out)
    return 0


# -- gf --------------------------------------------------------------------------

_GF_FAMILIES = {
    "inc-tribonacci": incomplete.IncompleteFamily.INC_TRIBONACCI,
    "inc-tl": incomplete.IncompleteFamily.INC_TRIBONACCI_LUCAS,
}

_VARIANT_FLAGS = {
    "printed": genfunc.GFVariant.AS_PRINTED,
    "corrected": genfunc.GFVariant.CORRECTED,
}


def _cmd_gf(args) -> int:
    family = _GF_FAMILIES[args.family]
    variant = _VARIANT_FLAGS[args.variant]
    if family is incomplete.IncompleteFamily.INC_TRIBONACCI_LUCAS:
        if args.s < 1:
            raise _UsageError("the inc-tl generating function needs s >= 1")
        if variant is not genfunc.GFVariant.CORRECTED:
            raise _UsageError("only the corrected variant exists for inc-tl")
    if args.order < 1:
        raise _UsageError(f"order must be >= 1, got {args.order}")
    x = _parse_fraction(args.x) if args.x is not None else None
    comparison = genfunc.gf_vs_direct(family, args.s, variant, x, args.order)
    rendered = [genfunc.render_coeff(c) for c in comparison.series.coeffs]
    verdict = "true" if comparison.ok else "false"
    if args.format == PLAIN:
        out = "[" + ",".join(rendered) + f"], matches_direct={verdict}\n"
    elif args.format == CSV:
        rows = "".join(f"{k},{c}\n" for k, c in enumerate(rendered))
        out = "power,coefficient\n" + rows + f"matches_direct,{verdict}\n"
    else:
        out = _compact_json({
            "family": args.family, "s": args.s, "order": args.order,
            "variant": args.variant, "x": args.x,
            "shift": genfunc.q_gf(args.s, variant, x).shift
            if family is incomplete.IncompleteFamily.INC_TRIBONACCI
            else genfunc.w_gf(args.s, x).shift,
            "coefficients": rendered,
            "matches_direct": comparison.ok,
        }) + "\n"
    sys.stdout.write(out)
    return 0


# -- verify ----------------------------------------------------------------------

def _cmd_verify(args) -> int:
    known = {identity_id for identity_id, _, _ in verify.list_identities()}
    for identity_id in args.id or ():
        if identity_id not in known:
            raise _UsageError(f"unknown identity id {identity_id!r}")
    x_points = tuple(_parse_fraction(tok)
                     for tok in args.x_points.split(",")) if args.x_points else None
    try:
        rng = verify.SweepRange(
            n_max=args.n_max, s_max=args.s_max, h_max=args.h_max,
            order=args.order,
            x_points=x_points or verify.SweepRange().x_points,
            include_symbolic=not args.no_symbolic)
    except ValueError as exc:
        raise _UsageError(str(exc))
    if args.id:
        reports = [verify.run_identity(identity_id, rng) for identity_id in args.id]
    else:
        reports = verify.run_all(rng)
    if args.format == JSON:
        sys.stdout.write(verify.reports_to_json(reports) + "\n")
    elif args.format == CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "status", "points_checked", "total_failures", "notes"])
        for r in reports:
            writer.writerow([r.id, r.status, r.points_checked,
                             r.total_failures, r.notes])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(_render_verify_plain(reports))
    return 0 if verify.overall_success(reports) else 1


def _render_verify_plain(reports) -> str:
    id_width = max(len(r.id) for r in reports)
    lines = []
    for r in reports:
        lines.append(f"{r.id:<{id_width}}  {r.status:<13}  "
                     f"points={r.points_checked}  failures={r.total_failures}")
    shown = [r for r in reports if r.failures]
    for r in shown:
        lines.append("")
        lines.append(f"{r.id}: first counterexamples "
                     f"({len(r.failures)} of {r.total_failures}):")
        for failure in r.failures[:3]:
            params = ", ".join(f"{k}={v}" for k, v in failure.params)
            lines.append(f"  ({params}): {failure.lhs} != {failure.rhs}")
    out = "\n".join(lines) + "\n"
    if any(r.status == verify.EXPECTED_FAIL for r in reports):
        out += "\n" + verify.errata_report().render()
    return out


# -- parser ----------------------------------------------------------------------

def _add_format(parser: argparse.ArgumentParser, choices) -> None:
    parser.add_argument("--format", choices=choices, default=PLAIN)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triblucas",
        description="Tribonacci / Tribonacci-Lucas families, triangles, "
                    "incomplete variants, generating functions and the "
                    "identity verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="number sequence values over an index range")
    p.add_argument("family", choices=sorted(_NUMBER_FAMILIES))
    p.add_argument("start", type=int, metavar="from")
    p.add_argument("end", type=int, metavar="to")
    _add_format(p, [PLAIN, JSON, CSV, BFILE])
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("poly", help="one polynomial family member")
    p.add_argument("family", choices=sorted(_POLY_FAMILIES))
    p.add_argument("n", type=int)
    _add_format(p, [PLAIN, JSON, CSV])
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("table", help="reference tables 1-4")
    p.add_argument("which", type=int, choices=[1, 2, 3, 4])
    p.add_argument("--rows", type=int, default=6)
    _add_format(p, [PLAIN, JSON, CSV])
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("incomplete", help="incomplete family values")
    p.add_argument("family", choices=sorted(_INCOMPLETE_FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--x", help="rational evaluation point, e.g. 1 or 1/2")
    _add_format(p, [PLAIN, JSON, CSV])
    p.set_defaults(func=_cmd_incomplete)

    p = sub.add_parser("gf", help="generating-function expansion + comparator")
    p.add_argument("family", choices=sorted(_GF_FAMILIES))
    p.add_argument("s", type=int)
    p.add_argument("order", type=int)
    p.add_argument("--variant", choices=sorted(_VARIANT_FLAGS), default="corrected")
    p.add_argument("--x", help="rational evaluation point; omit for symbolic x")
    _add_format(p, [PLAIN, JSON, CSV])
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--id", action="append",
                   help="run only this catalog id (repeatable)")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--s-max", type=int, default=8)
    p.add_argument("--h-max", type=int, default=12)
    p.add_argument("--order", type=int, default=48)
    p.add_argument("--x-points", help="comma-separated rationals, default 1,2,1/2")
    p.add_argument("--no-symbolic", action="store_true",
                   help="skip the symbolic-x generating-function sweeps")
    _add_format(p, [PLAIN, JSON, CSV])
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
