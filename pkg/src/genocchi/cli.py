"""Command-line front end.

Usage::

    genocchi table --family gould-hopper --j 2 --n-max 6
    genocchi table --family second-kind-genocchi --a 1 --numbers --n-max 5 --format csv
    genocchi eval --family hermite-genocchi --j 2 --a 1 --n 3 --x 1 --y 1
    genocchi verify --identity all --n-max 24 --format json
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .algebra import BivarPoly, format_rational, parse_rational
from .families import Family, FamilySpec, family_table, make_spec, member
from .verify import IdentityId, IdentityReport, Status, VerifierConfig, run_all

__all__ = ["main", "build_parser", "render_table", "render_reports", "parse_table"]

FAMILY_NAMES = [f.value for f in Family]


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--j", type=int, default=None, help="Hermite order (gould-hopper, hermite-*)")
    p.add_argument("--a", type=int, default=None, help="kernel order (default 1)")
    p.add_argument("--numbers", action="store_true", help="omit the e^{xt} factor (number sequences)")


def _add_output_args(p: argparse.ArgumentParser, default_format: str | None) -> None:
    p.add_argument("--format", choices=["json", "csv"], default=default_format)
    p.add_argument("--out", default=None, metavar="PATH", help="write to PATH instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genocchi", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="coefficient table of a family for n = 0..n-max")
    _add_family_args(t)
    t.add_argument("--n-max", type=int, required=True)
    _add_output_args(t, "json")
    t.set_defaults(handler=cmd_table, subparser=t)

    e = sub.add_parser("eval", help="evaluate one family member at a rational point")
    _add_family_args(e)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--x", type=_rational_arg, default=parse_rational("0"))
    e.add_argument("--y", type=_rational_arg, default=parse_rational("0"))
    _add_output_args(e, None)
    e.set_defaults(handler=cmd_eval, subparser=e)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--identity", default="all", help="'all' or a comma-separated list of identity names")
    v.add_argument("--n-max", type=int, default=24)
    v.add_argument("--a-max", type=int, default=3)
    v.add_argument("--b-max", type=int, default=3)
    v.add_argument("--j-set", type=_int_list, default=(2, 3))
    v.add_argument("--jobs", type=int, default=1)
    _add_output_args(v, "json")
    v.set_defaults(handler=cmd_verify, subparser=v)
    return parser


# ---------------------------------------------------------------------------
# Rendering


def _spec_from_args(parser: argparse.ArgumentParser, args) -> FamilySpec:
    try:
        return make_spec(args.family, j=args.j, a=args.a)
    except ValueError as exc:
        parser.error(str(exc))


def _is_number_row(spec: FamilySpec, numbers: bool) -> bool:
    return numbers and not spec.family.is_hermite


def render_table(spec: FamilySpec, rows: list[BivarPoly], numbers: bool, fmt: str) -> str:
    """JSON keeps full polynomials; CSV flattens them to ``degx:degy:p/q`` tokens."""
    number_rows = _is_number_row(spec, numbers)
    if fmt == "json":
        doc = {
            "family": spec.family.value,
            "j": spec.j,
            "a": spec.a,
            "numbers": numbers,
            "rows": [],
        }
        for n, p in enumerate(rows):
            row = {"n": n, "terms": p.to_triples()}
            if number_rows:
                row["value"] = format_rational(p.constant_term())
            doc["rows"].append(row)
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if number_rows:
        w.writerow(["n", "value"])
        for n, p in enumerate(rows):
            w.writerow([n, format_rational(p.constant_term())])
    else:
        w.writerow(["n", "terms"])
        for n, p in enumerate(rows):
            w.writerow([n, ";".join(f"{i}:{j}:{c}" for i, j, c in p.to_triples())])
    return buf.getvalue()


def parse_table(text: str) -> tuple[FamilySpec, list[BivarPoly]]:
    """Inverse of the JSON form of :func:`render_table`."""
    doc = json.loads(text)
    spec = FamilySpec(Family(doc["family"]), j=doc["j"], a=doc["a"])
    return spec, [BivarPoly.from_triples(r["terms"]) for r in doc["rows"]]


def render_reports(reports: list[IdentityReport], fmt: str) -> str:
    """JSON: one report object per line.  CSV: one summary row per report."""
    if fmt == "json":
        return "".join(json.dumps(r.to_dict()) + "\n" for r in reports)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "status", "grid_size", "failures", "observations", "elapsed_ms"])
    for r in reports:
        d = r.to_dict()
        w.writerow([d["identity"], d["status"], len(d["grid"]), len(d["failures"]), len(d["observations"]), d["elapsed_ms"]])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Commands


def cmd_table(parser, args) -> int:
    if args.n_max < 0:
        parser.error("--n-max must be >= 0")
    spec = _spec_from_args(parser, args)
    rows = family_table(spec, args.n_max, symbolic=not args.numbers)
    _emit(render_table(spec, rows, args.numbers, args.format), args.out)
    return 0


def cmd_eval(parser, args) -> int:
    if args.n < 0:
        parser.error("--n must be >= 0")
    spec = _spec_from_args(parser, args)
    value = member(spec, args.n, symbolic=not args.numbers).value.evaluate(args.x, args.y)
    text = format_rational(value)
    if args.format == "json":
        doc = {
            "family": spec.family.value,
            "j": spec.j,
            "a": spec.a,
            "n": args.n,
            "x": format_rational(args.x),
            "y": format_rational(args.y),
            "value": text,
        }
        out = json.dumps(doc) + "\n"
    elif args.format == "csv":
        out = "family,j,a,n,x,y,value\n" + ",".join(
            str(v) if v is not None else ""
            for v in (spec.family.value, spec.j, spec.a, args.n, format_rational(args.x), format_rational(args.y), text)
        ) + "\n"
    else:
        out = text + "\n"
    _emit(out, args.out)
    return 0


def _parse_identities(parser, text: str) -> tuple[IdentityId, ...] | None:
    if text.strip() == "all":
        return None
    names = [t.strip() for t in text.split(",") if t.strip()]
    valid = [i.value for i in IdentityId]
    unknown = [n for n in names if n not in valid]
    if unknown or not names:
        parser.error(f"unknown identity {', '.join(unknown) or repr(text)}; valid names: all, {', '.join(valid)}")
    return tuple(IdentityId(n) for n in names)


def cmd_verify(parser, args) -> int:
    identities = _parse_identities(parser, args.identity)
    try:
        config = VerifierConfig(
            n_max=args.n_max,
            a_max=args.a_max,
            b_max=args.b_max,
            j_set=args.j_set,
            identities=identities,
            jobs=args.jobs,
        )
    except ValueError as exc:
        parser.error(str(exc))
    reports = run_all(config)
    _emit(render_reports(reports, args.format), args.out)
    return 1 if any(r.status is Status.FAIL for r in reports) else 0


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-7/2" for an option; glue it to its flag as "--x=-7/2"
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--x", "--y"):
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_negative_values(list(sys.argv[1:] if argv is None else argv)))
    return args.handler(args.subparser, args)


if __name__ == "__main__":
    sys.exit(main())
