"""Command-line front end.

Subcommands: list, array, produce, hankel, moments, poly, cf, plotdata.
Output is deterministic; --format selects text (aligned), json, or csv.
Rationals print as integers when the denominator is 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, orthopoly, production
from .riordan import (
    TriMatrix,
    build,
    inverse,
    matrix_to_json,
    row_polynomials,
)
from .series import Series, format_rational, from_egf, series

DEFAULT_ORDER = 16


class CliError(Exception):
    """User-facing error: printed as a one-line diagnostic, exit status 1."""


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def _parse_coeffs(text: str) -> list[Fraction]:
    try:
        return [Fraction(p.strip()) for p in text.split(",") if p.strip() != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"malformed coefficient list {text!r}: {exc}") from None


def _series_from_spec(text: str, order: int, egf: bool) -> Series:
    coeffs = _parse_coeffs(text)
    if len(coeffs) > order + 1:
        raise CliError(f"{len(coeffs)} coefficients exceed order {order}")
    maker = from_egf if egf else series
    return maker(coeffs, order=order)


def _resolve_array(args) -> tuple[str, "object"]:
    """Build the requested array from an id or an explicit (g, f) spec."""
    order = args.order
    if args.id is not None:
        if args.g or args.f:
            raise CliError("give either a catalog id or --g/--f, not both")
        try:
            arr = catalog.build_entry(args.id, order + 1 if args.produce_pad else order)
        except KeyError as exc:
            raise CliError(str(exc.args[0])) from None
        name = args.id
    else:
        if not (args.g and args.f):
            raise CliError("need a catalog id or both --g and --f")
        g = _series_from_spec(args.g, order + 1 if args.produce_pad else order, args.egf)
        f = _series_from_spec(args.f, order + 1 if args.produce_pad else order, args.egf)
        try:
            arr = build(g, f)
        except ValueError as exc:
            raise CliError(f"invalid (g, f) pair: {exc}") from None
        name = "custom"
    if args.inverse:
        arr = inverse(arr)
        name = f"{name}^-1"
    return name, arr


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _emit_matrix(m: TriMatrix, name: str, fmt: str, extra: dict | None = None) -> str:
    if fmt == "text":
        out = m.render_text()
        if extra:
            out += "\n" + "\n".join(f"{k}: {v}" for k, v in extra.items())
        return out
    if fmt == "json":
        obj = matrix_to_json(m, name)
        if extra:
            obj.update(extra)
        return json.dumps(obj)
    header = ",".join(f"c{j}" for j in range(m.dim))
    lines = [header]
    lines += [",".join(format_rational(v) for v in row) for row in m.rows]
    if extra:
        lines += [f"# {k}: {v}" for k, v in extra.items()]
    return "\n".join(lines)


def _emit_sequence(values, fmt: str) -> str:
    strs = [format_rational(v) for v in values]
    if fmt == "text":
        return ", ".join(strs)
    if fmt == "json":
        return json.dumps(strs)
    return "\n".join(["n,value"] + [f"{n},{s}" for n, s in enumerate(strs)])


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_list(args) -> str:
    lines = []
    for eid in catalog.ids():
        e = catalog.entry(eid)
        lines.append(f"{eid:10s}  g = {e.g_label:22s}  f = {e.f_label:28s}  {e.notes}")
    return "\n".join(lines)


def _cmd_array(args) -> str:
    name, arr = _resolve_array(args)
    return _emit_matrix(arr.matrix, name, args.format)


def _cmd_produce(args) -> str:
    name, arr = _resolve_array(args)
    p = production.production_definitional(arr)
    params = production.tridiagonal_params(p)
    if args.format == "json":
        extra = {"jacobi": params.to_json() if params else None}
    else:
        if params:
            extra = {
                "jacobi": "alpha={}, beta={}, gamma={}, delta={}".format(
                    *(
                        format_rational(v)
                        for v in (params.alpha, params.beta, params.gamma, params.delta)
                    )
                )
            }
        else:
            extra = {"jacobi": "not tridiagonal"}
    return _emit_matrix(p, f"production({name})", args.format, extra)


def _entry_sequence(args, length: int) -> tuple[Fraction, ...]:
    """EGF coefficient sequence of the chosen part of a catalog entry."""
    order = max(args.order, length)
    try:
        g, f = (
            catalog.inverse_pair(args.id, order)
            if args.inverse
            else catalog.pair(args.id, order)
        )
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from None
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return (f if args.of == "f" else g).egf()


def _cmd_hankel(args) -> str:
    if args.seq:
        seq = _parse_coeffs(args.seq)
    elif args.id:
        seq = _entry_sequence(args, 2 * args.n)
    else:
        raise CliError("need a catalog id or --seq")
    try:
        values = orthopoly.hankel_transform(seq, args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return _emit_sequence(values, args.format)


def _cmd_moments(args) -> str:
    seq = _entry_sequence(args, args.n)
    return _emit_sequence(seq[: args.n + 1], args.format)


def _cmd_poly(args) -> str:
    name, arr = _resolve_array(args)
    fam = row_polynomials(arr)
    count = args.n + 1
    if count > len(fam):
        raise CliError(f"array only provides {len(fam)} polynomials")
    if args.format == "json":
        obj = {
            "name": name,
            "polys": [[format_rational(c) for c in fam[i]] for i in range(count)],
        }
        return json.dumps(obj)
    if args.format == "csv":
        lines = ["n,coefficients"]
        for i in range(count):
            coeffs = " ".join(format_rational(c) for c in fam[i])
            lines.append(f"{i},{coeffs}")
        return "\n".join(lines)
    return "\n".join(fam.format(i) for i in range(count))


def _cmd_cf(args) -> str:
    seq = _entry_sequence(args, 2 * args.depth)
    try:
        rec = orthopoly.jfraction(seq, args.depth)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        return json.dumps(rec.to_json())
    b = ", ".join(format_rational(v) for v in rec.b)
    lam = ", ".join(format_rational(v) for v in rec.lam)
    if args.format == "csv":
        return "\n".join(
            ["k,b,lambda"]
            + [
                f"{k},{format_rational(rec.b[k])},{format_rational(rec.lam[k])}"
                for k in range(len(rec.b))
            ]
        )
    return f"b: {b}\nlambda: {lam}"


def _cmd_plotdata(args) -> str:
    try:
        e = catalog.entry(args.id)
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from None
    try:
        grid = catalog.SampleGrid(t_min=args.tmin, t_max=args.tmax, samples=args.samples)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.kind == "curve":
        rows = catalog.sample_curve(e, grid)
        header = "t,f,fprime"
    else:
        rows = catalog.sample_parametric(e, grid)
        header = "fprime,f"
    lines = [header]
    lines += [",".join(f"{v:.15g}" for v in row) for row in rows]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, produce_pad: bool = False) -> None:
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="jet order (default 16)")
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )
    p.set_defaults(produce_pad=produce_pad)


def _add_array_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("id", nargs="?", help="catalog id (see `list`)")
    p.add_argument("--g", help="ordinary coefficients of g, comma-separated")
    p.add_argument("--f", help="ordinary coefficients of f, comma-separated")
    p.add_argument("--egf", action="store_true", help="read --g/--f as EGF coefficients")
    p.add_argument("--inverse", action="store_true", help="use the group inverse")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="expriordan",
        description="Exact exponential Riordan arrays for sigmoid pairs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list catalog entries")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("array", help="print the array of a pair")
    _add_array_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_array)

    p = sub.add_parser("produce", help="print the production matrix")
    _add_array_source(p)
    _add_common(p, produce_pad=True)
    p.set_defaults(func=_cmd_produce)

    p = sub.add_parser("hankel", help="Hankel transform of an EGF expansion")
    p.add_argument("id", nargs="?", help="catalog id")
    p.add_argument("--seq", help="explicit sequence, comma-separated rationals")
    p.add_argument("--n", type=int, default=5, help="largest determinant index")
    p.add_argument("--of", choices=("f", "g"), default="f", help="expand f or g")
    p.add_argument("--inverse", action="store_true", help="use the inverse pair")
    _add_common(p)
    p.set_defaults(func=_cmd_hankel)

    p = sub.add_parser("moments", help="EGF coefficients of g (first array column)")
    p.add_argument("id", help="catalog id")
    p.add_argument("--n", type=int, default=10, help="largest index")
    p.add_argument("--of", choices=("f", "g"), default="g", help="expand f or g")
    p.add_argument("--inverse", action="store_true", help="use the inverse pair")
    _add_common(p)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("poly", help="row polynomials of the array")
    _add_array_source(p)
    p.add_argument("--n", type=int, default=6, help="largest polynomial degree")
    _add_common(p)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("cf", help="J-fraction of the g-expansion moment sequence")
    p.add_argument("id", help="catalog id")
    p.add_argument("--depth", type=int, default=4, help="number of levels")
    p.add_argument("--of", choices=("f", "g"), default="g", help="expand f or g")
    p.add_argument("--inverse", action="store_true", help="use the inverse pair")
    _add_common(p)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("plotdata", help="CSV samples of (t, f, f') or (f', f)")
    p.add_argument("id", help="catalog id")
    p.add_argument("--kind", choices=("curve", "parametric"), default="curve")
    p.add_argument("--tmin", type=float, default=-4.0)
    p.add_argument("--tmax", type=float, default=4.0)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=_cmd_plotdata)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
