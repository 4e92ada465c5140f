"""Command-line front door: digits, walk, compare, serve.

Exit codes: 0 ok, 2 expression/usage error, 3 digit budget exceeded,
4 output I/O error, 5 port busy.
"""

from __future__ import annotations

import argparse
import errno
import os
import re
import sys
from fractions import Fraction

from . import (DEFAULT_DIGIT_BUDGET, __version__, classification_label,
               digit_stream, integer_digits, overlay_svg, parse_number,
               rational_period, to_csv, to_geogebra, to_json, to_svg,
               walk_number)
from .errors import BudgetExceededError, ExprError, MapError, WalkError
from .numspec import Rational
from .service import ServiceConfig, create_server, serve_forever
from .walk import builtin_map, builtin_map_names, load_map_file

_ENV_BUDGET = "HUELLA_MAX_DIGITS"

_EXIT_OK = 0
_EXIT_PARSE = 2
_EXIT_BUDGET = 3
_EXIT_IO = 4
_EXIT_PORT = 5

_FORMATS = ("svg", "csv", "json", "ggb")
_FORMAT_SUFFIX = {"svg": ".svg", "csv": ".csv", "json": ".json", "ggb": ".ggb.txt"}


def _env_budget() -> int:
    raw = os.environ.get(_ENV_BUDGET)
    if raw is None:
        return DEFAULT_DIGIT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_DIGIT_BUDGET
    return value if value > 0 else DEFAULT_DIGIT_BUDGET


def _add_digit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", "--digits", type=int, default=500, metavar="N",
                        help="number of fractional digits to generate")
    parser.add_argument("--pad-zeros", action="store_true",
                        help="extend a terminating expansion with 0-digits up to N")
    parser.add_argument("--include-integer-part", action="store_true",
                        help="prepend the integer-part digits (most significant first)")
    parser.add_argument("--max-digits", type=int, default=_env_budget(), metavar="CAP",
                        help=f"digit budget cap (env {_ENV_BUDGET})")


def _add_walk_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--map", default="decagon", metavar="NAME|FILE",
                        help="builtin map (%s) or a JSON map file" % ", ".join(builtin_map_names()))
    parser.add_argument("--origin", default="0,0", metavar="X,Y",
                        help="walk origin; exact maps accept p/q coordinates")
    parser.add_argument("--max-lag", type=int, default=None, metavar="L",
                        help="translation search bound (default min(N/3, 2000))")
    parser.add_argument("--width", type=float, default=800.0,
                        help="SVG width in pixels")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="huella",
        description="Geometric walks of decimal expansions: exact digits, "
                    "periodicity analysis, exports, and an HTTP service.",
    )
    parser.add_argument("--version", action="version", version=f"huella {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p_digits = sub.add_parser("digits", formatter_class=fmt,
                              help="print fractional digits and, for rationals, "
                                   "the period structure")
    p_digits.add_argument("number", help="number expression, e.g. 1/14, pi, sqrt(2)")
    _add_digit_flags(p_digits)

    p_walk = sub.add_parser("walk", formatter_class=fmt,
                            help="build a walk, classify it, and write export files")
    p_walk.add_argument("number", help="number expression")
    _add_digit_flags(p_walk)
    _add_walk_flags(p_walk)
    p_walk.add_argument("--format", default="svg", metavar="LIST",
                        help="comma-separated outputs: svg,csv,json,ggb")
    p_walk.add_argument("-o", "--out", default=".", metavar="DIR",
                        help="output directory (created if missing)")
    p_walk.add_argument("--no-banding", action="store_true",
                        help="disable per-period color banding in SVG")

    p_cmp = sub.add_parser("compare", formatter_class=fmt,
                           help="overlay 2-4 walks in a single SVG with a legend")
    p_cmp.add_argument("numbers", nargs="+", metavar="NUMBER",
                       help="two to four number expressions")
    _add_digit_flags(p_cmp)
    _add_walk_flags(p_cmp)
    p_cmp.add_argument("-o", "--out", default="compare.svg", metavar="FILE",
                       help="output SVG file")

    p_serve = sub.add_parser("serve", formatter_class=fmt,
                             help="run the HTTP JSON API")
    p_serve.add_argument("--host", default="127.0.0.1", help="bind address")
    p_serve.add_argument("--port", type=int, default=8765, help="bind port")
    p_serve.add_argument("--max-digits", type=int, default=_env_budget(), metavar="CAP",
                         help=f"per-request digit cap (env {_ENV_BUDGET})")
    p_serve.add_argument("--step-budget", type=int, default=50_000_000, metavar="STEPS",
                         help="per-request analysis step budget")
    p_serve.add_argument("--cors-origin", action="append", default=None, metavar="ORIGIN",
                         help="allowed cross-origin origin (repeatable; default *)")
    return parser


def _resolve_map(name_or_file: str):
    if name_or_file in builtin_map_names():
        return builtin_map(name_or_file)
    if os.path.exists(name_or_file):
        return load_map_file(name_or_file)
    raise MapError(f"unknown map {name_or_file!r}: not a builtin "
                   f"({', '.join(builtin_map_names())}) and not a file")


def _parse_origin(text: str, mode: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise WalkError(f"origin must be X,Y, got {text!r}")
    coords = []
    for part in parts:
        part = part.strip()
        try:
            if mode == "exact":
                coords.append(Fraction(part))
            else:
                coords.append(float(part))
        except (ValueError, ZeroDivisionError):
            raise WalkError(f"bad origin coordinate {part!r}") from None
    return tuple(coords)


def _slug(expression: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", expression).strip("_") or "number"


def _cmd_digits(args) -> int:
    spec = parse_number(args.number)
    stream = digit_stream(spec, max_digits=args.max_digits)
    batch = stream.take(args.digits)
    digits = batch.digits
    if args.include_integer_part:
        digits = integer_digits(spec) + digits
    if args.pad_zeros and batch.terminated and len(digits) < args.digits:
        digits = digits + [0] * (args.digits - len(digits))
    print("".join(str(d) for d in digits))
    if isinstance(spec, Rational):
        info = rational_period(spec)
        if info.period_len == 0:
            print(f"terminating after {info.preperiod} digits")
        else:
            period = "".join(str(d) for d in info.period_digits)
            print(f"preperiod={info.preperiod} period={info.period_len} ({period})")
    return _EXIT_OK


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cmd_walk(args) -> int:
    formats = [f.strip() for f in args.format.split(",") if f.strip()]
    for f in formats:
        if f not in _FORMATS:
            raise WalkError(f"unknown format {f!r}; choose from {','.join(_FORMATS)}")
    vmap = _resolve_map(args.map)
    origin = _parse_origin(args.origin, vmap.mode)
    bundle = walk_number(
        args.number, n=args.digits, vector_map=vmap, origin=origin,
        max_lag=args.max_lag, include_integer_part=args.include_integer_part,
        pad_zeros=args.pad_zeros, max_digits=args.max_digits)
    os.makedirs(args.out, exist_ok=True)
    base = os.path.join(args.out, _slug(args.number))
    for f in formats:
        if f == "svg":
            text = to_svg(bundle, width=args.width, banding=not args.no_banding)
        elif f == "csv":
            text = to_csv(bundle)
        elif f == "json":
            text = to_json(bundle)
        else:
            text = to_geogebra(bundle)
        _write(base + _FORMAT_SUFFIX[f], text)
    print(classification_label(bundle.classification))
    return _EXIT_OK


def _cmd_compare(args) -> int:
    if not 2 <= len(args.numbers) <= 4:
        print("compare needs between 2 and 4 numbers", file=sys.stderr)
        return _EXIT_PARSE
    vmap = _resolve_map(args.map)
    origin = _parse_origin(args.origin, vmap.mode)
    bundles = [
        walk_number(number, n=args.digits, vector_map=vmap, origin=origin,
                    max_lag=args.max_lag, include_integer_part=args.include_integer_part,
                    pad_zeros=args.pad_zeros, max_digits=args.max_digits)
        for number in args.numbers
    ]
    parent = os.path.dirname(args.out)
    if parent:
        os.makedirs(parent, exist_ok=True)
    _write(args.out, overlay_svg(bundles, width=args.width))
    for bundle in bundles:
        print(f"{bundle.number}: {classification_label(bundle.classification)}")
    return _EXIT_OK


def _cmd_serve(args) -> int:
    origins = tuple(args.cors_origin) if args.cors_origin else ("*",)
    config = ServiceConfig(max_digits=args.max_digits, step_budget=args.step_budget,
                           cors_origins=origins)
    try:
        server = create_server(config, host=args.host, port=args.port)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            print(f"port {args.port} is busy: {exc}", file=sys.stderr)
            return _EXIT_PORT
        raise
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (max_digits={config.max_digits})", flush=True)
    serve_forever(server)
    return _EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "digits":
            return _cmd_digits(args)
        if args.command == "walk":
            return _cmd_walk(args)
        if args.command == "compare":
            return _cmd_compare(args)
        return _cmd_serve(args)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_BUDGET
    except (MapError, WalkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
