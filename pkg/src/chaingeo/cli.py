"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad usage, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .configurations import (
    ChainConfig,
    build_ca,
    build_cb,
    chain_radius_ca,
    chain_radius_cb,
    square_in_delta,
    verify_config,
)
from .oracle import (
    numeric_residuals,
    oracle_chain_radius_ca,
    oracle_chain_radius_cb,
    oracle_square_side,
)
from .qfield import QNum, parse_rational, qnum_to_float
from .render import RenderOptions, render_report, render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _use_color(stream) -> bool:
    return "CHAINGEO_NO_COLOR" not in os.environ and getattr(stream, "isatty", lambda: False)()


def _show(x: QNum) -> str:
    return f"{x}  (≈ {qnum_to_float(x):.15g})"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _config_text(cfg: ChainConfig, color: bool) -> str:
    lines = [
        f"{cfg.kind.value}({cfg.n})",
        f"a   = {_show(cfg.a)}",
        f"b   = {_show(cfg.b)}",
        f"d   = |AB| = {_show(cfg.d)}",
        f"bc  = |BC| = {_show(cfg.bc)}",
    ]
    for name in "ABC":
        p = getattr(cfg, name)
        lines.append(f"{name}   = ({p.x}, {p.y})")
    return "\n".join(lines) + "\n\n" + render_report(verify_config(cfg), color=color)


def _cmd_config(args: argparse.Namespace) -> int:
    build = build_cb if args.command == "cb" else build_ca
    cfg = build(args.n, args.a)
    report = verify_config(cfg)
    if args.format == "json":
        text = json.dumps(cfg.to_json(), indent=2) + "\n"
    else:
        text = _config_text(cfg, _use_color(sys.stdout) and args.out is None)
    _emit(text, args.out)
    return EXIT_OK if report.overall else EXIT_FAIL


def _cmd_square(args: argparse.Namespace) -> int:
    sq = square_in_delta(args.a)
    a = QNum(args.a)
    ok = a * 2 == sq.side * 5
    if args.format == "json":
        data = sq.to_json()
        data["checks"] = {"2a = 5|AB|": ok}
        text = json.dumps(data, indent=2) + "\n"
    else:
        lines = [f"side = {_show(sq.side)}"]
        for name in "ABCD":
            p = getattr(sq, name)
            lines.append(f"{name} = ({p.x}, {p.y})")
        lines.append(f"2a = 5|AB|: {'PASS' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def _sweep(kind: str, n_max: int, a: Fraction, tol: float) -> list[str]:
    """Return a description of every failure for one family, in order of n."""
    if kind == "CB":
        lo, build, radius, oracle = 1, build_cb, chain_radius_cb, oracle_chain_radius_cb
    else:
        lo, build, radius, oracle = 2, build_ca, chain_radius_ca, oracle_chain_radius_ca
    af = float(a)
    failures = []
    for n in range(lo, n_max + 1):
        try:
            cfg = build(n, a)
        except ArithmeticError as exc:
            failures.append(f"{kind}({n}): {exc}")
            continue
        report = verify_config(cfg)
        if not report.overall:
            failures.append(f"{kind}({n}): {', '.join(report.failures())}")
        err = abs(oracle(n, af, tol).value - qnum_to_float(radius(n, a)))
        if err > tol:
            failures.append(f"{kind}({n}): oracle radius off by {err:.3g}")
        resid = numeric_residuals(cfg)
        if resid > 1e-9 * af:
            failures.append(f"{kind}({n}): float residual {resid:.3g}")
    return failures


def _cmd_verify(args: argparse.Namespace) -> int:
    a, tol = args.a, args.tol
    cb = _sweep("CB", args.n_max, a, tol)
    ca = _sweep("CA", args.n_max, a, tol)
    side = square_in_delta(a).side
    sq_fail = []
    if not a * 2 == side * 5:
        sq_fail.append("2a = 5|AB| does not hold")
    err = abs(oracle_square_side(float(a), tol).value - qnum_to_float(side))
    if err > tol:
        sq_fail.append(f"oracle square side off by {err:.3g}")

    def word(fails: list[str]) -> str:
        return "PASS" if not fails else "FAIL"

    ca_range = f"2..{args.n_max}" if args.n_max >= 2 else "(empty)"
    ok = not (cb or ca or sq_fail)
    if args.format == "json":
        text = json.dumps(
            {
                "a": f"{a.numerator}/{a.denominator}",
                "tol": tol,
                "cb": {"range": [1, args.n_max], "pass": not cb, "failures": cb},
                "ca": {"range": [2, args.n_max], "pass": not ca, "failures": ca},
                "square": {"pass": not sq_fail, "failures": sq_fail},
                "overall": ok,
            },
            indent=2,
        ) + "\n"
    else:
        lines = cb + ca + sq_fail
        lines.append(
            f"CB 1..{args.n_max} {word(cb)}, CA {ca_range} {word(ca)}, "
            f"square {word(sq_fail)}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, None)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_svg(args: argparse.Namespace) -> int:
    cfg = (build_cb if args.kind == "cb" else build_ca)(args.n, args.a)
    opts = RenderOptions(
        width_px=args.width,
        show_labels=not args.no_labels,
        show_square=args.square,
        decimals=args.decimals,
    )
    _emit(render_svg(cfg, opts), args.out)
    return EXIT_OK


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaingeo",
        description="Exact construction and verification of tangent circle chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_out: bool = True) -> None:
        p.add_argument("--a", type=_rational, default=Fraction(1), help="outer radius as p/q")
        p.add_argument("--format", choices=["json", "text"], default="text")
        if with_out:
            p.add_argument("--out", dest="out", default=None, help="write to this file")

    for name, help_ in (("cb", "build and verify CB(n)"), ("ca", "build and verify CA(n)")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True)
        common(p)

    common(sub.add_parser("square", help="solve the square between two touching circles"))

    p = sub.add_parser("verify", help="sweep CB(1..M) and CA(2..M)")
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-10, help="oracle bisection tolerance")
    common(p, with_out=False)

    p = sub.add_parser("svg", help="write an SVG figure")
    p.add_argument("--kind", choices=["cb", "ca"], default="cb")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_rational, default=Fraction(1))
    p.add_argument("--out", default=None)
    p.add_argument("--square", action="store_true", help="overlay the square (CB(1) only)")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--decimals", type=int, default=6)
    p.add_argument("--no-labels", action="store_true")
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.a <= 0:
        parser.error("--a must be a positive rational")
    kind = args.kind if args.command == "svg" else args.command
    if kind == "cb" and args.n < 1:
        parser.error("--n must be at least 1 for cb")
    if kind == "ca" and args.n < 2:
        parser.error("--n must be at least 2 for ca")
    if args.command == "verify":
        if args.n_max < 1:
            parser.error("--n-max must be at least 1")
        if not 0 < args.tol < float(args.a):
            parser.error("--tol must lie in (0, a)")
    if args.command == "svg":
        if args.square and not (args.kind == "cb" and args.n == 1):
            parser.error("--square only applies to --kind cb --n 1")
        if args.width < 100 or not 2 <= args.decimals <= 12:
            parser.error("--width must be >= 100 and --decimals in [2, 12]")


COMMANDS = {
    "cb": _cmd_config,
    "ca": _cmd_config,
    "square": _cmd_square,
    "verify": _cmd_verify,
    "svg": _cmd_svg,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        print(f"chaingeo: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
