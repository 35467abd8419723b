"""Deterministic SVG figures and plain-text verification tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .configurations import ChainConfig, Kind, VerificationReport, square_in_delta
from .qfield import qnum_to_float

STROKE_PX = 1.5
DOT_PX = 3.0
FONT_PX = 12


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    margin_fraction: Fraction = Fraction(1, 20)
    show_labels: bool = True
    show_square: bool = False
    decimals: int = 6

    def __post_init__(self) -> None:
        if self.width_px < 100:
            raise ValueError("width_px must be at least 100")
        if not 0 < self.margin_fraction < Fraction(1, 2):
            raise ValueError("margin_fraction must lie in (0, 1/2)")
        if not 2 <= self.decimals <= 12:
            raise ValueError("decimals must lie in [2, 12]")


def _fmt(x: float, decimals: int) -> str:
    s = f"{x:.{decimals}f}"
    # "-0.000" and "0.000" must print identically
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


def render_svg(cfg: ChainConfig, opts: RenderOptions | None = None) -> str:
    """Draw ``cfg`` as a standalone SVG 1.1 document.

    Geometry is emitted in model units inside a group that flips the y-axis,
    so every ``cx``/``cy``/``r`` attribute is the float value of the exact
    coordinate.  Labels live outside that group, in pixel units.
    """
    opts = opts or RenderOptions()
    if opts.show_square and not (cfg.kind is Kind.CB and cfg.n == 1):
        raise ValueError("the square overlay only applies to CB(1)")

    def fmt(x: float) -> str:
        return _fmt(x, opts.decimals)

    f = qnum_to_float
    circles = [(f(c.center.x), f(c.center.y), f(c.r)) for c in cfg.circles]
    xmin = min(x - r for x, _, r in circles)
    xmax = max(x + r for x, _, r in circles)
    ymin = 0.0
    ymax = max(y + r for _, y, r in circles)
    m = float(opts.margin_fraction)
    pad = m * max(xmax - xmin, ymax - ymin)
    xmin, xmax, ymin, ymax = xmin - pad, xmax + pad, ymin - pad, ymax + pad
    scale = opts.width_px / (xmax - xmin)
    height_px = round((ymax - ymin) * scale)
    px = 1 / scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.width_px}" height="{height_px}" '
        f'viewBox="0 0 {opts.width_px} {height_px}">',
        f"<title>{cfg.kind.value}({cfg.n})</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
        f'<g transform="matrix({fmt(scale)} 0 0 {fmt(-scale)} '
        f'{fmt(-xmin * scale)} {fmt(ymax * scale)})" fill="none" '
        f'stroke="black" stroke-width="{fmt(STROKE_PX * px)}">',
        f'<line class="baseline" x1="{fmt(xmin)}" y1="0" x2="{fmt(xmax)}" y2="0"/>',
    ]
    names = ["alpha1", "alpha2"] if cfg.kind is Kind.CB else ["alpha"]
    names += [f"beta{i}" for i in range(1, cfg.n + 1)]
    for name, (x, y, r) in zip(names, circles):
        cls = "chain" if name.startswith("beta") else "outer"
        out.append(
            f'<circle class="{cls}" id="{name}" cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(r)}"/>'
        )

    if opts.show_square:
        sq = square_in_delta(cfg.a)
        corners = [sq.A, sq.B, sq.C, sq.D]
        d = " ".join(
            f"{'M' if i == 0 else 'L'} {fmt(f(p.x))} {fmt(f(p.y))}"
            for i, p in enumerate(corners)
        )
        out.append(f'<path class="square" stroke="blue" d="{d} Z"/>')

    points = {"A": cfg.A, "B": cfg.B, "C": cfg.C}
    dot = DOT_PX * px
    for label, p in points.items():
        x, y = f(p.x), f(p.y)
        # filled dot drawn as two half-arcs so only outline circles are <circle>
        out.append(
            f'<path class="point" id="pt{label}" fill="red" stroke="none" '
            f'd="M {fmt(x - dot)} {fmt(y)} A {fmt(dot)} {fmt(dot)} 0 1 0 {fmt(x + dot)} {fmt(y)} '
            f'A {fmt(dot)} {fmt(dot)} 0 1 0 {fmt(x - dot)} {fmt(y)} Z"/>'
        )
    out.append("</g>")

    if opts.show_labels:

        def to_px(x: float, y: float) -> tuple[str, str]:
            return fmt((x - xmin) * scale), fmt((ymax - y) * scale)

        out.append(f'<g font-family="serif" font-size="{FONT_PX}" fill="black">')
        for name, (x, y, r) in zip(names, circles):
            tx, ty = to_px(x, y)
            text = name.replace("alpha", "α").replace("beta", "β")
            out.append(
                f'<text x="{tx}" y="{ty}" text-anchor="middle" '
                f'dominant-baseline="middle">{escape(text)}</text>'
            )
        for label, p in points.items():
            tx, ty = to_px(f(p.x), f(p.y))
            out.append(f'<text x="{tx}" y="{ty}" dx="4" dy="-4">{label}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_report(report: VerificationReport, color: bool = False) -> str:
    """Aligned PASS/FAIL table, one row per identity plus an overall row."""

    def mark(ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if color:
            return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"
        return word

    width = max((len(name) for name, _ in report.entries), default=0)
    lines = [f"{name.ljust(width)}  {mark(ok)}" for name, ok in report.entries]
    lines.append(f"OVERALL {mark(report.overall)}")
    return "\n".join(lines) + "\n"
