"""Hand-rolled SVG scatter plots with exact-rational curve overlays.

No plotting dependency: the figures only display point sets and reference
curves.  All pixel coordinates are computed from Fractions and rounded to
integers, so the byte output is deterministic for a fixed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_W = 480
_H = 420
_PAD = 48


@dataclass(frozen=True)
class Overlay:
    kind: str  # "hyperbola" (x*y = value) or "hline" (y = value)
    value: int
    label: str = ""


def _fmt(x: Fraction) -> str:
    return str(round(x))


def emit_scatter(
    points: list[tuple[int, int]],
    overlays: list[Overlay] = (),
    x_label: str = "x",
    y_label: str = "y",
) -> str:
    """Self-contained SVG document: axes, points, overlays."""
    xs = [p[0] for p in points] or [1]
    ys = [p[1] for p in points] or [1]
    for ov in overlays:
        if ov.kind == "hline":
            ys.append(ov.value)
    x_max = max(xs) + 2
    y_max = max(ys) + 2
    x_min = max(0, min(xs) - 2)
    y_min = max(0, min(ys) - 2)

    def px(x) -> str:
        t = Fraction(x - x_min, x_max - x_min)
        return _fmt(_PAD + t * (_W - 2 * _PAD))

    def py(y) -> str:
        t = Fraction(y - y_min, y_max - y_min)
        return _fmt(_H - _PAD - t * (_H - 2 * _PAD))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" y2="{_H - _PAD}" '
        'stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<text x="{_W // 2}" y="{_H - 8}" font-size="12" text-anchor="middle">'
        f"{x_label}</text>",
        f'<text x="14" y="{_H // 2}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 14 {_H // 2})">{y_label}</text>',
    ]
    # axis ticks at the extremes
    for x in sorted({x_min, x_max}):
        parts.append(
            f'<text x="{px(x)}" y="{_H - _PAD + 16}" font-size="10" '
            f'text-anchor="middle">{x}</text>'
        )
    for y in sorted({y_min, y_max}):
        parts.append(
            f'<text x="{_PAD - 6}" y="{py(y)}" font-size="10" '
            f'text-anchor="end">{y}</text>'
        )
    for ov in overlays:
        if ov.kind == "hline":
            parts.append(
                f'<line x1="{_PAD}" y1="{py(ov.value)}" x2="{_W - _PAD}" '
                f'y2="{py(ov.value)}" stroke="gray" stroke-dasharray="6,3"/>'
            )
        elif ov.kind == "hyperbola":
            pts = []
            steps = 160
            lo = max(Fraction(x_min), Fraction(ov.value, y_max))
            hi = Fraction(x_max)
            if lo < hi:
                for i in range(steps + 1):
                    x = lo + (hi - lo) * Fraction(i, steps)
                    if x == 0:
                        continue
                    y = Fraction(ov.value) / x
                    if y_min <= y <= y_max:
                        pts.append(f"{px(x)},{py(y)}")
                parts.append(
                    f'<polyline points="{" ".join(pts)}" fill="none" '
                    'stroke="gray" stroke-dasharray="3,3"/>'
                )
        else:
            raise ValueError(f"unknown overlay kind {ov.kind!r}")
        if ov.label:
            parts.append(
                f'<text x="{_W - _PAD}" y="{py(ov.value) if ov.kind == "hline" else _PAD}"'
                f' font-size="10" text-anchor="end">{ov.label}</text>'
            )
    for x, y in sorted(set(points)):
        parts.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="2" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def size_scatter_svg(points: list[tuple[int, int]], d: int) -> str:
    """Size-versus-size scatter with the (d+1) 2^d product hyperbola."""
    bound = (d + 1) << d
    return emit_scatter(
        points,
        [Overlay("hyperbola", bound, f"x*y = {bound}")],
        x_label="|A|",
        y_label="|B|",
    )


def min_product_svg(points: list[tuple[int, int]], d: int) -> str:
    """min-size versus product scatter with both reference levels."""
    top = (d + 1) << d
    stability = (d << d) + 2 * d
    return emit_scatter(
        points,
        [
            Overlay("hline", top, f"y = {top}"),
            Overlay("hline", stability, f"y = {stability}"),
        ],
        x_label="min(|A|,|B|)",
        y_label="|A|*|B|",
    )
