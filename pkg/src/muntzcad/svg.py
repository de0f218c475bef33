"""Deterministic SVG 1.1 rendering of curve scenes.

Exact rationals are converted to floats only here, at coordinate emission,
with fixed formatting so identical inputs yield identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Point = Sequence[Fraction]

_CANVAS = 640.0
_PAD = 40.0


def _fmt(x: float) -> str:
    return f"{x:.3f}"


@dataclass
class Scene:
    """Accumulates primitives in data coordinates, then emits fitted SVG."""

    description: str = ""
    polylines: list[tuple[list[tuple[float, float]], str, float, str]] = field(
        default_factory=list
    )
    markers: list[tuple[float, float, str, str]] = field(default_factory=list)

    def add_polyline(
        self,
        points: Sequence[Point],
        color: str,
        width: float = 1.5,
        dash: str = "",
    ) -> None:
        self.polylines.append(
            ([(float(p[0]), float(p[1])) for p in points], color, width, dash)
        )

    def add_marker(self, point: Point, color: str, label: str = "") -> None:
        self.markers.append((float(point[0]), float(point[1]), color, label))

    def _bounds(self) -> tuple[float, float, float, float]:
        xs = [x for line, *_ in self.polylines for x, _ in line]
        ys = [y for line, *_ in self.polylines for _, y in line]
        xs += [x for x, _, _, _ in self.markers]
        ys += [y for _, y, _, _ in self.markers]
        if not xs:
            return 0.0, 0.0, 1.0, 1.0
        return min(xs), min(ys), max(xs), max(ys)

    def to_svg(self) -> str:
        x0, y0, x1, y1 = self._bounds()
        span = max(x1 - x0, y1 - y0, 1e-9)
        scale = (_CANVAS - 2 * _PAD) / span

        def tx(x: float) -> float:
            return _PAD + (x - x0) * scale

        def ty(y: float) -> float:
            # SVG y grows downward; flip so the data's y grows upward.
            return _CANVAS - _PAD - (y - y0) * scale

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(_CANVAS)}" height="{_fmt(_CANVAS)}" '
            f'viewBox="0 0 {_fmt(_CANVAS)} {_fmt(_CANVAS)}">',
        ]
        if self.description:
            out.append(f"<desc>{self.description}</desc>")
        out.append('<rect width="100%" height="100%" fill="white"/>')
        for line, color, width, dash in self.polylines:
            pts = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in line)
            dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
            out.append(
                f'<polyline fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(width)}"{dash_attr} points="{pts}"/>'
            )
        for x, y, color, label in self.markers:
            out.append(
                f'<circle cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="4.000" fill="{color}"/>'
            )
            if label:
                out.append(
                    f'<text x="{_fmt(tx(x) + 7.0)}" y="{_fmt(ty(y) - 7.0)}" '
                    f'font-family="monospace" font-size="12">{label}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"
