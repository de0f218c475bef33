"""Reference scenes for the `figures` subcommand.

The source material shows these configurations only as pictures, so the
control points here are hand-picked desk-scale stand-ins; they are
NON-NORMATIVE and recorded in each SVG <desc>.  What is normative is the
construction: which shapes, intervals, and operations each scene exercises.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import (
    MuntzCurve,
    curve_derivative,
    elevate,
    join_c1_interval,
    join_c1_q1,
    make_curve,
    sample_curve,
)
from .partitions import Partition
from .svg import Scene

_SAMPLES = 120

FIGURE_IDS = ("1", "2", "6", "7")


def _polyline_scene(description: str) -> Scene:
    return Scene(description=description)


def _draw_curve(scene: Scene, curve: MuntzCurve, color: str, width: float = 2.0) -> None:
    scene.add_polyline([p for _, p in sample_curve(curve, _SAMPLES)], color, width)


def _draw_polygon(scene: Scene, curve: MuntzCurve, color: str, dash: str, prefix: str) -> None:
    scene.add_polyline(curve.points, color, 1.0, dash)
    for i, p in enumerate(curve.points):
        scene.add_marker(p, color, f"{prefix}{i}")


def _elevation_scene(shape: Partition, target: Partition, description: str) -> Scene:
    curve = make_curve(shape, 3, 1, 2, [(0, 0), (2, 4), (6, 4), (8, 0)])
    lifted = elevate(curve, target)
    scene = _polyline_scene(description)
    _draw_curve(scene, curve, "black")
    _draw_polygon(scene, curve, "#1f77b4", "", "P")
    _draw_polygon(scene, lifted, "#d62728", "6,4", "Q")
    return scene


def figure_1() -> Scene:
    return _elevation_scene(
        Partition((1,)),
        Partition(),
        "Dimension elevation span(1,t^2,t^3,t^4) into span(1,t,t^2,t^3,t^4) "
        "over [1,2]. Control points (0,0),(2,4),(6,4),(8,0) are non-normative "
        "stand-ins chosen for rendering.",
    )


def figure_2() -> Scene:
    return _elevation_scene(
        Partition((2,)),
        Partition((1,)),
        "Dimension elevation span(1,t^3,t^4,t^5) into span(1,t^2,t^3,t^4,t^5) "
        "over [1,2]. Control points (0,0),(2,4),(6,4),(8,0) are non-normative "
        "stand-ins chosen for rendering.",
    )


def _join_scene(
    left: MuntzCurve,
    right: MuntzCurve,
    description: str,
) -> Scene:
    scene = _polyline_scene(description)
    _draw_curve(scene, left, "black")
    _draw_curve(scene, right, "#2ca02c")
    _draw_polygon(scene, left, "#1f77b4", "", "P")
    _draw_polygon(scene, right, "#d62728", "6,4", "Q")
    junction = left.points[-1]
    tangent = curve_derivative(left, left.b)
    tip = tuple(x + Fraction(1, 4) * d for x, d in zip(junction, tangent))
    scene.add_polyline([junction, tip], "#9467bd", 1.0, "2,2")
    return scene


def figure_6() -> Scene:
    left = make_curve(Partition((1, 1)), 3, 1, 3, [(0, 0), (1, 3), (3, 4), (5, 3)])
    c = join_c1_interval(left, Partition(), 1)
    q0 = left.points[-1]
    leg = tuple(x - y for x, y in zip(left.points[-1], left.points[-2]))
    q1 = tuple(x + d for x, d in zip(q0, leg))
    right = make_curve(Partition(), 3, 3, c, [q0, q1, (9, 0), (11, 1)])
    return _join_scene(
        left,
        right,
        "C1 join: column-shape curve over [1,3] continued by a classical "
        f"cubic over [3,{c}]. Follower endpoint solved exactly; control "
        "points are non-normative stand-ins.",
    )


def figure_7() -> Scene:
    left = make_curve(Partition((2, 1)), 3, 1, 3, [(0, 0), (1, 3), (3, 4), (5, 3)])
    c = Fraction(5)
    q1 = join_c1_q1(left, Partition((1, 1)), c)
    right = make_curve(
        Partition((1, 1)), 3, 3, c, [left.points[-1], q1, (9, 1), (10, 0)]
    )
    return _join_scene(
        left,
        right,
        "C1 join of two shaped curves over [1,3] and [3,5]: the follower's "
        "second control point solved exactly from the tangent balance at the "
        "junction. Control points are non-normative stand-ins.",
    )


def figure_scene(which: str) -> Scene:
    table = {"1": figure_1, "2": figure_2, "6": figure_6, "7": figure_7}
    if which not in table:
        raise ValueError(f"unknown figure {which!r}; available: {', '.join(FIGURE_IDS)}")
    return table[which]()
