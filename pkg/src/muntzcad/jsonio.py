"""JSON schemas for curves and surfaces, with field-level validation.

Rationals travel as "p/q" strings (exact); plain integers and decimal
strings are accepted on input and converted exactly, never through binary
floats.  Responses carry both the exact strings and float renderings.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Any, Sequence

from .errors import KernelError
from .geometry import MuntzCurve, TensorSurface, make_curve, make_surface
from .partitions import Partition
from .rationals import format_rational, parse_rational

# Combinatorial counts grow fast with these; guard desk scale by default,
# overridable through the environment for bigger machines.
MAX_ORDER = int(os.environ.get("MUNTZCAD_MAX_ORDER", "12"))
MAX_WEIGHT = int(os.environ.get("MUNTZCAD_MAX_WEIGHT", "40"))


class ValidationError(ValueError):
    """Structured schema failure: a list of (field, message) pairs."""

    def __init__(self, issues: list[tuple[str, str]]):
        self.issues = issues
        super().__init__("; ".join(f"{f}: {m}" for f, m in issues))

    def to_json(self) -> list[dict[str, str]]:
        return [{"field": f, "message": m} for f, m in self.issues]


def _fail(field: str, message: str) -> ValidationError:
    return ValidationError([(field, message)])


def parse_number(value: Any, field: str) -> Fraction:
    if isinstance(value, bool):
        raise _fail(field, "expected a rational number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # Floats in request bodies are decimal text at heart; rebuild the
        # decimal exactly rather than trusting the binary value.
        return parse_rational(repr(value))
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            raise _fail(field, str(exc)) from exc
    raise _fail(field, f"expected a rational number, got {type(value).__name__}")


def parse_partition(value: Any, field: str) -> Partition:
    if not isinstance(value, (list, tuple)):
        raise _fail(field, "expected an array of non-increasing integers")
    parts = []
    for i, entry in enumerate(value):
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise _fail(f"{field}[{i}]", "expected an integer part")
        parts.append(entry)
    try:
        shape = Partition(parts)
    except KernelError as exc:
        raise _fail(field, str(exc)) from exc
    if shape.weight > MAX_WEIGHT:
        raise _fail(field, f"weight {shape.weight} exceeds the guard {MAX_WEIGHT}")
    return shape


def parse_order(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(field, "expected a positive integer order")
    if value < 1:
        raise _fail(field, "order must be at least 1")
    if value > MAX_ORDER:
        raise _fail(field, f"order {value} exceeds the guard {MAX_ORDER}")
    return value


def parse_interval(value: Any, field: str) -> tuple[Fraction, Fraction]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise _fail(field, "expected [a, b]")
    return parse_number(value[0], f"{field}[0]"), parse_number(value[1], f"{field}[1]")


def parse_points(value: Any, field: str) -> list[list[Fraction]]:
    if not isinstance(value, (list, tuple)) or not value:
        raise _fail(field, "expected a non-empty array of points")
    out = []
    for i, point in enumerate(value):
        if not isinstance(point, (list, tuple)) or not point:
            raise _fail(f"{field}[{i}]", "expected a coordinate array")
        out.append([parse_number(x, f"{field}[{i}][{j}]") for j, x in enumerate(point)])
    return out


def curve_from_dict(doc: Any) -> MuntzCurve:
    if not isinstance(doc, dict):
        raise _fail("$", "expected a curve object")
    issues: list[tuple[str, str]] = []
    for key in ("partition", "n", "interval", "points"):
        if key not in doc:
            issues.append((key, "missing"))
    if issues:
        raise ValidationError(issues)
    shape = parse_partition(doc["partition"], "partition")
    n = parse_order(doc["n"], "n")
    a, b = parse_interval(doc["interval"], "interval")
    points = parse_points(doc["points"], "points")
    if len(points) != n + 1:
        raise _fail("points", f"need n+1 = {n + 1} control points, got {len(points)}")
    return make_curve(shape, n, a, b, points)


def curve_to_dict(curve: MuntzCurve) -> dict[str, Any]:
    return {
        "partition": list(curve.space.shape.parts),
        "n": curve.space.n,
        "interval": [format_rational(curve.a), format_rational(curve.b)],
        "points": [[format_rational(x) for x in p] for p in curve.points],
    }


def surface_from_dict(doc: Any) -> TensorSurface:
    if not isinstance(doc, dict):
        raise _fail("$", "expected a surface object")
    issues = [
        (key, "missing")
        for key in ("partition_u", "partition_v", "n", "interval_u", "interval_v", "points")
        if key not in doc
    ]
    if issues:
        raise ValidationError(issues)
    shape_u = parse_partition(doc["partition_u"], "partition_u")
    shape_v = parse_partition(doc["partition_v"], "partition_v")
    n = parse_order(doc["n"], "n")
    iu = parse_interval(doc["interval_u"], "interval_u")
    iv = parse_interval(doc["interval_v"], "interval_v")
    raw = doc["points"]
    if not isinstance(raw, (list, tuple)) or len(raw) != n + 1:
        raise _fail("points", f"need an (n+1) x (n+1) grid with n+1 = {n + 1} rows")
    grid = [parse_points(row, f"points[{i}]") for i, row in enumerate(raw)]
    for i, row in enumerate(grid):
        if len(row) != n + 1:
            raise _fail(f"points[{i}]", f"need {n + 1} points per row, got {len(row)}")
    return make_surface(shape_u, shape_v, n, iu, iv, grid)


def surface_to_dict(surface: TensorSurface) -> dict[str, Any]:
    return {
        "partition_u": list(surface.space_u.shape.parts),
        "partition_v": list(surface.space_v.shape.parts),
        "n": surface.space_u.n,
        "interval_u": [format_rational(surface.a), format_rational(surface.b)],
        "interval_v": [format_rational(surface.c), format_rational(surface.d)],
        "points": [
            [[format_rational(x) for x in p] for p in row] for row in surface.grid
        ],
    }


def point_payload(point: Sequence[Fraction]) -> dict[str, Any]:
    return {
        "exact": [format_rational(x) for x in point],
        "decimal": [float(x) for x in point],
    }


def rational_payload(x: Fraction) -> dict[str, Any]:
    return {"exact": format_rational(x), "decimal": float(x)}
