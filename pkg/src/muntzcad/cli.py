"""Command-line interface to the kernel.

Validation failures exit with status 2 and a machine-readable JSON object on
stderr; successful output goes to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import service
from .bernstein import bernstein_basis
from .blossom import blossom, blossom_oracle, make_space
from .errors import KernelError
from .geometry import (
    curve_eval,
    elevate,
    join_c1_interval,
    join_c1_q1,
    sample_curve,
    sample_surface,
)
from .jsonio import (
    ValidationError,
    curve_from_dict,
    curve_to_dict,
    point_payload,
    rational_payload,
    surface_from_dict,
)
from .partitions import Partition
from .paths import enumerate_paths, path_sum_basis, path_weight
from .rationals import format_rational, parse_rational
from .scenes import FIGURE_IDS, figure_scene
from .svg import Scene


def parse_partition_text(text: str) -> Partition:
    """Accept "(2,1)", "2,1", "[]", "()", "empty", or "-" for the empty shape."""
    s = text.strip().strip("()[]")
    if s in ("", "empty", "-", "0"):
        return Partition()
    try:
        return Partition(int(p) for p in s.split(","))
    except (ValueError, KernelError) as exc:
        raise ValidationError([("partition", f"bad partition {text!r}: {exc}")]) from exc


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError([("file", f"cannot read {path}: {exc}")]) from exc
    except json.JSONDecodeError as exc:
        raise ValidationError([("file", f"{path} is not valid JSON: {exc}")]) from exc


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise ValidationError([("argument", str(exc))]) from exc


# -- subcommand handlers ------------------------------------------------------


def _cmd_schur(args) -> int:
    from .symfunc import schur

    shape = parse_partition_text(args.partition)
    values = [_rat(v) for v in args.values]
    print(format_rational(schur(shape, values)))
    return 0


def _cmd_blossom(args) -> int:
    shape = parse_partition_text(args.partition)
    space = make_space(shape, args.n)
    values = [_rat(v) for v in args.values]
    via_schur = blossom(space, values)
    out = {
        "schur_formula": [format_rational(x) for x in via_schur],
    }
    if len(set(values)) == len(values):
        via_oracle = blossom_oracle(space, values)
        out["flat_oracle"] = [format_rational(x) for x in via_oracle]
        out["agree"] = via_oracle == via_schur
    _print_json(out)
    return 0


def _cmd_basis(args) -> int:
    shape = parse_partition_text(args.partition)
    space = make_space(shape, args.n)
    basis = bernstein_basis(space, _rat(args.a), _rat(args.b))
    _print_json(
        {
            "partition": list(shape.parts),
            "n": args.n,
            "interval": [format_rational(basis.a), format_rational(basis.b)],
            "exponents": list(space.exponents),
            "elements": [p.to_json() for p in basis.elements],
        }
    )
    return 0


def _cmd_eval(args) -> int:
    curve = curve_from_dict(_load_json(args.curve))
    point = curve_eval(curve, _rat(args.t))
    _print_json(point_payload(point))
    return 0


def _sample_csv(samples) -> str:
    dim = len(samples[0][1])
    header = "t," + ",".join(f"x{d}" for d in range(dim))
    lines = [header]
    for t, p in samples:
        lines.append(",".join([format_rational(t)] + [format_rational(x) for x in p]))
    return "\r\n".join(lines) + "\r\n"


def _cmd_sample(args) -> int:
    curve = curve_from_dict(_load_json(args.curve))
    samples = sample_curve(curve, args.m)
    if args.format == "csv":
        sys.stdout.write(_sample_csv(samples))
    elif args.format == "svg":
        scene = Scene(description="curve with control polygon")
        scene.add_polyline([p for _, p in samples], "black", 2.0)
        scene.add_polyline(curve.points, "#1f77b4", 1.0, "4,3")
        for i, p in enumerate(curve.points):
            scene.add_marker(p, "#1f77b4", f"P{i}")
        sys.stdout.write(scene.to_svg())
    else:
        _print_json(
            {
                "samples": [
                    {"t": format_rational(t), **point_payload(p)} for t, p in samples
                ]
            }
        )
    return 0


def _cmd_elevate(args) -> int:
    curve = curve_from_dict(_load_json(args.curve))
    target = parse_partition_text(args.target)
    _print_json(curve_to_dict(elevate(curve, target)))
    return 0


def _cmd_join(args) -> int:
    curve = curve_from_dict(_load_json(args.left))
    mu = parse_partition_text(args.mu)
    if (args.rho is None) == (args.c is None):
        raise ValidationError([("join", "pass exactly one of --rho or --c")])
    if args.rho is not None:
        c = join_c1_interval(curve, mu, _rat(args.rho))
        _print_json({"c": rational_payload(c)})
    else:
        q1 = join_c1_q1(curve, mu, _rat(args.c))
        _print_json({"q1": point_payload(q1)})
    return 0


def _cmd_surface(args) -> int:
    surface = surface_from_dict(_load_json(args.surface))
    samples = sample_surface(surface, args.m)
    _print_json(
        {
            "samples": [
                {
                    "s": format_rational(s),
                    "t": format_rational(t),
                    **point_payload(p),
                }
                for s, t, p in samples
            ]
        }
    )
    return 0


def _cmd_paths(args) -> int:
    shape = parse_partition_text(args.partition)
    space = make_space(shape, args.n)
    a, b, t = _rat(args.a), _rat(args.b), _rat(args.t)
    paths = enumerate_paths(args.n, args.k)
    weights = [path_weight(space, a, b, t, p) for p in paths]
    total = path_sum_basis(space, a, b, t, args.k)
    basis_value = bernstein_basis(space, a, b).elements[args.k](t)
    _print_json(
        {
            "paths": [[list(s) for s in p.sets] for p in paths],
            "weights": [format_rational(w) for w in weights],
            "sum": format_rational(total),
            "basis_value": format_rational(basis_value),
            "agree": total == basis_value,
        }
    )
    return 0


def _cmd_figures(args) -> int:
    sys.stdout.write(figure_scene(args.which).to_svg())
    return 0


def _cmd_serve(args) -> int:
    service.serve(args.bind)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="muntzcad",
        description="Exact Muntz-space Bezier kernel with Young-diagram shape parameters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="evaluate a Schur function exactly")
    p.add_argument("partition")
    p.add_argument("values", nargs="+")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("blossom", help="blossom value via Schur formula and flat oracle")
    p.add_argument("partition")
    p.add_argument("n", type=int)
    p.add_argument("values", nargs="+")
    p.set_defaults(func=_cmd_blossom)

    p = sub.add_parser("basis", help="print the generalized Bernstein basis polynomials")
    p.add_argument("partition")
    p.add_argument("n", type=int)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("eval", help="evaluate a curve document at a parameter")
    p.add_argument("curve")
    p.add_argument("-t", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sample", help="sample a curve document")
    p.add_argument("curve")
    p.add_argument("-m", type=int, default=33)
    p.add_argument(
        "--format", choices=("json", "csv", "svg"), default="json", dest="format"
    )
    p.add_argument("--json", action="store_const", const="json", dest="format")
    p.add_argument("--csv", action="store_const", const="csv", dest="format")
    p.add_argument("--svg", action="store_const", const="svg", dest="format")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("elevate", help="rewrite a curve in a larger nested space")
    p.add_argument("curve")
    p.add_argument("target")
    p.set_defaults(func=_cmd_elevate)

    p = sub.add_parser("join", help="solve the C1 continuation of a curve")
    p.add_argument("left")
    p.add_argument("--mu", required=True)
    p.add_argument("--rho")
    p.add_argument("--c")
    p.set_defaults(func=_cmd_join)

    p = sub.add_parser("surface", help="sample a tensor-product surface document")
    p.add_argument("surface")
    p.add_argument("-m", type=int, default=9)
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("paths", help="enumerate weighted evaluation paths")
    p.add_argument("partition")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("t")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("figures", help="render a reference scene as SVG")
    p.add_argument("which", choices=FIGURE_IDS)
    p.set_defaults(func=_cmd_figures)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--bind", default="127.0.0.1:8776")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        json.dump({"errors": exc.to_json()}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except KernelError as exc:
        json.dump(
            {"errors": [{"field": "domain", "message": str(exc)}]}, sys.stderr
        )
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
