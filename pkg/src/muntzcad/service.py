"""Stateless JSON-over-HTTP service exposing the kernel.

All computation happens in pure kernel calls, so identical requests produce
byte-identical responses.  Schema problems return 400 with a field-level
error list; domain violations (e.g. a <= 0 with a non-empty shape) return
422.  The dispatcher is a plain function so it can be exercised without a
socket.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from .bernstein import bernstein_basis
from .errors import KernelError
from .geometry import (
    curve_eval,
    elevate,
    elevation_weights,
    join_c1_interval,
    join_c1_q1,
    sample_curve,
    sample_surface,
)
from .jsonio import (
    MAX_ORDER,
    ValidationError,
    curve_from_dict,
    curve_to_dict,
    parse_number,
    parse_order,
    parse_partition,
    point_payload,
    rational_payload,
    surface_from_dict,
)
from .partitions import dimension_elevation_partitions
from .rationals import format_rational

_MAX_SAMPLES = 4096


def _require(payload: Any, *keys: str) -> dict:
    if not isinstance(payload, dict):
        raise ValidationError([("$", "expected a JSON object")])
    missing = [(k, "missing") for k in keys if k not in payload]
    if missing:
        raise ValidationError(missing)
    return payload


def _sample_count(payload: dict) -> int:
    m = payload.get("m", 33)
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValidationError([("m", "expected an integer sample count >= 2")])
    if m > _MAX_SAMPLES:
        raise ValidationError([("m", f"sample count {m} exceeds the guard {_MAX_SAMPLES}")])
    return m


def _handle_basis(payload: dict) -> dict:
    _require(payload, "partition", "n", "interval")
    shape = parse_partition(payload["partition"], "partition")
    n = parse_order(payload["n"], "n")
    from .blossom import make_space
    from .jsonio import parse_interval

    a, b = parse_interval(payload["interval"], "interval")
    basis = bernstein_basis(make_space(shape, n), a, b)
    return {
        "partition": list(shape.parts),
        "n": n,
        "interval": [format_rational(a), format_rational(b)],
        "exponents": list(basis.space.exponents),
        "elements": [p.to_json() for p in basis.elements],
        "elements_decimal": [
            {e: float(c) for e, c in p.terms.items()} for p in basis.elements
        ],
    }


def _handle_eval(payload: dict) -> dict:
    _require(payload, "curve", "t")
    curve = curve_from_dict(payload["curve"])
    t = parse_number(payload["t"], "t")
    return {"point": point_payload(curve_eval(curve, t))}


def _handle_sample(payload: dict) -> dict:
    _require(payload, "curve")
    curve = curve_from_dict(payload["curve"])
    m = _sample_count(payload)
    return {
        "samples": [
            {"t": format_rational(t), **point_payload(p)}
            for t, p in sample_curve(curve, m)
        ]
    }


def _handle_elevate(payload: dict) -> dict:
    _require(payload, "curve", "target")
    curve = curve_from_dict(payload["curve"])
    target = parse_partition(payload["target"], "target")
    lifted = elevate(curve, target)
    n = curve.space.n
    weights = []
    for k in range(1, n + 1):
        rho, xi = elevation_weights(
            curve.space.shape, target, n, curve.a, curve.b, k
        )
        weights.append({"k": k, "rho": rational_payload(rho), "xi": rational_payload(xi)})
    return {
        "curve": curve_to_dict(lifted),
        "points": [point_payload(p) for p in lifted.points],
        "weights": weights,
    }


def _handle_join(payload: dict) -> dict:
    _require(payload, "left", "mu")
    curve = curve_from_dict(payload["left"])
    mu = parse_partition(payload["mu"], "mu")
    has_rho = "rho" in payload
    has_c = "c" in payload
    if has_rho == has_c:
        raise ValidationError([("join", "pass exactly one of rho or c")])
    if has_rho:
        c = join_c1_interval(curve, mu, parse_number(payload["rho"], "rho"))
        return {"c": rational_payload(c)}
    q1 = join_c1_q1(curve, mu, parse_number(payload["c"], "c"))
    return {"q1": point_payload(q1)}


def _handle_surface(payload: dict) -> dict:
    _require(payload, "surface")
    surface = surface_from_dict(payload["surface"])
    m = _sample_count(payload)
    if m * m > _MAX_SAMPLES:
        raise ValidationError([("m", f"grid {m}x{m} exceeds the guard {_MAX_SAMPLES}")])
    return {
        "samples": [
            {"s": format_rational(s), "t": format_rational(t), **point_payload(p)}
            for s, t, p in sample_surface(surface, m)
        ]
    }


def _handle_elevation_partitions(payload: dict) -> dict:
    _require(payload, "partition", "n")
    shape = parse_partition(payload["partition"], "partition")
    n = parse_order(payload["n"], "n")
    r_max = payload.get("r_max", 2)
    if isinstance(r_max, bool) or not isinstance(r_max, int) or r_max < 0 or r_max > MAX_ORDER:
        raise ValidationError([("r_max", f"expected an integer in 0..{MAX_ORDER}")])
    shapes = dimension_elevation_partitions(shape, n, r_max)
    return {"partitions": [list(s.parts) for s in shapes]}


_POST_ROUTES = {
    "/v1/basis": _handle_basis,
    "/v1/eval": _handle_eval,
    "/v1/sample": _handle_sample,
    "/v1/elevate": _handle_elevate,
    "/v1/join": _handle_join,
    "/v1/surface": _handle_surface,
    "/v1/elevation-partitions": _handle_elevation_partitions,
}


def dispatch(method: str, path: str, payload: Any) -> tuple[int, dict]:
    """Pure request handler: (status, response body)."""
    if method == "GET" and path == "/v1/health":
        return 200, {"status": "ok"}
    if method != "POST" or path not in _POST_ROUTES:
        return 404, {"errors": [{"field": "path", "message": f"no route {method} {path}"}]}
    try:
        return 200, _POST_ROUTES[path](payload)
    except ValidationError as exc:
        return 400, {"errors": exc.to_json()}
    except KernelError as exc:
        return 422, {"errors": [{"field": "domain", "message": str(exc)}]}


def encode_response(body: dict) -> bytes:
    return json.dumps(body, sort_keys=True, separators=(",", ":")).encode()


class _Handler(BaseHTTPRequestHandler):
    server_version = "muntzcad"
    protocol_version = "HTTP/1.1"

    def _send(self, status: int, body: dict) -> None:
        data = encode_response(body)
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(data)

    def do_GET(self):  # noqa: N802 (http.server API)
        status, body = dispatch("GET", self.path, None)
        self._send(status, body)

    def do_OPTIONS(self):  # noqa: N802
        self._send(204, {})

    def do_POST(self):  # noqa: N802
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length) if length else b""
        try:
            payload = json.loads(raw) if raw else {}
        except json.JSONDecodeError as exc:
            self._send(400, {"errors": [{"field": "$", "message": f"bad JSON: {exc}"}]})
            return
        status, body = dispatch("POST", self.path, payload)
        self._send(status, body)

    def log_message(self, fmt, *args):  # quiet by default
        if os.environ.get("MUNTZCAD_LOG"):
            super().log_message(fmt, *args)


def make_server(bind: str = "127.0.0.1:0") -> ThreadingHTTPServer:
    host, _, port = bind.rpartition(":")
    return ThreadingHTTPServer((host or "127.0.0.1", int(port)), _Handler)


def serve(bind: str | None = None) -> None:
    """Run until interrupted; bind defaults to MUNTZCAD_BIND or localhost."""
    bind = bind or os.environ.get("MUNTZCAD_BIND", "127.0.0.1:8776")
    server = make_server(bind)
    host, port = server.server_address[:2]
    print(f"listening on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
