"""Stateless HTTP JSON API serving digit/walk/classification bundles.

Endpoints:

* ``GET  /api/health`` -> ``{"status":"ok","version":...,"max_digits":...}``
* ``POST /api/walk``   -> full walk bundle for a WalkRequest body
* ``POST /api/period`` -> period structure of a rational number string

Every request is independent and read-only over the immutable config, so
identical requests produce byte-identical bodies.  All error responses are
JSON objects with ``error`` and ``detail`` fields.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import (DEFAULT_DIGIT_BUDGET, __version__, bundle_to_dict, default_max_lag,
               parse_number, rational_period, walk_number)
from .errors import BudgetExceededError, ExprError, MapError, WalkError
from .numspec import Rational
from .walk import builtin_map, map_from_json, map_to_json

__all__ = ["ServiceConfig", "create_server", "serve_forever"]

_MAX_REQUEST_BYTES = 64 * 1024


@dataclass(frozen=True)
class ServiceConfig:
    max_digits: int = DEFAULT_DIGIT_BUDGET
    step_budget: int | None = 50_000_000
    cors_origins: tuple[str, ...] = ("*",)
    max_request_bytes: int = _MAX_REQUEST_BYTES


class _RequestError(Exception):
    def __init__(self, status: int, error: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.error = error
        self.detail = detail


def _require_int(obj: dict, key: str, default=None) -> int:
    value = obj.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise _RequestError(400, "validation error", f"field {key!r} must be an integer")
    return value


def _require_bool(obj: dict, key: str) -> bool:
    value = obj.get(key, False)
    if not isinstance(value, bool):
        raise _RequestError(400, "validation error", f"field {key!r} must be a boolean")
    return value


def _parse_origin(raw, mode: str):
    if raw is None:
        return (0, 0)
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise _RequestError(400, "validation error", "origin must be a [x, y] pair")
    coords = []
    for c in raw:
        if isinstance(c, bool):
            raise _RequestError(400, "validation error", f"bad origin coordinate {c!r}")
        if isinstance(c, str) and mode == "exact":
            try:
                coords.append(Fraction(c))
            except (ValueError, ZeroDivisionError):
                raise _RequestError(400, "validation error",
                                    f"bad origin coordinate {c!r}") from None
        elif isinstance(c, (int, float)):
            coords.append(c if mode == "exact" and isinstance(c, int) else float(c))
        else:
            raise _RequestError(400, "validation error", f"bad origin coordinate {c!r}")
    return tuple(coords)


def _walk_request(body, config: ServiceConfig) -> dict:
    if not isinstance(body, dict):
        raise _RequestError(400, "validation error", "request body must be a JSON object")
    number = body.get("number")
    if not isinstance(number, str) or not number:
        raise _RequestError(400, "validation error", "field 'number' must be a non-empty string")
    n = _require_int(body, "n", 500)
    if n < 1:
        raise _RequestError(400, "validation error", "field 'n' must be >= 1")
    if n > config.max_digits:
        raise _RequestError(413, "digit budget exceeded",
                            f"n={n} is over the server cap of {config.max_digits} digits")

    raw_map = body.get("map", "decagon")
    if isinstance(raw_map, str):
        try:
            vmap = builtin_map(raw_map)
        except MapError as exc:
            raise _RequestError(400, "validation error", str(exc)) from None
    elif isinstance(raw_map, dict):
        try:
            vmap = map_from_json(raw_map)
        except MapError as exc:
            raise _RequestError(422, "malformed custom map", str(exc)) from None
    else:
        raise _RequestError(422, "malformed custom map",
                            "map must be a builtin name or a map object")

    max_lag = body.get("max_lag")
    if max_lag is not None:
        max_lag = _require_int(body, "max_lag")
        if max_lag < 1:
            raise _RequestError(400, "validation error", "field 'max_lag' must be >= 1")

    return {
        "number": number,
        "n": n,
        "map": vmap,
        "map_echo": raw_map if isinstance(raw_map, str) else map_to_json(vmap),
        "origin": _parse_origin(body.get("origin"), vmap.mode),
        "max_lag": max_lag,
        "include_integer_part": _require_bool(body, "include_integer_part"),
        "pad_zeros": _require_bool(body, "pad_zeros"),
    }


def _handle_walk(body, config: ServiceConfig) -> dict:
    req = _walk_request(body, config)
    try:
        bundle = walk_number(
            req["number"],
            n=req["n"],
            vector_map=req["map"],
            origin=req["origin"],
            max_lag=req["max_lag"],
            include_integer_part=req["include_integer_part"],
            pad_zeros=req["pad_zeros"],
            max_digits=config.max_digits,
            step_budget=config.step_budget,
        )
    except ExprError as exc:
        raise _RequestError(400, "parse error", str(exc)) from None
    except BudgetExceededError as exc:
        raise _RequestError(413, "digit budget exceeded", str(exc)) from None
    except WalkError as exc:
        raise _RequestError(400, "validation error", str(exc)) from None
    doc = bundle_to_dict(bundle)
    origin_echo = [c if isinstance(c, (int, float)) else str(c) for c in req["origin"]]
    doc["request"] = {
        "number": req["number"],
        "n": req["n"],
        "map": req["map_echo"],
        "origin": origin_echo,
        "max_lag": req["max_lag"] if req["max_lag"] is not None
                   else default_max_lag(len(bundle.digits)),
        "include_integer_part": req["include_integer_part"],
        "pad_zeros": req["pad_zeros"],
    }
    doc["limits"] = {"max_digits": config.max_digits, "step_budget": config.step_budget}
    return doc


def _handle_period(body) -> dict:
    if isinstance(body, str):
        number = body
    elif isinstance(body, dict) and isinstance(body.get("number"), str):
        number = body["number"]
    else:
        raise _RequestError(400, "validation error",
                            "body must be a number string or {\"number\": ...}")
    try:
        spec = parse_number(number)
    except ExprError as exc:
        raise _RequestError(400, "parse error", str(exc)) from None
    if not isinstance(spec, Rational):
        raise _RequestError(400, "not a rational number",
                            f"{number!r} has no finite period structure; use /api/walk")
    info = rational_period(spec)
    return {
        "preperiod": info.preperiod,
        "period_len": info.period_len,
        "period": "".join(str(d) for d in info.period_digits),
        "preperiod_digits": "".join(str(d) for d in info.preperiod_digits),
    }


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    @property
    def config(self) -> ServiceConfig:
        return self.server.config

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _cors_origin(self):
        allowed = self.config.cors_origins
        if "*" in allowed:
            return "*"
        origin = self.headers.get("Origin")
        return origin if origin in allowed else None

    def _send_json(self, status: int, doc) -> None:
        body = json.dumps(doc, separators=(",", ":")).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        origin = self._cors_origin()
        if origin:
            self.send_header("Access-Control-Allow-Origin", origin)
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, error: str, detail: str) -> None:
        self._send_json(status, {"error": error, "detail": detail})

    def _read_body(self):
        length = self.headers.get("Content-Length")
        if length is None:
            self.close_connection = True
            raise _RequestError(400, "validation error", "missing Content-Length header")
        try:
            length = int(length)
        except ValueError:
            self.close_connection = True
            raise _RequestError(400, "validation error", "bad Content-Length header") from None
        if length > self.config.max_request_bytes:
            # the body stays unread, so the connection cannot be reused
            self.close_connection = True
            raise _RequestError(413, "request too large",
                                f"request body over {self.config.max_request_bytes} bytes")
        raw = self.rfile.read(length)
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise _RequestError(400, "invalid json", str(exc)) from None

    def do_OPTIONS(self):
        self.send_response(204)
        origin = self._cors_origin()
        if origin:
            self.send_header("Access-Control-Allow-Origin", origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._send_json(200, {
                "status": "ok",
                "version": __version__,
                "max_digits": self.config.max_digits,
            })
        elif self.path in ("/api/walk", "/api/period"):
            self._send_error_json(405, "method not allowed", f"POST to {self.path}")
        else:
            self._send_error_json(404, "not found", self.path)

    def do_POST(self):
        try:
            if self.path == "/api/walk":
                body = self._read_body()
                self._send_json(200, _handle_walk(body, self.config))
            elif self.path == "/api/period":
                body = self._read_body()
                self._send_json(200, _handle_period(body))
            else:
                self._send_error_json(404, "not found", self.path)
        except _RequestError as exc:
            self._send_error_json(exc.status, exc.error, exc.detail)
        except Exception as exc:  # noqa: BLE001 -- every failure must stay JSON
            self._send_error_json(500, "internal error", f"{type(exc).__name__}: {exc}")


class _Server(ThreadingHTTPServer):
    daemon_threads = True
    allow_reuse_address = False

    def __init__(self, address, config: ServiceConfig):
        super().__init__(address, _Handler)
        self.config = config

    def handle_error(self, request, client_address):
        exc = sys.exc_info()[1]
        if isinstance(exc, (ConnectionError, TimeoutError)):
            return  # client went away; nothing to report
        super().handle_error(request, client_address)


def create_server(config: ServiceConfig | None = None, host: str = "127.0.0.1",
                  port: int = 0) -> _Server:
    """Bind the service; raises OSError if the port is busy. ``port=0`` picks
    an ephemeral port (see ``server.server_address``)."""
    return _Server((host, port), config or ServiceConfig())


def serve_forever(server: _Server) -> None:
    """Serve until interrupted, then finish in-flight requests and close."""
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.shutdown()
        server.server_close()
