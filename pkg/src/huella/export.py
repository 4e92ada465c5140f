"""Serializers for digits, walks, and classifications.

All float output uses 12 significant digits, which is below double-precision
noise and stable across platforms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from html import escape

from .analyze import (BoundingBox, NoPeriodFound, Periodic, Terminating,
                      WalkClass, bounding_box)
from .digits import PeriodInfo
from .walk import VectorMap, WalkPath, map_to_json

__all__ = [
    "ExportBundle",
    "to_svg",
    "to_csv",
    "to_geogebra",
    "to_json",
    "bundle_to_dict",
    "classification_to_dict",
    "classification_label",
    "overlay_svg",
]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass
class ExportBundle:
    number: str
    digits: list[int]
    path: WalkPath
    classification: WalkClass
    vector_map: VectorMap
    period_info: PeriodInfo | None = None

    def __post_init__(self):
        if list(self.digits) != list(self.path.digits):
            raise ValueError("bundle digits do not drive the bundle path")


def _fmt(value) -> str:
    """12-significant-digit decimal text; -0 normalizes to 0."""
    f = float(value)
    if f == 0:
        f = 0.0
    return format(f, ".12g")


def classification_label(cls: WalkClass) -> str:
    if isinstance(cls, Terminating):
        return f"terminating after {cls.steps} steps"
    if isinstance(cls, Periodic):
        dx, dy = cls.drift.drift
        label = f"periodic lag={cls.lag} drift=({_fmt(dx)},{_fmt(dy)})"
        return label + " closed" if cls.drift.closed else label
    if isinstance(cls, NoPeriodFound):
        return f"no period found (horizon={cls.horizon}, max_lag={cls.max_lag})"
    raise TypeError(f"not a classification: {cls!r}")


def classification_to_dict(cls: WalkClass) -> dict:
    if isinstance(cls, Terminating):
        return {"kind": "terminating", "steps": cls.steps}
    if isinstance(cls, Periodic):
        dx, dy = cls.drift.drift
        return {
            "kind": "periodic",
            "preperiod": cls.preperiod,
            "lag": cls.lag,
            "drift": [float(dx), float(dy)],
            "closed": cls.drift.closed,
        }
    if isinstance(cls, NoPeriodFound):
        return {"kind": "no_period_found", "horizon": cls.horizon, "max_lag": cls.max_lag}
    raise TypeError(f"not a classification: {cls!r}")


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

class _Viewport:
    """Uniform world-to-screen transform over a 5%-padded bounding box."""

    def __init__(self, box: BoundingBox, width: float):
        min_x, min_y = float(box.min_x), float(box.min_y)
        max_x, max_y = float(box.max_x), float(box.max_y)
        span = max(max_x - min_x, max_y - min_y)
        pad = 0.05 * span if span > 0 else 1.0
        self.scale = width / (max_x - min_x + 2 * pad)
        self.width = width
        self.height = (max_y - min_y + 2 * pad) * self.scale
        self.min_x, self.max_y, self.pad = min_x, max_y, pad

    def screen(self, x, y) -> tuple[float, float]:
        return ((float(x) - self.min_x + self.pad) * self.scale,
                (self.max_y + self.pad - float(y)) * self.scale)


def _points_attr(path: WalkPath, viewport: _Viewport, start: int, stop: int) -> str:
    pts = path.points_float()
    pieces = []
    for x, y in pts[start:stop]:
        sx, sy = viewport.screen(x, y)
        pieces.append(f"{_fmt(sx)},{_fmt(sy)}")
    return " ".join(pieces)


def _polyline(points_attr: str, stroke: str, stroke_width, css: str) -> str:
    return (f'<polyline class="{css}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_fmt(stroke_width)}" points="{points_attr}"/>')


def to_svg(bundle: ExportBundle, width: float = 800.0, stroke: str = "#1f77b4",
           stroke_width: float = 1.5, banding: bool | None = None) -> str:
    """Standalone SVG: one polyline through all points, 5%-padded viewport,
    origin marker, and per-period color banding when the walk is periodic."""
    path = bundle.path
    if len(path) == 0:
        raise ValueError("empty path")
    viewport = _Viewport(bounding_box(path), width)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(viewport.width)}" '
        f'height="{_fmt(viewport.height)}" '
        f'viewBox="0 0 {_fmt(viewport.width)} {_fmt(viewport.height)}">',
        _polyline(_points_attr(path, viewport, 0, len(path)), stroke, stroke_width, "trace"),
    ]
    cls = bundle.classification
    if banding is None:
        banding = isinstance(cls, Periodic)
    if banding and isinstance(cls, Periodic) and cls.lag >= 1:
        n = len(path.digits)
        block = 0
        start = cls.preperiod
        while start + cls.lag <= n:
            color = _PALETTE[block % len(_PALETTE)]
            attr = _points_attr(path, viewport, start, start + cls.lag + 1)
            parts.append(_polyline(attr, color, stroke_width, "band"))
            start += cls.lag
            block += 1
    ox, oy = viewport.screen(*[float(c) for c in path.point(0)])
    parts.append(f'<circle class="origin" cx="{_fmt(ox)}" cy="{_fmt(oy)}" r="3" fill="#111111"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def overlay_svg(bundles, width: float = 900.0, stroke_width: float = 1.5) -> str:
    """Several walks in one shared viewport with a legend."""
    if not bundles:
        raise ValueError("nothing to overlay")
    boxes = [bounding_box(b.path) for b in bundles]
    union = BoundingBox(
        min(float(b.min_x) for b in boxes),
        min(float(b.min_y) for b in boxes),
        max(float(b.max_x) for b in boxes),
        max(float(b.max_y) for b in boxes),
    )
    viewport = _Viewport(union, width)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(viewport.width)}" '
        f'height="{_fmt(viewport.height)}" '
        f'viewBox="0 0 {_fmt(viewport.width)} {_fmt(viewport.height)}">',
    ]
    for i, bundle in enumerate(bundles):
        color = _PALETTE[i % len(_PALETTE)]
        attr = _points_attr(bundle.path, viewport, 0, len(bundle.path))
        parts.append(_polyline(attr, color, stroke_width, f"trace trace-{i}"))
    for i, bundle in enumerate(bundles):
        color = _PALETTE[i % len(_PALETTE)]
        label = escape(f"{bundle.number} — {classification_label(bundle.classification)}")
        parts.append(f'<text x="10" y="{18 + 18 * i}" font-family="monospace" '
                     f'font-size="13" fill="{color}">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# CSV / GeoGebra / JSON
# ---------------------------------------------------------------------------

def to_csv(bundle: ExportBundle) -> str:
    """step,digit,x,y rows; row 0 is the origin with an empty digit field."""
    path = bundle.path
    x0, y0 = path.point(0)
    rows = ["step,digit,x,y", f"0,,{_fmt(x0)},{_fmt(y0)}"]
    for k, digit in enumerate(bundle.digits, start=1):
        x, y = path.point(k)
        rows.append(f"{k},{digit},{_fmt(x)},{_fmt(y)}")
    return "\r\n".join(rows) + "\r\n"


def to_geogebra(bundle: ExportBundle) -> str:
    """Three-line GeoGebra command script: digit list, point list, polyline."""
    if not bundle.digits:
        raise ValueError("empty digit list")
    path = bundle.path
    cifras = "cifras={" + ",".join(str(d) for d in bundle.digits) + "}"
    pts = []
    for i in range(len(path)):
        x, y = path.point(i)
        pts.append(f"({_fmt(x)},{_fmt(y)})")
    puntos = "puntos={" + ",".join(pts) + "}"
    return "\n".join([cifras, puntos, "huella=Polyline(puntos)"]) + "\n"


def bundle_to_dict(bundle: ExportBundle) -> dict:
    path = bundle.path
    box = bounding_box(path)
    doc = {
        "number": bundle.number,
        "map": map_to_json(bundle.vector_map),
        "digits": list(bundle.digits),
        "points": [[float(x), float(y)] for x, y in path.points_float()],
        "classification": classification_to_dict(bundle.classification),
        "period": None,
        "bbox": {"min": [float(box.min_x), float(box.min_y)],
                 "max": [float(box.max_x), float(box.max_y)]},
        "terminated": bool(path.terminated),
    }
    if bundle.period_info is not None:
        info = bundle.period_info
        doc["period"] = {
            "preperiod": info.preperiod,
            "period_len": info.period_len,
            "preperiod_digits": list(info.preperiod_digits),
            "period_digits": list(info.period_digits),
        }
    return doc


def to_json(bundle: ExportBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), separators=(",", ":"))
