"""huella: geometric walks of decimal expansions.

Each fractional digit of a number selects a plane vector; summing them step
by step draws a trace whose shape reflects the arithmetic of the expansion:
terminating expansions halt, repeating ones translate with a fixed drift,
and expansions with no detected repetition wander.
"""

from __future__ import annotations

import math

from .analyze import (FLOAT_TOL, BoundingBox, DriftReport, Inconclusive,
                      NoPeriodFound, Periodic, Terminating, WalkClass,
                      bounding_box, classify_walk, detect_translation,
                      drift_vector)
from .digits import (DEFAULT_DIGIT_BUDGET, DigitBatch, DigitStream, PeriodInfo,
                     digit_stream, multiplicative_order_of_ten, rational_period,
                     remainder_cycle_period, take_digits)
from .errors import (BudgetExceededError, ConsistencyError, ExprError,
                     HuellaError, MapError, WalkError)
from .export import (ExportBundle, bundle_to_dict, classification_label,
                     classification_to_dict, overlay_svg, to_csv, to_geogebra,
                     to_json, to_svg)
from .numspec import (DigitLiteral, E, NumberSpec, Pi, Rational, Sqrt,
                      format_number, parse_number)
from .walk import (CHECKPOINT, VectorMap, WalkPath, build_walk, builtin_map,
                   builtin_map_names, load_map_file, map_from_json, map_to_json,
                   position_from_counts)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # numspec
    "NumberSpec", "Rational", "Sqrt", "Pi", "E", "DigitLiteral",
    "parse_number", "format_number",
    # digits
    "DEFAULT_DIGIT_BUDGET", "DigitBatch", "DigitStream", "PeriodInfo",
    "digit_stream", "take_digits", "rational_period", "remainder_cycle_period",
    "multiplicative_order_of_ten", "integer_digits",
    # walk
    "CHECKPOINT", "VectorMap", "WalkPath", "builtin_map", "builtin_map_names",
    "build_walk", "position_from_counts", "map_from_json", "map_to_json",
    "load_map_file",
    # analyze
    "FLOAT_TOL", "DriftReport", "Inconclusive", "Terminating", "Periodic",
    "NoPeriodFound", "WalkClass", "BoundingBox", "drift_vector",
    "detect_translation", "classify_walk", "bounding_box",
    # export
    "ExportBundle", "to_svg", "to_csv", "to_geogebra", "to_json",
    "bundle_to_dict", "classification_to_dict", "classification_label",
    "overlay_svg",
    # pipeline
    "walk_number", "default_max_lag",
    # errors
    "HuellaError", "ExprError", "BudgetExceededError", "MapError", "WalkError",
    "ConsistencyError",
]


def default_max_lag(n: int) -> int:
    """Default lag search bound: a positive needs min_windows full windows
    inside the horizon, so a third of the digits, capped at 2000."""
    return max(1, min(n // 3, 2000))


def integer_digits(spec: NumberSpec) -> list[int]:
    """Decimal digits of the integer part of |spec|, most significant first."""
    if isinstance(spec, Rational):
        value = abs(spec.numerator) // spec.denominator
    elif isinstance(spec, Sqrt):
        value = math.isqrt(spec.radicand)
    elif isinstance(spec, Pi):
        value = 3
    elif isinstance(spec, E):
        value = 2
    elif isinstance(spec, DigitLiteral):
        value = spec.integer_part
    else:
        raise TypeError(f"not a NumberSpec: {spec!r}")
    return [int(c) for c in str(value)]


def walk_number(number, n: int = 500, vector_map="decagon", origin=(0, 0),
                max_lag: int | None = None, include_integer_part: bool = False,
                pad_zeros: bool = False, max_digits: int = DEFAULT_DIGIT_BUDGET,
                min_windows: int = 3, step_budget: int | None = None) -> ExportBundle:
    """Full pipeline: digits -> walk -> classification, bundled for export.

    ``number`` is an expression string or a NumberSpec; ``vector_map`` a
    builtin name or a VectorMap.
    """
    spec = parse_number(number) if isinstance(number, str) else number
    vmap = builtin_map(vector_map) if isinstance(vector_map, str) else vector_map
    stream = digit_stream(spec, max_digits=max_digits)
    batch = stream.take(n)
    digits = batch.digits
    lead = 0
    if include_integer_part:
        head = integer_digits(spec)
        lead = len(head)
        digits = head + digits
    walk_terminated = batch.terminated
    if pad_zeros and batch.terminated and len(digits) < n + lead:
        digits = digits + [0] * (n + lead - len(digits))
        walk_terminated = False
    path = build_walk(digits, vmap, origin=origin, terminated=walk_terminated)
    if max_lag is None:
        max_lag = default_max_lag(len(digits))
    classification = classify_walk(spec, path, max_lag, min_windows=min_windows,
                                   step_budget=step_budget, lead_digits=lead)
    period_info = rational_period(spec) if isinstance(spec, Rational) else None
    return ExportBundle(
        number=format_number(spec),
        digits=digits,
        path=path,
        classification=classification,
        vector_map=vmap,
        period_info=period_info,
    )
