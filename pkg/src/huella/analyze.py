"""Walk classification: terminating, periodic (translation with drift), or
no detected repetition.

Periodicity detection is two-stage.  Candidate lags come from (a) a border
analysis of the digit string (Z-array of the reversed digits, giving for each
lag the earliest index from which the digits repeat) and (b) an exhaustive
scan of short lags, which catches maps where distinct digits share vectors
and the geometry repeats before the digits do.  Every candidate is then
verified geometrically: the displacement over each lag-window, recomputed
from exact integer digit counts, must be constant through the end of the
path.  A positive requires at least ``min_windows`` full windows.

``NoPeriodFound`` is always a statement about the searched horizon, never a
claim of irrationality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .digits import PeriodInfo, rational_period
from .errors import ConsistencyError, WalkError
from .numspec import NumberSpec, Rational
from .walk import VectorMap, WalkPath

__all__ = [
    "FLOAT_TOL",
    "DriftReport",
    "Inconclusive",
    "Terminating",
    "Periodic",
    "NoPeriodFound",
    "WalkClass",
    "BoundingBox",
    "drift_vector",
    "detect_translation",
    "classify_walk",
    "bounding_box",
]

# per-coordinate tolerance for float-mode verification, consistent with the
# checkpointed error bound of walk building
FLOAT_TOL = 1e-6

# short-lag exhaustive scan covers degenerate maps where geometry repeats
# before digits do
_SHORT_LAG_SCAN = 64


@dataclass(frozen=True)
class DriftReport:
    lag: int
    start: int
    drift: tuple
    closed: bool


@dataclass(frozen=True)
class Inconclusive:
    horizon: int
    max_lag: int


@dataclass(frozen=True)
class Terminating:
    steps: int


@dataclass(frozen=True)
class Periodic:
    preperiod: int
    lag: int
    drift: DriftReport


@dataclass(frozen=True)
class NoPeriodFound:
    horizon: int
    max_lag: int


WalkClass = Terminating | Periodic | NoPeriodFound


@dataclass(frozen=True)
class BoundingBox:
    min_x: object
    min_y: object
    max_x: object
    max_y: object

    @property
    def width(self):
        return self.max_x - self.min_x

    @property
    def height(self):
        return self.max_y - self.min_y


class _Budget:
    def __init__(self, limit):
        self.remaining = limit

    def charge(self, amount: int) -> bool:
        """Consume budget; False once exhausted."""
        if self.remaining is None:
            return True
        self.remaining -= amount
        return self.remaining >= 0


def drift_vector(period_digits, vector_map: VectorMap) -> tuple:
    """Sum of the mapped vectors over one digit period."""
    x, y = (0, 0) if vector_map.mode == "exact" else (0.0, 0.0)
    for d in period_digits:
        if not 0 <= d <= 9:
            raise WalkError(f"digit out of range: {d}")
        vx, vy = vector_map.vectors[d]
        x, y = x + vx, y + vy
    return (x, y)


def _is_zero(vec, mode: str) -> bool:
    if mode == "exact":
        return vec[0] == 0 and vec[1] == 0
    return abs(vec[0]) < FLOAT_TOL and abs(vec[1]) < FLOAT_TOL


def _z_array(seq) -> list[int]:
    n = len(seq)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and seq[z[i]] == seq[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left, right = i, i + z[i]
    return z


def _digit_candidates(digits, max_lag: int, min_windows: int) -> list[int]:
    """Lags whose digit string repeats from early enough to fit min_windows."""
    n = len(digits)
    z = _z_array(digits[::-1])
    out = []
    for lag in range(1, min(max_lag, n - 1) + 1):
        matched = z[lag]
        start = max(0, n - lag - matched)
        if n - start >= min_windows * lag:
            out.append(lag)
    return out


def _verify_lag_exact_array(points: np.ndarray, lag: int):
    diff = points[lag:] - points[:-lag]
    ref = diff[-1]
    mismatch = np.nonzero(np.any(diff != ref, axis=1))[0]
    start = int(mismatch[-1]) + 1 if mismatch.size else 0
    return start, (ref[0].item(), ref[1].item())


def _verify_lag_exact_tuples(points, lag: int, n: int):
    ref = (points[n][0] - points[n - lag][0], points[n][1] - points[n - lag][1])
    start = 0
    for i in range(n - lag - 1, -1, -1):
        if (points[i + lag][0] - points[i][0] != ref[0]
                or points[i + lag][1] - points[i][1] != ref[1]):
            start = i + 1
            break
    return start, ref


def _verify_lag_float(path: WalkPath, lag: int):
    digits = path.digits
    n = len(digits)
    vx = np.array([v[0] for v in path.vector_map.vectors], dtype=np.float64)
    vy = np.array([v[1] for v in path.vector_map.vectors], dtype=np.float64)
    counts = np.bincount(digits[n - lag:n], minlength=10).astype(np.int64)
    ref = (float(counts @ vx), float(counts @ vy))
    tol = FLOAT_TOL / 2
    start = 0
    for i in range(n - lag - 1, -1, -1):
        counts[digits[i]] += 1
        counts[digits[i + lag]] -= 1
        if (abs(float(counts @ vx) - ref[0]) > tol
                or abs(float(counts @ vy) - ref[1]) > tol):
            start = i + 1
            break
    if start:
        # report the drift of the verified run's first window
        counts[digits[start - 1]] -= 1
        counts[digits[start - 1 + lag]] += 1
        drift = (float(counts @ vx), float(counts @ vy))
    else:
        drift = (float(counts @ vx), float(counts @ vy))
    return start, drift


def _verify_lag(path: WalkPath, lag: int, min_windows: int):
    """DriftReport for this lag if the displacement is constant over at least
    min_windows windows through the end of the path, else None."""
    n = len(path.digits)
    if lag > n or n < min_windows * lag:
        return None
    if path.mode == "float":
        start, drift = _verify_lag_float(path, lag)
    elif isinstance(path.points, np.ndarray):
        start, drift = _verify_lag_exact_array(path.points, lag)
    else:
        start, drift = _verify_lag_exact_tuples(path.points, lag, n)
    if n - start < min_windows * lag:
        return None
    return DriftReport(lag, start, drift, _is_zero(drift, path.mode))


def detect_translation(path: WalkPath, max_lag: int, min_windows: int = 3,
                       step_budget: int | None = None):
    """Smallest verifying lag <= max_lag with its earliest start index.

    Returns a DriftReport on success, None for a conclusive negative, or an
    Inconclusive carrying the usable horizon when the path is too short or
    the cooperative step budget ran out.
    """
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    n = len(path.digits)
    budget = _Budget(step_budget)
    if not budget.charge(n):
        return Inconclusive(n, max_lag)
    candidates = sorted(
        set(_digit_candidates(path.digits, max_lag, min_windows))
        | set(range(1, min(max_lag, _SHORT_LAG_SCAN, n) + 1)))
    for lag in candidates:
        if not budget.charge(n - lag + 1):
            return Inconclusive(n, max_lag)
        report = _verify_lag(path, lag, min_windows)
        if report is not None:
            return report
    if len(path) < (min_windows + 1) * max_lag:
        return Inconclusive(n, max_lag)
    return None


def _cross_check_rational(path: WalkPath, info: PeriodInfo, lead: int,
                          max_lag: int, min_windows: int, step_budget) -> None:
    period = info.period_len
    n = len(path.digits)
    start_bound = info.preperiod + lead
    if period > max_lag or n - start_bound < min_windows * period:
        return  # horizon too short to check geometrically
    report = _verify_lag(path, period, min_windows)
    if report is None or report.start > start_bound:
        raise ConsistencyError(
            f"digit period {period} of {path.vector_map.mode} walk failed geometric "
            f"verification (arithmetic start {start_bound})")
    detected = detect_translation(path, max_lag, min_windows, step_budget)
    if isinstance(detected, Inconclusive):
        return  # budget-starved detector is not a contradiction
    if detected is None or detected.lag > period:
        raise ConsistencyError(
            f"translation detector contradicts arithmetic period {period}: {detected!r}")


def classify_walk(spec: NumberSpec, path: WalkPath, max_lag: int,
                  min_windows: int = 3, step_budget: int | None = None,
                  lead_digits: int = 0) -> WalkClass:
    """Classify a walk built from the number's digit stream.

    Rationals are classified arithmetically (the period structure of the
    denominator is ground truth) and cross-checked against the geometric
    detector; other specs rely on detection alone.  ``lead_digits`` is the
    number of non-fractional digits prepended to the walk (integer part
    inclusion), which shifts every start index.
    """
    if isinstance(spec, Rational):
        info = rational_period(spec)
        if info.period_len == 0:
            return Terminating(info.preperiod + lead_digits)
        drift = drift_vector(info.period_digits, path.vector_map)
        report = DriftReport(info.period_len, info.preperiod + lead_digits,
                             drift, _is_zero(drift, path.mode))
        _cross_check_rational(path, info, lead_digits, max_lag, min_windows, step_budget)
        return Periodic(info.preperiod + lead_digits, info.period_len, report)
    if path.terminated:
        return Terminating(len(path.digits))
    result = detect_translation(path, max_lag, min_windows, step_budget)
    if isinstance(result, DriftReport):
        return Periodic(result.start, result.lag, result)
    return NoPeriodFound(len(path.digits), max_lag)


def bounding_box(path: WalkPath) -> BoundingBox:
    """Tight axis-aligned bounds over all path points."""
    pts = path.points
    if isinstance(pts, np.ndarray):
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        return BoundingBox(lo[0].item(), lo[1].item(), hi[0].item(), hi[1].item())
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return BoundingBox(min(xs), min(ys), max(xs), max(ys))
