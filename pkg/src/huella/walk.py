"""Digit-to-vector maps and walk construction.

A walk starts at an origin and appends, for each fractional digit d, the
mapped vector v_d.  Exact-mode maps carry rational (or integer) coordinates
and produce exact points; float-mode walks are accumulated blockwise and the
running position is recomputed from the exact integer digit counts every
CHECKPOINT steps, so rounding error stays bounded regardless of walk length.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import MapError, WalkError

__all__ = [
    "CHECKPOINT",
    "VectorMap",
    "WalkPath",
    "builtin_map",
    "builtin_map_names",
    "build_walk",
    "position_from_counts",
    "map_from_json",
    "map_to_json",
    "load_map_file",
]

CHECKPOINT = 1024

# exact integer maps bigger than this fall back to Fraction arithmetic so the
# int64 cumsum fast path can never overflow
_INT_FAST_LIMIT = 1 << 20

Num = "int | Fraction | float"
Vec = "tuple[Num, Num]"


@dataclass(frozen=True)
class VectorMap:
    name: str
    mode: str  # "exact" | "float"
    vectors: tuple

    def __post_init__(self):
        if self.mode not in ("exact", "float"):
            raise MapError(f"unknown map mode {self.mode!r}")
        if len(self.vectors) != 10:
            raise MapError(f"a vector map needs exactly 10 vectors, got {len(self.vectors)}")
        checked = []
        for d, vec in enumerate(self.vectors):
            if len(vec) != 2:
                raise MapError(f"vector for digit {d} is not a coordinate pair")
            checked.append(tuple(self._check_coord(d, c) for c in vec))
        object.__setattr__(self, "vectors", tuple(checked))

    def _check_coord(self, digit: int, value):
        if self.mode == "exact":
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise MapError(f"exact map coordinate for digit {digit} must be rational, "
                               f"got {value!r}")
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            return value
        value = float(value)
        if not math.isfinite(value):
            raise MapError(f"float map coordinate for digit {digit} is not finite")
        return value

    def vector(self, digit: int):
        return self.vectors[digit]

    @property
    def is_integer(self) -> bool:
        return self.mode == "exact" and all(
            isinstance(c, int) and abs(c) <= _INT_FAST_LIMIT
            for vec in self.vectors for c in vec)


def _neg(x: float) -> float:
    y = -x
    return 0.0 if y == 0 else y


def _decagon() -> VectorMap:
    half = [(math.cos(math.pi * d / 5), math.sin(math.pi * d / 5)) for d in range(5)]
    vectors = half + [(_neg(x), _neg(y)) for x, y in half]
    return VectorMap("decagon", "float", tuple(vectors))


def _lattice() -> VectorMap:
    half = [(1, 0), (2, 1), (1, 2), (-1, 2), (-2, 1)]
    vectors = half + [(-x, -y) for x, y in half]
    return VectorMap("lattice", "exact", tuple(vectors))


_BUILTIN = {"decagon": _decagon(), "lattice": _lattice()}


def builtin_map(name: str) -> VectorMap:
    try:
        return _BUILTIN[name]
    except KeyError:
        raise MapError(f"unknown builtin map {name!r}; available: "
                       + ", ".join(sorted(_BUILTIN))) from None


def builtin_map_names() -> list[str]:
    return sorted(_BUILTIN)


# ---------------------------------------------------------------------------
# map (de)serialization: {"name": ..., "mode": ..., "vectors": [[x, y] x 10]}
# with rational coordinates written as "p/q" strings in exact mode
# ---------------------------------------------------------------------------

def _coord_from_json(value, mode: str):
    if mode == "exact":
        if isinstance(value, bool):
            raise MapError(f"bad exact coordinate {value!r}")
        if isinstance(value, int):
            return value
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise MapError(f"bad rational coordinate {value!r}: {exc}") from None
        raise MapError(f"exact coordinates must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MapError(f"float coordinates must be numbers, got {value!r}")
    return float(value)


def map_from_json(obj) -> VectorMap:
    if not isinstance(obj, dict):
        raise MapError("map must be a JSON object")
    name = obj.get("name", "custom")
    mode = obj.get("mode")
    vectors = obj.get("vectors")
    if not isinstance(name, str):
        raise MapError("map name must be a string")
    if mode not in ("exact", "float"):
        raise MapError(f"map mode must be 'exact' or 'float', got {mode!r}")
    if not isinstance(vectors, (list, tuple)) or len(vectors) != 10:
        raise MapError("map must list exactly 10 vectors")
    parsed = []
    for d, vec in enumerate(vectors):
        if not isinstance(vec, (list, tuple)) or len(vec) != 2:
            raise MapError(f"vector for digit {d} must be a pair [x, y]")
        parsed.append(tuple(_coord_from_json(c, mode) for c in vec))
    return VectorMap(name, mode, tuple(parsed))


def map_to_json(vector_map: VectorMap) -> dict:
    if vector_map.mode == "exact":
        vectors = [[str(Fraction(c)) for c in vec] for vec in vector_map.vectors]
    else:
        vectors = [[float(c) for c in vec] for vec in vector_map.vectors]
    return {"name": vector_map.name, "mode": vector_map.mode, "vectors": vectors}


def load_map_file(path) -> VectorMap:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MapError(f"map file {path} is not valid JSON: {exc}") from None
    return map_from_json(obj)


# ---------------------------------------------------------------------------
# walks
# ---------------------------------------------------------------------------

@dataclass
class WalkPath:
    """Point sequence of a digit walk.

    ``points`` is a numpy array of shape (n+1, 2) for float and integer-exact
    walks, or a list of coordinate tuples for general exact walks.
    ``checkpoint_counts`` records the running digit-count vector at step 0,
    every CHECKPOINT steps, and at the final step.
    """

    origin: tuple
    digits: list[int]
    points: object
    checkpoint_counts: list[tuple[int, tuple[int, ...]]]
    terminated: bool
    vector_map: VectorMap
    _float_cache: object = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.digits) + 1

    @property
    def mode(self) -> str:
        return self.vector_map.mode

    def point(self, i: int) -> tuple:
        if isinstance(self.points, np.ndarray):
            x, y = self.points[i]
            return (x.item(), y.item())
        return self.points[i]

    @property
    def final_point(self) -> tuple:
        return self.point(len(self.digits))

    @property
    def total_counts(self) -> tuple[int, ...]:
        return self.checkpoint_counts[-1][1]

    def points_float(self) -> np.ndarray:
        """All points as float64, shape (n+1, 2)."""
        if self._float_cache is None:
            if isinstance(self.points, np.ndarray):
                self._float_cache = self.points.astype(np.float64)
            else:
                self._float_cache = np.array(
                    [(float(x), float(y)) for x, y in self.points], dtype=np.float64)
        return self._float_cache


def _validate_digits(digits: Sequence[int]) -> np.ndarray:
    arr = np.asarray(list(digits), dtype=np.int64)
    if arr.ndim != 1:
        raise WalkError("digits must be a flat sequence")
    if arr.size and (arr.min() < 0 or arr.max() > 9):
        bad = arr[(arr < 0) | (arr > 9)][0]
        raise WalkError(f"digit out of range: {bad}")
    return arr


def _checkpoint_indices(n: int) -> list[int]:
    marks = list(range(CHECKPOINT, n + 1, CHECKPOINT))
    if not marks or marks[-1] != n:
        marks.append(n)
    return marks if n else []


def _counts_at_checkpoints(arr: np.ndarray) -> list[tuple[int, tuple[int, ...]]]:
    out = [(0, (0,) * 10)]
    counts = np.zeros(10, dtype=np.int64)
    prev = 0
    for mark in _checkpoint_indices(len(arr)):
        counts += np.bincount(arr[prev:mark], minlength=10)
        out.append((mark, tuple(int(c) for c in counts)))
        prev = mark
    return out


def _build_float(arr, vectors, origin):
    n = len(arr)
    vx = np.array([v[0] for v in vectors], dtype=np.float64)
    vy = np.array([v[1] for v in vectors], dtype=np.float64)
    points = np.empty((n + 1, 2), dtype=np.float64)
    points[0] = origin
    counts = np.zeros(10, dtype=np.int64)
    pos = np.array(origin, dtype=np.float64)
    prev = 0
    for mark in _checkpoint_indices(n):
        block = arr[prev:mark]
        points[prev + 1:mark + 1, 0] = pos[0] + np.cumsum(vx[block])
        points[prev + 1:mark + 1, 1] = pos[1] + np.cumsum(vy[block])
        counts += np.bincount(block, minlength=10)
        # rounding control: positions restart from the exact-count identity
        pos[0] = origin[0] + float(counts @ vx)
        pos[1] = origin[1] + float(counts @ vy)
        points[mark] = pos
        prev = mark
    return points


def _build_int(arr, vectors, origin):
    n = len(arr)
    vx = np.array([v[0] for v in vectors], dtype=np.int64)
    vy = np.array([v[1] for v in vectors], dtype=np.int64)
    points = np.empty((n + 1, 2), dtype=np.int64)
    points[0] = origin
    np.cumsum(vx[arr], out=points[1:, 0])
    np.cumsum(vy[arr], out=points[1:, 1])
    points[1:, 0] += origin[0]
    points[1:, 1] += origin[1]
    return points


def _build_exact_slow(digits, vectors, origin):
    x, y = origin
    points = [origin]
    for d in digits:
        vxd, vyd = vectors[d]
        x, y = x + vxd, y + vyd
        points.append((x, y))
    return points


def _check_origin(origin, mode: str):
    if len(origin) != 2:
        raise WalkError("origin must be a coordinate pair")
    x, y = origin
    if mode == "exact":
        for c in (x, y):
            if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise WalkError(f"exact walk origin must be rational, got {c!r}")
        return (x, y)
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise WalkError("float walk origin must be finite")
    return (x, y)


def build_walk(digits: Iterable[int], vector_map: VectorMap,
               origin=(0, 0), terminated: bool = False) -> WalkPath:
    """Walk the digit sequence: p_0 = origin, p_k = p_{k-1} + v_{digit_k}."""
    origin = _check_origin(origin, vector_map.mode)
    arr = _validate_digits(digits)
    digit_list = [int(d) for d in arr]
    checkpoints = _counts_at_checkpoints(arr)
    if vector_map.mode == "float":
        points = _build_float(arr, vector_map.vectors, origin)
    elif vector_map.is_integer and all(
            isinstance(c, int) and abs(c) <= _INT_FAST_LIMIT << 20 for c in origin):
        points = _build_int(arr, vector_map.vectors, origin)
    else:
        points = _build_exact_slow(digit_list, vector_map.vectors, origin)
    return WalkPath(
        origin=origin,
        digits=digit_list,
        points=points,
        checkpoint_counts=checkpoints,
        terminated=terminated,
        vector_map=vector_map,
    )


def position_from_counts(counts: Sequence[int], vector_map: VectorMap, origin=(0, 0)) -> tuple:
    """Order-free position identity: origin + sum of counts_d * v_d."""
    if len(counts) != 10:
        raise WalkError("counts must have exactly 10 entries")
    origin = _check_origin(origin, vector_map.mode)
    x, y = origin
    if vector_map.mode == "float":
        vx = np.array([v[0] for v in vector_map.vectors], dtype=np.float64)
        vy = np.array([v[1] for v in vector_map.vectors], dtype=np.float64)
        c = np.asarray(counts, dtype=np.int64)
        return (x + float(c @ vx), y + float(c @ vy))
    for count, (vxd, vyd) in zip(counts, vector_map.vectors):
        x = x + count * vxd
        y = y + count * vyd
    return (x, y)
