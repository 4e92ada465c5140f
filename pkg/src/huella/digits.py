"""Exact fractional decimal digits for any NumberSpec.

Rationals use chunked long division, square roots the digit-by-digit
integer-square-root method (digit m is isqrt(k*10^(2m)) - 10*isqrt(k*10^(2(m-1)))),
and the constants pi / e big-integer fixed-point series evaluation.  Constant
digits are released only after two evaluations at different guard-digit
precisions agree on the prefix, which protects against carry-boundary
truncation artifacts without a formal guard-sufficiency proof.

Also computes the arithmetic period structure of rational expansions, both
from the denominator (multiplicative order of 10) and by an independent
remainder-cycle scan.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExceededError, ConsistencyError
from .numspec import DigitLiteral, E, NumberSpec, Pi, Rational, Sqrt

__all__ = [
    "DEFAULT_DIGIT_BUDGET",
    "DigitBatch",
    "DigitStream",
    "PeriodInfo",
    "digit_stream",
    "take_digits",
    "rational_period",
    "remainder_cycle_period",
    "multiplicative_order_of_ten",
]

DEFAULT_DIGIT_BUDGET = 1_000_000

# Long-division chunk size: big enough to amortize bigint overhead, small
# enough that int->str stays cheap (int->str is quadratic in CPython).
_CHUNK = 1000

# stay under CPython's int->str conversion limit (default 4300 digits)
_STR_CHUNK = 2000
_STR_CHUNK_POW = 10 ** _STR_CHUNK


def _decimal_digits(value: int, length: int) -> str:
    """Zero-padded decimal rendering of 0 <= value < 10**length, immune to
    the interpreter's int->str digit limit."""
    if length <= _STR_CHUNK:
        return str(value).zfill(length)
    pieces = []
    while value:
        value, low = divmod(value, _STR_CHUNK_POW)
        pieces.append(str(low).zfill(_STR_CHUNK))
    text = "".join(reversed(pieces))
    if len(text) < length:
        return text.zfill(length)
    return text[-length:]  # excess leading chars are zeros since value < 10**length

_INITIAL_GUARD = 12
_GUARD_STEP = 10


class DigitBatch(NamedTuple):
    digits: list[int]
    terminated: bool


@dataclass(frozen=True)
class PeriodInfo:
    preperiod: int
    period_len: int
    period_digits: tuple[int, ...]
    preperiod_digits: tuple[int, ...]

    @property
    def terminating(self) -> bool:
        return self.period_len == 0


# ---------------------------------------------------------------------------
# digit sources, one per NumberSpec variant
# ---------------------------------------------------------------------------

class _RationalSource:
    def __init__(self, spec: Rational):
        self.q = spec.denominator
        self.rem = abs(spec.numerator) % self.q

    def take(self, n: int) -> tuple[list[int], bool]:
        out: list[int] = []
        while len(out) < n and self.rem:
            k = min(_CHUNK, n - len(out))
            block, self.rem = divmod(self.rem * 10 ** k, self.q)
            text = str(block).zfill(k)
            if self.rem == 0:
                # a terminating expansion never ends in 0, so any trailing
                # zeros in the final chunk are padding past the last digit
                text = text.rstrip("0")
            out.extend(int(c) for c in text)
        return out, self.rem == 0


class _SqrtSource:
    def __init__(self, spec: Sqrt):
        self.radicand = spec.radicand
        self.ndigits = 0
        self.root = math.isqrt(spec.radicand)  # integer part

    def take(self, n: int) -> tuple[list[int], bool]:
        if n == 0:
            return [], False
        total = self.ndigits + n
        new_root = math.isqrt(self.radicand * 10 ** (2 * total))
        block = new_root - self.root * 10 ** n
        self.ndigits, self.root = total, new_root
        return [int(c) for c in _decimal_digits(block, n)], False


class _ConstSource:
    def __init__(self, kind: str):
        self.kind = kind
        self.pos = 0

    def take(self, n: int) -> tuple[list[int], bool]:
        text = _const_fractional_digits(self.kind, self.pos + n)
        out = [int(c) for c in text[self.pos:self.pos + n]]
        self.pos += n
        return out, False


class _LiteralSource:
    def __init__(self, spec: DigitLiteral):
        self.digits = spec.fractional_digits
        self.pos = 0

    def take(self, n: int) -> tuple[list[int], bool]:
        out = list(self.digits[self.pos:self.pos + n])
        self.pos += len(out)
        return out, self.pos >= len(self.digits)


def _make_source(spec: NumberSpec):
    if isinstance(spec, Rational):
        return _RationalSource(spec)
    if isinstance(spec, Sqrt):
        return _SqrtSource(spec)
    if isinstance(spec, Pi):
        return _ConstSource("pi")
    if isinstance(spec, E):
        return _ConstSource("e")
    if isinstance(spec, DigitLiteral):
        return _LiteralSource(spec)
    raise TypeError(f"not a NumberSpec: {spec!r}")


class DigitStream:
    """Resumable generator of the fractional decimal digits of ``|spec|``.

    Deterministic and prefix-stable: taking n digits then m more yields the
    same sequence as taking n+m at once.
    """

    def __init__(self, spec: NumberSpec, max_digits: int = DEFAULT_DIGIT_BUDGET):
        self.spec = spec
        self.max_digits = max_digits
        self.emitted = 0
        self.terminated = False
        self._source = _make_source(spec)

    def take(self, n: int) -> DigitBatch:
        if n < 0:
            raise ValueError(f"cannot take {n} digits")
        if self.emitted + n > self.max_digits:
            raise BudgetExceededError(self.emitted + n, self.max_digits)
        if self.terminated:
            return DigitBatch([], True)
        digits, exhausted = self._source.take(n)
        self.emitted += len(digits)
        if exhausted or len(digits) < n:
            self.terminated = True
        return DigitBatch(digits, self.terminated)


def digit_stream(spec: NumberSpec, max_digits: int = DEFAULT_DIGIT_BUDGET) -> DigitStream:
    return DigitStream(spec, max_digits)


def take_digits(stream: DigitStream, n: int) -> DigitBatch:
    return stream.take(n)


# ---------------------------------------------------------------------------
# fixed-point series for the constants
# ---------------------------------------------------------------------------

def _arccot_scaled(x: int, one: int) -> int:
    """arccot(x) * one by the alternating power series, floor arithmetic."""
    power = one // x
    total = power
    xsq = x * x
    n = 3
    sign = -1
    while power:
        power //= xsq
        total += sign * (power // n)
        sign = -sign
        n += 2
    return total


def _pi_scaled(prec: int) -> int:
    # Machin: pi = 16 arccot(5) - 4 arccot(239)
    one = 10 ** prec
    return 16 * _arccot_scaled(5, one) - 4 * _arccot_scaled(239, one)


def _e_scaled(prec: int) -> int:
    one = 10 ** prec
    total = one
    term = one
    k = 1
    while term:
        term //= k
        total += term
        k += 1
    return total


_CONST_INT_PART = {"pi": 3, "e": 2}
_CONST_FN = {"pi": _pi_scaled, "e": _e_scaled}


def _fractional_prefix(kind: str, n: int, guard: int) -> str:
    prec = n + guard
    value = _CONST_FN[kind](prec)
    int_part, frac = divmod(value, 10 ** prec)
    if int_part != _CONST_INT_PART[kind]:
        raise ConsistencyError(
            f"fixed-point {kind} evaluation straddled the integer boundary at guard {guard}")
    return _decimal_digits(frac, prec)[:n]


def _stable_digits(kind: str, n: int) -> str:
    guard = _INITIAL_GUARD
    prev = _fractional_prefix(kind, n, guard)
    while True:
        guard += _GUARD_STEP
        cur = _fractional_prefix(kind, n, guard)
        if cur == prev:
            return cur
        prev = cur


_const_cache: dict[str, str] = {"pi": "", "e": ""}
_const_lock = threading.Lock()


def _const_fractional_digits(kind: str, n: int) -> str:
    cached = _const_cache[kind]
    if len(cached) >= n:
        return cached[:n]
    with _const_lock:
        cached = _const_cache[kind]
        if len(cached) >= n:
            return cached[:n]
        target = max(n, 2 * len(cached), 32)
        digits = _stable_digits(kind, target)
        if not digits.startswith(cached):
            raise ConsistencyError(f"{kind} digit cache lost prefix stability")
        _const_cache[kind] = digits
        return digits[:n]


# ---------------------------------------------------------------------------
# rational period structure
# ---------------------------------------------------------------------------

def multiplicative_order_of_ten(m: int) -> int:
    """Smallest k > 0 with 10^k = 1 (mod m); 0 for m = 1. m must be coprime to 10."""
    if m == 1:
        return 0
    if math.gcd(m, 10) != 1:
        raise ValueError(f"{m} is not coprime to 10")
    t = 10 % m
    k = 1
    while t != 1:
        t = (t * 10) % m
        k += 1
    return k


def _strip_factor(n: int, p: int) -> tuple[int, int]:
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return n, count


def rational_period(r: Rational) -> PeriodInfo:
    """Period structure from the denominator: preperiod = max(a, b) for
    q = 2^a 5^b q', period length = ord of 10 mod q'."""
    q = r.denominator
    q, twos = _strip_factor(q, 2)
    q, fives = _strip_factor(q, 5)
    preperiod = max(twos, fives)
    period_len = multiplicative_order_of_ten(q)
    stream = DigitStream(r, max_digits=max(DEFAULT_DIGIT_BUDGET, preperiod + period_len))
    digits = stream.take(preperiod + period_len).digits
    return PeriodInfo(
        preperiod=preperiod,
        period_len=period_len,
        period_digits=tuple(digits[preperiod:preperiod + period_len]),
        preperiod_digits=tuple(digits[:preperiod]),
    )


def remainder_cycle_period(r: Rational) -> PeriodInfo:
    """Independent oracle: run the long division until a remainder repeats."""
    q = r.denominator
    rem = abs(r.numerator) % q
    seen = {rem: 0}
    digits: list[int] = []
    pos = 0
    while rem:
        digit, rem = divmod(rem * 10, q)
        digits.append(digit)
        pos += 1
        if rem in seen:
            start = seen[rem]
            return PeriodInfo(
                preperiod=start,
                period_len=pos - start,
                period_digits=tuple(digits[start:pos]),
                preperiod_digits=tuple(digits[:start]),
            )
        seen[rem] = pos
    return PeriodInfo(pos, 0, (), tuple(digits))
