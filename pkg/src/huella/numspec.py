"""Parsing of number expressions into canonical number specs.

Accepted forms:

* ``"p/q"``        -- fraction, arbitrary precision, sign on either part
* ``"-12.345"``    -- decimal literal, converted to an exact fraction
* ``"42"``         -- integer
* ``"pi"``, ``"e"`` -- the constants (case-insensitive)
* ``"sqrt(k)"``    -- square root of a positive integer; perfect squares
                      collapse to the integer root
* ``"digits:374"`` -- a literal fractional digit string (integer part 0)

All rational forms normalize at parse time (gcd reduced, denominator > 0),
so equality of specs is structural equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ExprError

__all__ = [
    "Rational",
    "Sqrt",
    "Pi",
    "E",
    "DigitLiteral",
    "NumberSpec",
    "parse_number",
    "format_number",
]


@dataclass(frozen=True)
class Rational:
    numerator: int
    denominator: int

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)


@dataclass(frozen=True)
class Sqrt:
    radicand: int


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class E:
    pass


@dataclass(frozen=True)
class DigitLiteral:
    integer_part: int
    fractional_digits: tuple[int, ...]


NumberSpec = Rational | Sqrt | Pi | E | DigitLiteral

_INT_RE = re.compile(r"-?\d+")
_DECIMAL_RE = re.compile(r"(-?\d+)\.(\d+)")


def _parse_int(text: str, offset: int, what: str) -> int:
    if not _INT_RE.fullmatch(text):
        raise ExprError(f"expected an integer for {what}, got {text!r}", offset)
    return int(text)


def parse_number(text: str) -> NumberSpec:
    """Parse ``text`` into a NumberSpec, raising ExprError on bad input."""
    if not isinstance(text, str):
        raise ExprError("expression must be a string", 0)
    stripped = text.strip()
    offset = text.index(stripped) if stripped else 0
    if not stripped:
        raise ExprError("empty expression", 0)

    lowered = stripped.lower()
    if lowered == "pi":
        return Pi()
    if lowered == "e":
        return E()

    if stripped.startswith("digits:"):
        body_at = offset + len("digits:")
        body = stripped[len("digits:"):]
        if not body:
            raise ExprError("empty digit string", body_at, kind="bad_digit")
        for i, ch in enumerate(body):
            if not ch.isdigit() or not ch.isascii():
                raise ExprError(f"non-digit character {ch!r} in digit string",
                                body_at + i, kind="bad_digit")
        return DigitLiteral(0, tuple(int(ch) for ch in body))

    if stripped.startswith("sqrt(") or stripped.startswith("sqrt "):
        m = re.fullmatch(r"sqrt\(\s*(-?\d+)\s*\)", stripped)
        if m is None:
            raise ExprError("malformed sqrt expression, expected sqrt(<integer>)", offset)
        rad_at = offset + m.start(1)
        radicand = int(m.group(1))
        if radicand <= 0:
            raise ExprError(f"sqrt of non-positive integer {radicand}", rad_at,
                            kind="sqrt_domain")
        root = math.isqrt(radicand)
        if root * root == radicand:
            return Rational(root, 1)
        return Sqrt(radicand)

    if "/" in stripped:
        num_text, _, den_text = stripped.partition("/")
        num_text, den_text = num_text.strip(), den_text.strip()
        den_at = offset + stripped.index("/") + 1
        num = _parse_int(num_text, offset, "numerator")
        den = _parse_int(den_text, den_at, "denominator")
        if den == 0:
            raise ExprError("zero denominator", den_at, kind="zero_denominator")
        return Rational(num, den)

    if "." in stripped:
        m = _DECIMAL_RE.fullmatch(stripped)
        if m is None:
            raise ExprError("malformed decimal literal", offset + stripped.index("."))
        int_part, frac_part = m.group(1), m.group(2)
        scale = 10 ** len(frac_part)
        magnitude = abs(int(int_part)) * scale + int(frac_part)
        sign = -1 if int_part.startswith("-") else 1
        return Rational(sign * magnitude, scale)

    if _INT_RE.fullmatch(stripped):
        return Rational(int(stripped), 1)

    raise ExprError(f"unrecognized expression {stripped!r}", offset)


def format_number(spec: NumberSpec) -> str:
    """Canonical text form of a spec; parse_number(format_number(s)) == s."""
    if isinstance(spec, Rational):
        return f"{spec.numerator}/{spec.denominator}"
    if isinstance(spec, Sqrt):
        return f"sqrt({spec.radicand})"
    if isinstance(spec, Pi):
        return "pi"
    if isinstance(spec, E):
        return "e"
    if isinstance(spec, DigitLiteral):
        digits = "".join(str(d) for d in spec.fractional_digits)
        return f"digits:{digits}"
    raise TypeError(f"not a NumberSpec: {spec!r}")
