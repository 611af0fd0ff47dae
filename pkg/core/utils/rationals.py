"""Extended non-negative rationals.

Values are ``Fraction`` when finite and ``math.inf`` otherwise. Products follow
the measure-theoretic convention 0·∞ = 0 and quotients the 0/0 = 0 convention.
Powers stay exact when the exponent is an integer and fall back to binary64
otherwise.
"""

import math
from fractions import Fraction
from typing import Iterable

Extended = Fraction | float
INF = math.inf

RationalLike = Fraction | int | str


def to_fraction(value: RationalLike) -> Fraction:
    """Parse an exact rational: Fraction, int, or a "num/den" / integer string."""
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Invalid rational {value!r}: {exc}") from exc
    raise ValueError(f"Not a rational: {value!r} (floats are rejected, use 'num/den')")


def to_extended(value: RationalLike | float) -> Extended:
    """Like `to_fraction` but also accepts +inf (``math.inf`` or "inf")."""
    if isinstance(value, float):
        if value == INF:
            return INF
        raise ValueError(f"Only +inf is accepted as a float, got {value!r}")
    if isinstance(value, str) and value.strip().lower() in {"inf", "+inf", "infinity"}:
        return INF
    return to_fraction(value)


def format_rational(value: Extended) -> str:
    """Serialize as "num/den" (or "inf")."""
    if value == INF:
        return "inf"
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def mul(a: Extended, b: Extended) -> Extended:
    """Product with 0·∞ = 0."""
    if a == 0 or b == 0:
        return Fraction(0)
    if a == INF or b == INF:
        return INF
    return a * b


def div(a: Extended, b: Extended) -> Extended:
    """Quotient with 0/0 = 0, x/0 = ∞ (x > 0) and x/∞ = 0."""
    if a == 0:
        return Fraction(0)
    if b == 0:
        return INF
    if b == INF:
        return Fraction(0) if a != INF else INF
    if a == INF:
        return INF
    if isinstance(a, float) or isinstance(b, float):
        return float(a) / float(b)
    return Fraction(a) / Fraction(b)


def reciprocal(a: Extended) -> Extended:
    """1/a with 1/0 = ∞ and 1/∞ = 0."""
    if a == 0:
        return INF
    if a == INF:
        return Fraction(0)
    return 1 / Fraction(a)


def ext_sum(values: Iterable[Extended]) -> Extended:
    total: Extended = Fraction(0)
    for value in values:
        if value == INF:
            return INF
        total += value
    return total


def power(base: Extended, exponent: Fraction) -> Extended:
    """base**exponent; exact for integer exponents, binary64 otherwise.

    0**e is 0 for e > 0 and ∞ for e < 0; ∞**e is ∞ for e > 0 and 0 for e < 0;
    anything to the power 0 is 1.
    """
    exponent = Fraction(exponent)
    if exponent == 0:
        return Fraction(1)
    if base == INF:
        return INF if exponent > 0 else Fraction(0)
    if base == 0:
        return Fraction(0) if exponent > 0 else INF
    if exponent.denominator == 1 and not isinstance(base, float):
        return Fraction(base) ** exponent.numerator
    return float(base) ** float(exponent)


def to_float(value: Extended) -> float:
    return INF if value == INF else float(value)


def is_exact(value: Extended) -> bool:
    """True when the value is a finite Fraction (no binary64 rounding happened)."""
    return isinstance(value, Fraction)
