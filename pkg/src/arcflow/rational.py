"""Exact rational scalars and circle (mod-1) arithmetic.

All coordinates and measures in this package are exact rationals.  gmpy2's
mpq is used when available (it is considerably faster); fractions.Fraction
is a drop-in fallback with the same string format.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import RangeError

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


def rat(x, y=None):
    """Build an exact rational from ints, strings like '3/4', or rationals."""
    if y is not None:
        return Q(x, y)
    return Q(x)


def parse_rat(s: str):
    """Parse a 'p/q' (or integer) string, raising RangeError on junk."""
    try:
        return Q(str(s).strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise RangeError(f"not a rational: {s!r}") from exc


def rat_str(x) -> str:
    """Render as 'p/q' (or bare integer when the denominator is 1)."""
    return str(Q(x))


def rat_float(x) -> float:
    return float(Fraction(int(x.numerator), int(x.denominator)))


def rat_decimal(x, digits: int = 20) -> str:
    """Decimal rendering with the given number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(int(x.numerator)) / Decimal(int(x.denominator))
    return str(d)


def floor_div(x) -> int:
    """Exact floor of a rational."""
    return int(x.numerator) // int(x.denominator)


def mod1(x):
    """Reduce into [0, 1)."""
    x = Q(x)
    return x - floor_div(x)


def circle_norm(x):
    """Distance to the nearest integer: min(frac(x), 1 - frac(x))."""
    f = mod1(x)
    return f if f <= HALF else ONE - f


def ceil_scaled(x, n: int) -> int:
    """Smallest integer k with k >= n*x."""
    num, den = int(x.numerator) * n, int(x.denominator)
    return -((-num) // den)


def floor_scaled(x, n: int) -> int:
    """Largest integer k with k <= n*x."""
    num, den = int(x.numerator) * n, int(x.denominator)
    return num // den
