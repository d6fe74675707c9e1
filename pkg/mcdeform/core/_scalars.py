import re
from fractions import Fraction
from functools import lru_cache

import sympy

from ..exceptions import FormatError


_RATIONAL_RE = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')


def as_rational(value):
    """Convert ``value`` to an exact :class:`fractions.Fraction`.

    Accepts ints, Fractions, ``"p/q"`` strings and any rational type
    exposing ``numerator`` and ``denominator`` (sympy, gmpy2). Floats are
    rejected: every computation in this package is exact.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floating point scalars are not supported, "
                        "use fractions.Fraction or a 'p/q' string")

    numer = getattr(value, 'numerator', None)
    denom = getattr(value, 'denominator', None)
    if numer is None or denom is None:
        numer, denom = getattr(value, 'p', None), getattr(value, 'q', None)
    if callable(numer):
        numer, denom = numer(), denom()
    if numer is None or denom is None:
        raise TypeError("cannot convert {!r} to a rational".format(value))

    return Fraction(int(numer), int(denom))


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Raises :class:`~mcdeform.exceptions.FormatError` on anything else
    (decimals and exponents included).

    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FormatError("malformed rational {!r}, expected 'p' or 'p/q'"
                          .format(text))
    try:
        return Fraction(text.replace(' ', ''))
    except ZeroDivisionError:
        raise FormatError("zero denominator in {!r}".format(text))


def format_rational(value):
    """Format a rational as ``"p/q"``, or ``"p"`` for integers."""
    return str(as_rational(value))


@lru_cache(maxsize=None)
def bernoulli_number(n):
    """Bernoulli number ``B_n`` with the convention ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 1:
        # recent sympy versions return +1/2
        return Fraction(-1, 2)
    b = sympy.bernoulli(n)
    return Fraction(int(b.p), int(b.q))


@lru_cache(maxsize=None)
def inverse_factorial(n):
    """Returns ``1 / n!`` as a Fraction."""
    result = Fraction(1)
    for k in range(2, n + 1):
        result /= k
    return result
