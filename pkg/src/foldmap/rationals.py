"""Arbitrary-precision rational backend.

gmpy2's mpq is roughly six times faster than fractions.Fraction on the
term-merge workloads that dominate this package, so it is used when
available.  Everything downstream goes through `rat` / `is_rational`, which
also accept plain ints: integer coefficients are kept as ints (faster still)
and only become rationals when a division forces it.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _RAT_TYPES = (int, Fraction, type(_mpq(0)))

    def rat(numerator, denominator=1):
        return _mpq(numerator, denominator)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = None
    _RAT_TYPES = (int, Fraction)

    def rat(numerator, denominator=1):
        return Fraction(numerator, denominator)


def is_rational(value) -> bool:
    """True for the plain number types usable as rational scalars."""
    return isinstance(value, _RAT_TYPES)


def rat_str(value) -> str:
    """Canonical string for a rational: 'p' or 'p/q' in lowest terms, q > 0."""
    if isinstance(value, int):
        return str(value)
    n, d = value.numerator, value.denominator
    if d == 1:
        return str(n)
    return f"{n}/{d}"


def rat_from_str(text: str):
    """Parse 'p' or 'p/q'; returns an int when the value is integral."""
    if "/" in text:
        p, q = text.split("/", 1)
        value = rat(int(p), int(q))
        if value.denominator == 1:
            return int(value.numerator)
        return value
    return int(text)


def as_exact(value):
    """Normalize an int-valued rational back to int (canonical storage form)."""
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value.numerator)
    return value
