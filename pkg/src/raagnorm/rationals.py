"""Exact rationals in JSON payloads: integers or normalized "p/q" strings."""

from fractions import Fraction

from .errors import ParseError


def parse_rational(value, where="value"):
    """Accept an int or a "p/q" / "p" string; reject everything else.

    Floats are rejected deliberately: every number in this package is exact.
    """
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            f"{where}: non-integer JSON numbers are not accepted; "
            'use a "p/q" string'
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: not a rational: {value!r}") from exc
    raise ParseError(f"{where}: expected a rational, got {type(value).__name__}")


def format_rational(q):
    """Normalized string form: "p/q" with q > 0 and gcd(p, q) = 1, or "p"."""
    return str(Fraction(q))
