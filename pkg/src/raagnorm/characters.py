"""Rational characters: vertex-wise values of a homomorphism to the reals.

A character is determined by its values on the standard generators, one per
vertex; it factors through the abelianization. Values are exact rationals
(floats are rejected so exactness can never silently degrade).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .complexes import FlagComplex
from .errors import (
    CharacterDomainError,
    NotIntegralError,
    NotPrimitiveError,
    ParseError,
    ZeroCharacterError,
)
from .rationals import format_rational, parse_rational


class Character:
    """Map vertex -> rational value; immutable."""

    __slots__ = ("_values",)

    def __init__(self, values):
        vals = {}
        for v, x in values.items():
            if not isinstance(v, str):
                raise ParseError("character keys must be vertex strings")
            if isinstance(x, float):
                raise ParseError(
                    f"character value for {v!r} is a float; use int, Fraction "
                    'or "p/q"'
                )
            if isinstance(x, (int, Fraction)):
                vals[v] = Fraction(x)
            elif isinstance(x, str):
                vals[v] = parse_rational(x, where=f"character value for {v!r}")
            else:
                raise ParseError(f"character value for {v!r}: unsupported type")
        self._values = vals

    # -- queries -----------------------------------------------------------

    @property
    def support_domain(self):
        return frozenset(self._values)

    def value(self, v) -> Fraction:
        try:
            return self._values[v]
        except KeyError:
            raise CharacterDomainError(f"character undefined on vertex {v!r}") from None

    def items(self):
        return self._values.items()

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self._values.values())

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._values.values())

    def gcd(self) -> int:
        """gcd of the absolute integer values; 0 for the zero character."""
        if not self.is_integral:
            raise NotIntegralError("gcd is defined for integral characters")
        g = 0
        for x in self._values.values():
            g = math.gcd(g, abs(x.numerator))
        return g

    @property
    def is_primitive(self) -> bool:
        return self.is_integral and self.gcd() == 1

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self._values == other._values

    def __repr__(self):
        inner = ", ".join(f"{v}: {x}" for v, x in sorted(self._values.items()))
        return f"Character({{{inner}}})"

    # -- arithmetic ----------------------------------------------------------

    def scale(self, q) -> "Character":
        q = Fraction(q)
        return Character({v: x * q for v, x in self._values.items()})

    def add(self, other: "Character") -> "Character":
        if self.support_domain != other.support_domain:
            raise CharacterDomainError("characters live on different vertex sets")
        return Character({v: x + other._values[v] for v, x in self._values.items()})

    def primitive(self):
        """The primitive representative and the gcd it was divided by."""
        if self.is_zero:
            raise ZeroCharacterError("zero character has no primitive representative")
        g = self.gcd()
        return self.scale(Fraction(1, g)), g

    def restrict(self, vertices) -> "Character":
        return Character({v: self.value(v) for v in vertices})

    def proportion_to(self, other: "Character"):
        """Rational q with self = q*other, or None if not proportional.

        ``other`` must be nonzero on some vertex.
        """
        if self.support_domain != other.support_domain:
            raise CharacterDomainError("characters live on different vertex sets")
        q = None
        for v, x in other._values.items():
            if x != 0:
                q = self._values[v] / x
                break
        if q is None:
            raise ZeroCharacterError("cannot compare against the zero character")
        for v, x in other._values.items():
            if self._values[v] != q * x:
                return None
        return q

    # -- serialization --------------------------------------------------------

    def to_json_doc(self):
        return {
            "values": {
                v: format_rational(x) for v, x in sorted(self._values.items())
            }
        }


def check_domain(phi: Character, L: FlagComplex):
    """The character's domain must be exactly the vertex set of ``L``."""
    if phi.support_domain != frozenset(L.vertices):
        raise CharacterDomainError(
            "character domain does not match the complex's vertex set"
        )


def require_nonzero(phi: Character):
    if phi.is_zero:
        raise ZeroCharacterError("character is identically zero")


def require_integral(phi: Character):
    if not phi.is_integral:
        raise NotIntegralError("character must take integer values")


def require_primitive(phi: Character):
    require_integral(phi)
    require_nonzero(phi)
    if phi.gcd() != 1:
        raise NotPrimitiveError("character values must have gcd 1")


def parse_character(text: str) -> Character:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return character_from_json_doc(doc)


def character_from_json_doc(doc) -> Character:
    if not isinstance(doc, dict) or set(doc) != {"values"}:
        raise ParseError('character document must be {"values": {...}}')
    values = doc["values"]
    if not isinstance(values, dict):
        raise ParseError('"values" must be an object')
    return Character(values)
