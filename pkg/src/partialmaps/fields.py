"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field values
are :class:`Residue` instances carrying their modulus, so mixing two fields
raises :class:`FieldMismatch` instead of producing a wrong answer.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from sympy import isprime

from .errors import CharacteristicCollision, FieldMismatch


class Residue:
    """An element of F_p, stored as the reduced representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot mix F_{self.p} with a rational")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        if self.v == 0:
            raise CharacteristicCollision(f"division by zero residue in F_{self.p}")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Rationals:
    """The field Q; elements are Fractions."""

    char = 0
    name = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Residue):
            raise FieldMismatch("cannot coerce a residue into Q")
        if isinstance(x, (float, complex)):
            raise TypeError("floating point values are not exact scalars")
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p."""

    name = "fp"

    def __init__(self, p: int):
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.char = p

    def __call__(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"cannot mix F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, (float, complex)):
            raise TypeError("floating point values are not exact scalars")
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Rational) and not isinstance(x, int):
            num, den = x.numerator, x.denominator
            if den % self.p == 0:
                raise CharacteristicCollision(f"denominator {den} vanishes in F_{self.p}")
            return Residue(num * pow(den, -1, self.p), self.p)
        return Residue(int(x), self.p)

    @property
    def zero(self):
        return Residue(0, self.p)

    @property
    def one(self):
        return Residue(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, Residue) and x.p == self.p

    def elements(self):
        return [Residue(i, self.p) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """``"q"`` -> QQ, ``"fp:7"`` -> GF(7)."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("fp:"):
        return GF(int(text[3:]))
    raise ValueError(f"unknown field {text!r}; use q or fp:<p>")


def field_of(x):
    if isinstance(x, Residue):
        return GF(x.p)
    return QQ


def scalar_str(x) -> str:
    """Exact rendering: integers as "n", rationals as "n/d", residues as "n"."""
    if isinstance(x, Residue):
        return str(x.v)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
