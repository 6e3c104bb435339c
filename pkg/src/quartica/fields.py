"""Coefficient domains: exact rationals and prime fields.

Every domain object exposes ``zero``, ``one``, ``char``, ``coerce`` and
``from_int``; elements support ``+ - * / **`` and compare exactly.  Rationals
are plain :class:`fractions.Fraction` (always reduced, positive denominator,
never rounded), so the rest of the package can mix Python ints freely.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` into an exact rational."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num.strip()), int(den.strip()))
    return Fraction(int(s))


def format_rational(x) -> str:
    """Render an exact rational as ``num/den`` (or just ``num``)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 10^9 we need."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals; elements are ``fractions.Fraction``."""

    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return parse_rational(v)
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElement:
    """An element of a prime field, stored as a canonical residue."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value % field.p
        self.field = field

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise ValueError("elements of different prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        if isinstance(other, Fraction):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in GF({self.field.p})")
        return FpElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __bool__(self):
        return self.value != 0

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return str(self.value)


class PrimeField:
    """GF(p) for prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = FpElement(0, self)
        self.one = FpElement(1, self)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self)

    def coerce(self, v) -> FpElement:
        if isinstance(v, FpElement):
            if v.field.p != self.p:
                raise ValueError("element of a different prime field")
            return v
        if isinstance(v, int):
            return FpElement(v, self)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"denominator {v.denominator} not invertible mod {self.p}"
                )
            return FpElement(
                v.numerator * pow(v.denominator, self.p - 2, self.p), self
            )
        if isinstance(v, str):
            return self.coerce(parse_rational(v))
        raise TypeError(f"cannot coerce {v!r} into GF({self.p})")

    def elements(self):
        return (FpElement(v, self) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)
