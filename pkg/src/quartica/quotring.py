"""Quotient rings K[t]/(m) over an exact base field.

Used in two roles: finite extension fields GF(p^m) (base GF(p), m
irreducible) and number-field style rings Q[a]/(m(a)).  Elements are reduced
representatives of degree < deg m; inversion goes through the extended
Euclidean algorithm and reports the gcd witness when it fails, which is how
reducibility of the modulus surfaces in practice.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .upoly import UPoly


class QuotientRingElement:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring: "QuotientRing"):
        self.coeffs = coeffs  # tuple of base-field elements, len == ring.degree
        self.ring = ring

    def _lift(self, other):
        if isinstance(other, QuotientRingElement):
            if other.ring != self.ring:
                raise ValueError("elements of different quotient rings")
            return other
        try:
            return self.ring.coerce(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuotientRingElement(
            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.ring
        )

    __radd__ = __add__

    def __neg__(self):
        return QuotientRingElement(tuple(-a for a in self.coeffs), self.ring)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.ring._mul(self, o)

    __rmul__ = __mul__

    def inverse(self):
        return self.ring.inverse(self)

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
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuotientRingElement):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            return self.coeffs == self.ring.coerce(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __bool__(self):
        zero = self.ring.base.zero
        return any(c != zero for c in self.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def lift(self) -> UPoly:
        """The canonical representative as a polynomial over the base field."""
        return UPoly(self.ring.base, list(self.coeffs))

    def is_scalar(self) -> bool:
        zero = self.ring.base.zero
        return all(c == zero for c in self.coeffs[1:])

    def scalar(self):
        if not self.is_scalar():
            raise ValueError(f"{self!r} is not a base-field scalar")
        return self.coeffs[0]

    def __repr__(self):
        g = self.ring.gen_name
        parts = []
        for k in range(self.ring.degree - 1, -1, -1):
            c = self.coeffs[k]
            if c == self.ring.base.zero:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*{g}")
            else:
                parts.append(f"{c}*{g}^{k}")
        return " + ".join(parts) if parts else "0"


class QuotientRing:
    """K[t]/(modulus) with modulus monic of degree >= 1."""

    def __init__(self, base, modulus: UPoly, gen_name: str = "a"):
        if modulus.field != base:
            raise ValueError("modulus must live over the base field")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.lead != base.one:
            modulus = modulus.monic()
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.gen_name = gen_name
        self.char = base.char
        zero = base.zero
        self.zero = QuotientRingElement((zero,) * self.degree, self)
        one = [zero] * self.degree
        one[0] = base.one
        self.one = QuotientRingElement(tuple(one), self)

    @property
    def gen(self) -> QuotientRingElement:
        coeffs = [self.base.zero] * self.degree
        if self.degree == 1:
            # t = -constant term of the (linear) modulus
            return self.from_upoly(UPoly.x(self.base))
        coeffs[1] = self.base.one
        return QuotientRingElement(tuple(coeffs), self)

    def from_upoly(self, poly: UPoly) -> QuotientRingElement:
        rem = poly % self.modulus
        coeffs = [self.base.zero] * self.degree
        for k, c in enumerate(rem.coeffs):
            coeffs[k] = c
        return QuotientRingElement(tuple(coeffs), self)

    def from_coeffs(self, coeffs) -> QuotientRingElement:
        return self.from_upoly(UPoly(self.base, [self.base.coerce(c) for c in coeffs]))

    def from_int(self, n: int) -> QuotientRingElement:
        return self.coerce(n)

    def coerce(self, v) -> QuotientRingElement:
        if isinstance(v, QuotientRingElement):
            if v.ring != self:
                raise ValueError("element of a different quotient ring")
            return v
        if isinstance(v, UPoly) and v.field == self.base:
            return self.from_upoly(v)
        if isinstance(v, (int, Fraction, str)):
            c = self.base.coerce(v)
        else:
            c = self.base.coerce(v)  # may raise TypeError
        coeffs = [self.base.zero] * self.degree
        coeffs[0] = c
        return QuotientRingElement(tuple(coeffs), self)

    def _mul(self, a: QuotientRingElement, b: QuotientRingElement):
        base = self.base
        zero = base.zero
        n = self.degree
        prod = [zero] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x == zero:
                continue
            for j, y in enumerate(b.coeffs):
                prod[i + j] = prod[i + j] + x * y
        # reduce by the monic modulus
        m = self.modulus.coeffs
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c == zero:
                continue
            prod[k] = zero
            shift = k - n
            for j in range(n):
                prod[shift + j] = prod[shift + j] - c * m[j]
        return QuotientRingElement(tuple(prod[:n]), self)

    def inverse(self, a: QuotientRingElement) -> QuotientRingElement:
        if not a:
            raise ZeroDivisionError("0 is not invertible")
        g, s, _ = a.lift().xgcd(self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(
                f"{a!r} is not invertible: gcd with modulus is {g!r}"
            )
        return self.from_upoly(s)

    def is_unit(self, a: QuotientRingElement) -> bool:
        if not a:
            return False
        g, _, _ = a.lift().xgcd(self.modulus)
        return g.degree == 0

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self):
        return hash((self.base, self.modulus.coeffs))

    def __repr__(self):
        return f"{self.base!r}[{self.gen_name}]/({self.modulus!r})"


def number_field_ring(modulus_coeffs, gen_name: str = "a") -> QuotientRing:
    """Q[a]/(m(a)) for a monic integer/rational modulus, coefficients ascending."""
    return QuotientRing(QQ, UPoly(QQ, list(modulus_coeffs)), gen_name)
