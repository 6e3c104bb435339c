"""Dense univariate polynomials over any exact coefficient domain.

Coefficients are stored ascending; the zero polynomial has an empty
coefficient tuple.  Division, gcd and resultants require the domain to be a
field; addition, multiplication, composition and derivatives work over any
commutative ring (quotient rings included).
"""

from __future__ import annotations

from .fields import QQ


class UPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, normalize: bool = True):
        if normalize:
            coeffs = [field.coerce(c) for c in coeffs]
            while coeffs and coeffs[-1] == field.zero:
                coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,), normalize=False)

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one), normalize=False)

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other):
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise ValueError("polynomials over different domains")
            return other
        return UPoly.const(self.field, self.field.coerce(other))

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly(self.field, [self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, [-c for c in self.coeffs], normalize=False)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        if self.is_zero() or o.is_zero():
            return UPoly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._check(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        inv_lead = self.field.one / o.lead
        rem = list(self.coeffs)
        quo = [self.field.zero] * max(len(rem) - len(o.coeffs) + 1, 0)
        dn = o.degree
        while len(rem) - 1 >= dn and rem:
            k = len(rem) - 1 - dn
            c = rem[-1] * inv_lead
            quo[k] = c
            for j, b in enumerate(o.coeffs):
                rem[k + j] = rem[k + j] - c * b
            while rem and rem[-1] == self.field.zero:
                rem.pop()
        return UPoly(self.field, quo), UPoly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if self.is_zero():
            return self.field.coerce(other) == self.field.zero
        return self.degree == 0 and self.coeffs[0] == self.field.coerce(other)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.field.one / self.lead
        return UPoly(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly(
            self.field,
            [self.coeffs[k] * self.field.from_int(k) for k in range(1, len(self.coeffs))],
        )

    def __call__(self, x):
        """Horner evaluation; accepts anything the coefficients multiply with."""
        if not self.coeffs:
            return self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        acc = UPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + UPoly.const(self.field, c)
        return acc

    def compose_fraction(self, num: "UPoly", den: "UPoly"):
        """Return sum c_k num^k den^(n-k), the numerator of self(num/den)."""
        n = self.degree
        if n < 0:
            return UPoly.zero(self.field)
        acc = UPoly.zero(self.field)
        num_pow = UPoly.one(self.field)
        den_pows = [UPoly.one(self.field)]
        for _ in range(n):
            den_pows.append(den_pows[-1] * den)
        for k in range(n + 1):
            acc = acc + num_pow * den_pows[n - k] * self.coeffs[k]
            num_pow = num_pow * num
        return acc

    def scale_argument(self, a) -> "UPoly":
        """self(a*x)."""
        a = self.field.coerce(a)
        out, pw = [], self.field.one
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return UPoly(self.field, out)

    def reverse(self) -> "UPoly":
        """x^deg * self(1/x)."""
        return UPoly(self.field, list(reversed(self.coeffs)))

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "UPoly"):
        """Return (g, s, t) with g = s*self + t*other, g monic."""
        o = self._check(other)
        r0, r1 = self, o
        s0, s1 = UPoly.one(self.field), UPoly.zero(self.field)
        t0, t1 = UPoly.zero(self.field), UPoly.one(self.field)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = self.field.one / r0.lead
        return r0.monic(), s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    def resultant(self, other: "UPoly"):
        """Sylvester resultant via fraction-free elimination (exact)."""
        o = self._check(other)
        m, n = self.degree, o.degree
        if m < 0 or n < 0:
            return self.field.zero
        if m == 0:
            return self.coeffs[0] ** n
        if n == 0:
            return o.coeffs[0] ** m
        size = m + n
        rows = []
        for i in range(n):
            row = [self.field.zero] * size
            for j, c in enumerate(reversed(self.coeffs)):
                row[i + j] = c
            rows.append(row)
        for i in range(m):
            row = [self.field.zero] * size
            for j, c in enumerate(reversed(o.coeffs)):
                row[i + j] = c
            rows.append(row)
        # Bareiss would need exact division; over a field plain elimination is fine.
        det = self.field.one
        for col in range(size):
            piv = None
            for r in range(col, size):
                if rows[r][col] != self.field.zero:
                    piv = r
                    break
            if piv is None:
                return self.field.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det = det * rows[col][col]
            inv = self.field.one / rows[col][col]
            for r in range(col + 1, size):
                if rows[r][col] == self.field.zero:
                    continue
                factor = rows[r][col] * inv
                for c2 in range(col, size):
                    rows[r][c2] = rows[r][c2] - factor * rows[col][c2]
        return det

    def discriminant(self):
        """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead."""
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return self.field.from_int(sign) * self.resultant(self.derivative()) / self.lead

    def shift_argument(self, c) -> "UPoly":
        """self(x + c)."""
        x_plus_c = UPoly(self.field, [self.field.coerce(c), self.field.one])
        return self.compose(x_plus_c)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == self.field.zero:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        return " + ".join(parts)


def upoly_q(coeffs) -> UPoly:
    """Ascending-coefficient polynomial over QQ."""
    return UPoly(QQ, coeffs)
