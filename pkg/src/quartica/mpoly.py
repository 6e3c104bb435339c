"""Sparse multivariate polynomials over a pluggable coefficient field.

Terms are stored in a dict keyed by exponent tuples; no zero coefficient is
ever kept, so two polynomials are equal iff their term dicts are.  All
operations return new objects - nothing mutates after construction, so
polynomials are safe to share.

The text format uses ``^`` for powers and accepts both explicit ``*`` and the
juxtaposition style of written mathematics (``3ac`` = ``3*a*c``); printing is
deterministic (descending lexicographic in the ring's variable order), so
printed output is stable across runs.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, format_rational


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a) -> int:
    return sum(a)


class LexOrder:
    """Lexicographic order with an explicit variable priority list.

    Priorities are ring variable indices, most significant first; elimination
    orders are expressed by listing the eliminated variables before the kept
    ones.
    """

    def __init__(self, priority):
        self.priority = tuple(priority)

    def sort_key(self, mono):
        return tuple(mono[i] for i in self.priority)

    def greater(self, a, b) -> bool:
        return self.sort_key(a) > self.sort_key(b)

    def __repr__(self):
        return f"lex{self.priority}"


class BlockOrder:
    """Two-block elimination order, graded reverse lex inside each block.

    Any monomial touching a first-block variable exceeds every monomial in
    the second block only, which is what elimination needs; grevlex inside
    the blocks keeps Buchberger's intermediate bases small.
    """

    def __init__(self, first, second):
        self.first = tuple(first)
        self.second = tuple(second)
        self.priority = self.first + self.second

    @staticmethod
    def _grevlex_key(exps):
        return (sum(exps),) + tuple(-e for e in reversed(exps))

    def sort_key(self, mono):
        return self._grevlex_key([mono[i] for i in self.first]) + self._grevlex_key(
            [mono[i] for i in self.second]
        )

    def greater(self, a, b) -> bool:
        return self.sort_key(a) > self.sort_key(b)

    def __repr__(self):
        return f"block_grevlex({self.first}|{self.second})"


class PolyRing:
    def __init__(self, field, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.field = field
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    def lex_order(self, priority_names=None) -> LexOrder:
        if priority_names is None:
            return LexOrder(range(self.nvars))
        return LexOrder(self.index[n] for n in priority_names)

    def elimination_order(self, keep_names, kind: str = "block") -> "LexOrder | BlockOrder":
        keep = set(keep_names)
        unknown = keep - set(self.names)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        first = [i for i, n in enumerate(self.names) if n not in keep]
        last = [i for i, n in enumerate(self.names) if n in keep]
        if kind == "lex":
            return LexOrder(first + last)
        return BlockOrder(first, last)

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return self.const(self.field.one)

    def const(self, c) -> "MultiPoly":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero
        return MultiPoly(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> "MultiPoly":
        if name not in self.index:
            raise ValueError(f"{name!r} is not a variable of {self!r}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return MultiPoly(self, {tuple(e): self.field.one})

    def gens(self):
        return tuple(self.gen(n) for n in self.names)

    def poly(self, terms: dict) -> "MultiPoly":
        clean = {}
        zero = self.field.zero
        for mono, c in terms.items():
            c = self.field.coerce(c)
            if c != zero:
                clean[tuple(mono)] = c
        return MultiPoly(self, clean)

    def extend(self, *new_names) -> "PolyRing":
        return PolyRing(self.field, self.names + tuple(new_names))

    def drop(self, name: str) -> "PolyRing":
        return PolyRing(self.field, tuple(n for n in self.names if n != name))

    def change_field(self, field) -> "PolyRing":
        return PolyRing(field, self.names)

    def parse(self, text: str) -> "MultiPoly":
        return _Parser(self, text).parse()


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index[name]
        return max(m[i] for m in self.terms)

    def variables(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.names[i])
        return used

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    # -- arithmetic ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(
                    f"polynomials from different rings: {self.ring!r} vs {other.ring!r}"
                )
            return other
        try:
            return self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        zero = self.ring.field.zero
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m, zero) + c
            if s == zero:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

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
        zero = self.ring.field.zero
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, zero) + c1 * c2
                if s == zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = self.ring.field.coerce(scalar)
        inv = self.ring.field.one / c
        return MultiPoly(self.ring, {m: v * inv for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            o = self.ring.const(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- leading data ------------------------------------------------------

    def leading_monomial(self, order: LexOrder):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.sort_key)

    def leading_coeff(self, order: LexOrder):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: LexOrder) -> "MultiPoly":
        if not self.terms:
            return self
        inv = self.ring.field.one / self.leading_coeff(order)
        return MultiPoly(self.ring, {m: c * inv for m, c in self.terms.items()})

    # -- substitution and friends -----------------------------------------

    def map_coefficients(self, ring: PolyRing) -> "MultiPoly":
        """Push into a ring with the same variables over another field."""
        if ring.names != self.ring.names:
            raise ValueError("coefficient change requires identical variables")
        return ring.poly({m: ring.field.coerce(c) for m, c in self.terms.items()})

    def map_into(self, ring: PolyRing) -> "MultiPoly":
        """Re-express in another ring containing the same used variables."""
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    name = self.ring.names[i]
                    if name not in ring.index:
                        raise ValueError(f"variable {name!r} not present in {ring!r}")
                    new[ring.index[name]] = e
            out[tuple(new)] = ring.field.coerce(c)
        return ring.poly(out)

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Polynomial substitution; unmapped variables map to themselves.

        Values may live in a different ring (all in the same one); unmapped
        variables must then exist there by name.
        """
        for name in mapping:
            if name not in self.ring.index:
                raise ValueError(f"substitution for undeclared variable {name!r}")
        target = None
        for v in mapping.values():
            if isinstance(v, MultiPoly):
                target = v.ring
                break
        if target is None:
            target = self.ring
        images = []
        for name in self.ring.names:
            if name in mapping:
                v = mapping[name]
                images.append(v if isinstance(v, MultiPoly) else target.const(v))
            else:
                images.append(target.gen(name))
        result = target.zero
        pow_cache = [{} for _ in images]

        def image_pow(i, e):
            if e not in pow_cache[i]:
                pow_cache[i][e] = images[i] ** e
            return pow_cache[i][e]

        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * image_pow(i, e)
            result = result + term
        return result

    def substitute_rational(self, mapping: dict):
        """Substitute variable -> (num, den) rational functions.

        Returns (numerator, denominator) of the result with denominators
        cleared; purely polynomial maps give denominator 1.
        """
        for name in mapping:
            if name not in self.ring.index:
                raise ValueError(f"substitution for undeclared variable {name!r}")
        pairs = {}
        target = None
        for name, v in mapping.items():
            if isinstance(v, tuple):
                num, den = v
            else:
                num, den = v, None
            if not isinstance(num, MultiPoly):
                raise TypeError("rational substitution needs MultiPoly numerators")
            if den is not None and den.is_zero():
                raise ZeroDivisionError(f"zero denominator for {name!r}")
            pairs[name] = (num, den)
            target = num.ring
        if target is None:
            return self, self.ring.one
        # max exponent per substituted variable fixes the common denominator
        maxe = {name: 0 for name in pairs}
        for m in self.terms:
            for name in pairs:
                e = m[self.ring.index[name]]
                if e > maxe[name]:
                    maxe[name] = e
        den_pows = {}
        for name, (num, den) in pairs.items():
            d = den if den is not None else target.one
            den_pows[name] = [target.one]
            for _ in range(maxe[name]):
                den_pows[name].append(den_pows[name][-1] * d)
        numerator = target.zero
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                name = self.ring.names[i]
                if name in pairs:
                    num, _ = pairs[name]
                    if e:
                        term = term * num**e
                    term = term * den_pows[name][maxe[name] - e]
                elif e:
                    term = term * target.gen(name) ** e
            numerator = numerator + term
        denominator = target.one
        for name in pairs:
            denominator = denominator * den_pows[name][maxe[name]]
        return numerator, denominator

    def homogenize(self, var: str) -> "MultiPoly":
        ring = self.ring if var in self.ring.index else self.ring.extend(var)
        i = ring.index[var]
        if var in self.ring.index and self.degree_in(var) > 0:
            raise ValueError(f"{var!r} already occurs; cannot homogenize by it")
        d = self.total_degree()
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for j, e in enumerate(m):
                new[ring.index[self.ring.names[j]]] = e
            new[i] = d - mono_deg(m)
            out[tuple(new)] = c
        return MultiPoly(ring, out)

    def dehomogenize(self, var: str) -> "MultiPoly":
        if var not in self.ring.index:
            raise ValueError(f"{var!r} is not a variable of {self.ring!r}")
        i = self.ring.index[var]
        ring = self.ring.drop(var)
        zero = ring.field.zero
        out = {}
        for m, c in self.terms.items():
            new = tuple(e for j, e in enumerate(m) if j != i)
            s = out.get(new, zero) + c
            if s == zero:
                out.pop(new, None)
            else:
                out[new] = s
        return MultiPoly(ring, out)

    def derivative(self, name: str) -> "MultiPoly":
        i = self.ring.index[name]
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            new = list(m)
            new[i] = e - 1
            out[tuple(new)] = c * self.ring.field.from_int(e)
        return MultiPoly(self.ring, out)

    def evaluate(self, values: dict):
        """Full evaluation; values keyed by variable name."""
        missing = self.variables() - set(values)
        if missing:
            raise ValueError(f"no values for {sorted(missing)}")
        field = self.ring.field
        acc = field.zero
        vals = [values.get(n) for n in self.ring.names]
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    t = t * vals[i] ** e
            acc = acc + t
        return acc

    def to_upoly(self, name: str):
        """Convert a univariate polynomial to dense form."""
        from .upoly import UPoly

        i = self.ring.index[name]
        for m in self.terms:
            if any(e and j != i for j, e in enumerate(m)):
                raise ValueError(f"not univariate in {name!r}")
        n = self.degree_in(name)
        coeffs = [self.ring.field.zero] * (n + 1)
        for m, c in self.terms.items():
            coeffs[m[i]] = c
        return UPoly(self.ring.field, coeffs)

    # -- integer normalization (over QQ) -----------------------------------

    def primitive(self) -> "MultiPoly":
        """Scale to integer coefficients with content 1 and positive lead.

        Lead is taken in the ring's natural lex order.  Only meaningful over
        the rationals.
        """
        from math import gcd, lcm

        if not self.terms or self.ring.field != QQ:
            return self
        denom = lcm(*(c.denominator for c in self.terms.values()))
        nums = [int(c * denom) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, abs(v))
        scale = Fraction(denom, g)
        lead = max(self.terms, key=LexOrder(range(self.ring.nvars)).sort_key)
        if self.terms[lead] < 0:
            scale = -scale
        return MultiPoly(self.ring, {m: c * scale for m, c in self.terms.items()})

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        order = LexOrder(range(self.ring.nvars))
        parts = []
        for m in sorted(self.terms, key=order.sort_key, reverse=True):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            cs = format_rational(c) if isinstance(c, Fraction) else str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors:
                body = cs + "*" + "*".join(factors)
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


# -- parser -----------------------------------------------------------------


class _Parser:
    """Recursive descent over tokens with implicit multiplication."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str):
        names = sorted(self.ring.names, key=len, reverse=True)
        tokens = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(("num", int(text[i:j])))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                for name in names:
                    if text.startswith(name, i):
                        tokens.append(("var", name))
                        i += len(name)
                        break
                else:
                    j = i
                    while j < n and (text[j].isalnum() or text[j] == "_"):
                        j += 1
                    raise ValueError(f"unknown variable {text[i:j]!r}")
                continue
            if ch in "+-*/^()":
                tokens.append((ch, ch))
                i += 1
                continue
            raise ValueError(f"unexpected character {ch!r} in polynomial")
        return tokens

    def _peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        p = self._expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing input in polynomial")
        return p

    def _expr(self) -> MultiPoly:
        if self._peek() == "-":
            self._next()
            acc = -self._term()
        else:
            if self._peek() == "+":
                self._next()
            acc = self._term()
        while self._peek() in ("+", "-"):
            op, _ = self._next()
            t = self._term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _term(self) -> MultiPoly:
        acc = self._factor()
        while True:
            nxt = self._peek()
            if nxt == "*":
                self._next()
                acc = acc * self._factor()
            elif nxt == "/":
                self._next()
                d = self._factor()
                if not d.is_constant():
                    raise ValueError("division by a non-constant polynomial")
                acc = acc / d.constant_coeff()
            elif nxt in ("num", "var", "("):
                acc = acc * self._factor()  # implicit multiplication
            else:
                return acc

    def _factor(self) -> MultiPoly:
        if self._peek() == "-":
            self._next()
            return -self._factor()
        base = self._base()
        if self._peek() == "^":
            self._next()
            kind, val = self._next()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base**val
        return base

    def _base(self) -> MultiPoly:
        kind, val = self._next()
        if kind == "num":
            return self.ring.const(val)
        if kind == "var":
            return self.ring.gen(val)
        if kind == "(":
            inner = self._expr()
            kind, _ = self._next()
            if kind != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def ring_q(*names) -> PolyRing:
    return PolyRing(QQ, names)
