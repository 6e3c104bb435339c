"""GF(p^m) construction, enumeration, and flat lookup tables.

Field elements are integer indices 0..q-1; the index's base-p digits are the
coefficients of the representative polynomial, so enumeration order is
coefficient-lexicographic and deterministic.  The modulus is the
lexicographically smallest monic irreducible (scanning the constant
coefficient fastest), making every table - and therefore every cached point
count - reproducible across runs and platforms.

The counting kernels work entirely on the numpy tables built here:
multiplicative structure via discrete-log tables from a deterministic
generator, addition via base-p digit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .fields import GF, is_prime
from .quotring import QuotientRing
from .upoly import UPoly


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    m: int
    modulus: tuple  # monic, ascending, length m+1, integer coefficients

    @property
    def q(self) -> int:
        return self.p**self.m


# -- polynomial helpers over GF(p) as plain int lists ---------------------------


def _poly_mul_mod(a, b, modulus, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    deg_m = len(modulus) - 1
    for k in range(len(out) - 1, deg_m - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for j in range(deg_m):
                out[k - deg_m + j] = (out[k - deg_m + j] - c * modulus[j]) % p
    out = out[:deg_m]
    while len(out) < deg_m:
        out.append(0)
    return out


def _poly_pow_mod(base, e, modulus, p):
    result = [1] + [0] * (len(modulus) - 2)
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, acc, modulus, p)
        acc = _poly_mul_mod(acc, acc, modulus, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = [x % p for x in a], [x % p for x in b]

    def norm(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = norm(a), norm(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and norm(r):
            if not r:
                break
            c = r[-1] * inv % p
            shift = len(r) - len(b)
            for j in range(len(b)):
                r[shift + j] = (r[shift + j] - c * b[j]) % p
            r = norm(r)
        a, b = b, r
    return a


def _is_irreducible(coeffs, p) -> bool:
    """coeffs: monic, ascending, degree m >= 1 over GF(p)."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    xp = _poly_pow_mod(x, p**m, coeffs, p)
    target = [0, 1] + [0] * (m - 2)
    if xp != target[:m]:
        return False
    # gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    for ell in _prime_divisors(m):
        xq = _poly_pow_mod(x, p ** (m // ell), coeffs, p)
        diff = list(xq)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, coeffs, p)
        if len(g) - 1 != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def make_field(p: int, m: int) -> FieldDescriptor:
    """Deterministic field: smallest monic irreducible under the digit scan."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    for v in range(p**m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return FieldDescriptor(p, m, tuple(coeffs))
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


# -- lookup tables ----------------------------------------------------------------


@dataclass(frozen=True)
class FieldTables:
    desc: FieldDescriptor
    q: int
    digits: np.ndarray  # (q, m) int32
    pows: np.ndarray  # (m,) int64: p^i
    expt: np.ndarray  # (q-1,) int32
    logt: np.ndarray  # (q,) int32, log[0] = -1
    sq: np.ndarray
    cb: np.ndarray
    na: np.ndarray  # index of -(e + 1)
    neg: np.ndarray
    inv: np.ndarray  # inv[0] = 0 sentinel
    chi: np.ndarray  # (q,) int8 quadratic character

    @property
    def p(self) -> int:
        return self.desc.p

    @property
    def m(self) -> int:
        return self.desc.m


def _digits_of(v: int, p: int, m: int):
    out = []
    for _ in range(m):
        out.append(v % p)
        v //= p
    return out


@lru_cache(maxsize=None)
def field_tables(p: int, m: int) -> FieldTables:
    desc = make_field(p, m)
    q = desc.q
    modulus = list(desc.modulus)
    digits = np.zeros((q, m), dtype=np.int32)
    vals = np.arange(q, dtype=np.int64)
    for i in range(m):
        digits[:, i] = vals % p
        vals //= p
    pows = np.array([p**i for i in range(m)], dtype=np.int64)

    # deterministic generator: smallest index of full multiplicative order
    order_fac = _prime_divisors(q - 1)
    gen = None
    for cand in range(2, q):
        cd = _digits_of(cand, p, m)
        ok = True
        for ell in order_fac:
            e = _poly_pow_mod(cd, (q - 1) // ell, modulus, p)
            if e == [1] + [0] * (m - 1):
                ok = False
                break
        if ok:
            gen = cd
            break
    if gen is None:
        raise ArithmeticError("no multiplicative generator found")

    expt = np.zeros(q - 1, dtype=np.int32)
    logt = np.full(q, -1, dtype=np.int32)
    e = [1] + [0] * (m - 1)
    for k in range(q - 1):
        idx = 0
        for i in range(m - 1, -1, -1):
            idx = idx * p + e[i]
        expt[k] = idx
        logt[idx] = k
        e = _poly_mul_mod(e, gen, modulus, p)

    idx_all = np.arange(q)
    sq = np.zeros(q, dtype=np.int32)
    cb = np.zeros(q, dtype=np.int32)
    nz = idx_all[1:]
    sq[nz] = expt[(2 * logt[nz].astype(np.int64)) % (q - 1)]
    cb[nz] = expt[(3 * logt[nz].astype(np.int64)) % (q - 1)]

    neg = ((p - digits) % p @ pows).astype(np.int32)
    one_d = digits[1 % q]
    na = (((p - (digits + one_d) % p) % p) @ pows).astype(np.int32)
    inv = np.zeros(q, dtype=np.int32)
    inv[nz] = expt[(q - 1 - logt[nz].astype(np.int64)) % (q - 1)]
    chi = np.zeros(q, dtype=np.int8)
    chi[nz] = np.where(logt[nz] % 2 == 0, 1, -1)
    return FieldTables(desc, q, digits, pows, expt, logt, sq, cb, na, neg, inv, chi)


def add_indices(t: FieldTables, a: int, b: int) -> int:
    return int((t.digits[a] + t.digits[b]) % t.p @ t.pows)


def mul_indices(t: FieldTables, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(t.expt[(int(t.logt[a]) + int(t.logt[b])) % (t.q - 1)])


def scalar_index(t: FieldTables, c) -> int:
    """Index of a prime-subfield scalar given as int or Fraction."""
    p = t.p
    c = Fraction(c)
    if c.denominator % p == 0:
        raise ZeroDivisionError(f"denominator {c.denominator} not invertible mod {p}")
    return c.numerator * pow(c.denominator, p - 2, p) % p


def quadratic_character(t: FieldTables, a: int) -> int:
    """0 on zero, +1 on nonzero squares, -1 otherwise (q odd)."""
    if t.p == 2:
        raise ValueError("quadratic character needs odd characteristic")
    return int(t.chi[a])


def enumerate_field(desc: FieldDescriptor):
    """All q element indices in coefficient-lexicographic order."""
    return range(desc.q)


def enumeration_chunks(desc: FieldDescriptor, k: int):
    """k contiguous chunks covering 0..q-1 exactly once."""
    if k < 1:
        raise ValueError("need at least one chunk")
    q = desc.q
    bounds = [q * i // k for i in range(k + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(k)]


def quotient_ring_of(desc: FieldDescriptor) -> QuotientRing:
    """The same field as a generic quotient ring, for slow-path arithmetic."""
    base = GF(desc.p)
    mod = UPoly(base, [base.from_int(c) for c in desc.modulus])
    return QuotientRing(base, mod, gen_name="t")


def index_to_element(t: FieldTables, ring: QuotientRing, idx: int):
    base = ring.base
    return ring.from_coeffs([base.from_int(int(d)) for d in t.digits[idx]])


def element_to_index(t: FieldTables, elem) -> int:
    idx = 0
    for i in range(t.m - 1, -1, -1):
        idx = idx * t.p + elem.coeffs[i].value
    return idx
