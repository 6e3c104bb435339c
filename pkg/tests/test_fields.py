"""Coefficient domains: rationals, prime fields, quotient rings."""

import random
from fractions import Fraction

import pytest

from quartica.fields import GF, format_rational, is_prime, parse_rational
from quartica.quotring import number_field_ring
from quartica.upoly import upoly_q


class NaiveFraction:
    """Unreduced fraction oracle: compare by cross-multiplication only."""

    def __init__(self, num, den):
        assert den != 0
        self.num, self.den = num, den

    def add(self, o):
        return NaiveFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    def mul(self, o):
        return NaiveFraction(self.num * o.num, self.den * o.den)

    def sub(self, o):
        return NaiveFraction(self.num * o.den - o.num * self.den, self.den * o.den)

    def div(self, o):
        assert o.num != 0
        return NaiveFraction(self.num * o.den, self.den * o.num)

    def equals(self, frac: Fraction) -> bool:
        return self.num * frac.denominator == frac.numerator * self.den


def test_rational_matches_naive_oracle_many_pairs():
    rng = random.Random(20260808)
    for _ in range(10_000):
        a, b = rng.randint(-999, 999), rng.randint(1, 999)
        c, d = rng.randint(-999, 999), rng.randint(1, 999)
        x, y = Fraction(a, b), Fraction(c, d)
        nx, ny = NaiveFraction(a, b), NaiveFraction(c, d)
        assert nx.add(ny).equals(x + y)
        assert nx.sub(ny).equals(x - y)
        assert nx.mul(ny).equals(x * y)
        if c != 0:
            assert nx.div(ny).equals(x / y)


def test_rational_invariants():
    x = Fraction(-6, -4)
    assert x.denominator > 0
    assert x == Fraction(3, 2)
    assert parse_rational("27/2") == Fraction(27, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(8, 4)) == "2"


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert is_prime(10**9 + 7)
    assert not is_prime(10**9 + 8)


def test_prime_field_basics():
    F = GF(7)
    a, b = F.from_int(3), F.from_int(5)
    assert (a + b).value == 1
    assert (a * b).value == 1
    assert (a - b).value == 5
    assert (a / b) * b == a
    assert a ** (-1) * a == F.one
    assert F.coerce(Fraction(1, 2)).value == 4
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(ValueError):
        GF(6)


def test_quotient_ring_spec_examples():
    # Q[a]/(a^6 - 18a^4 + 81a^2 + 324)
    K = number_field_ring([324, 0, 81, 0, -18, 0, 1])
    a = K.gen
    assert a * a.inverse() == K.one
    assert a**6 == 18 * a**4 - 81 * a**2 - 324
    delta = 2 * a**3 - 18 * a
    assert bool(delta)
    assert K.is_unit(delta)
    assert delta * delta.inverse() == K.one


def test_quotient_ring_noninvertible_names_gcd():
    # (t^2 - 1) is a zero divisor mod t^4 - 1
    K = number_field_ring([-1, 0, 0, 0, 1], gen_name="t")
    t = K.gen
    elem = t * t - 1
    with pytest.raises(ZeroDivisionError) as exc:
        elem.inverse()
    assert "gcd" in str(exc.value)


def test_extension_field_frobenius_and_order():
    from quartica.finitefield import make_field, quotient_ring_of

    rng = random.Random(7)
    for (p, m) in [(5, 2), (7, 3), (13, 2)]:
        desc = make_field(p, m)
        K = quotient_ring_of(desc)
        q = p**m
        for _ in range(8):
            a = K.from_coeffs([rng.randrange(p) for _ in range(m)])
            b = K.from_coeffs([rng.randrange(p) for _ in range(m)])
            assert (a + b) ** p == a**p + b**p
            if a:
                assert a ** (q - 1) == K.one


def test_quadratic_character_multiplicative():
    from quartica.finitefield import field_tables, mul_indices, quadratic_character

    rng = random.Random(11)
    for (p, m) in [(5, 1), (7, 2), (11, 1)]:
        t = field_tables(p, m)
        q = t.q
        total = sum(quadratic_character(t, i) for i in range(q))
        assert total == 0
        for _ in range(40):
            a, b = rng.randrange(q), rng.randrange(q)
            assert quadratic_character(t, mul_indices(t, a, b)) == quadratic_character(
                t, a
            ) * quadratic_character(t, b)


def test_upoly_division_and_gcd():
    f = upoly_q([-1, 0, 1])  # x^2 - 1
    g = upoly_q([1, 1])  # x + 1
    quo, rem = divmod(f, g)
    assert rem.is_zero() and quo == upoly_q([-1, 1])
    assert f.gcd(g) == g.monic()
    gg, s, t = f.xgcd(upoly_q([1, 0, 1]))
    assert gg == s * f + t * upoly_q([1, 0, 1])


def test_upoly_resultant_discriminant():
    # disc(x^2 + bx + c) = b^2 - 4c
    f = upoly_q([Fraction(3), Fraction(-5), Fraction(1)])
    assert f.discriminant() == Fraction(25 - 12)
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    g = upoly_q([Fraction(2), Fraction(-1), Fraction(0), Fraction(1)])
    assert g.discriminant() == Fraction(-4 * (-1) ** 3 - 27 * 4)
