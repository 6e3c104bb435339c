"""Deterministic field construction, enumeration, and table consistency."""

import random

import pytest

from quartica.fields import GF
from quartica.finitefield import (
    add_indices,
    element_to_index,
    enumeration_chunks,
    enumerate_field,
    field_tables,
    index_to_element,
    make_field,
    mul_indices,
    quadratic_character,
    quotient_ring_of,
    scalar_index,
)

def test_make_field_prime_degree_one():
    desc = make_field(5, 1)
    assert desc.modulus == (0, 1)  # the polynomial t
    assert desc.q == 5


def test_make_field_smallest_irreducible_degree_two():
    desc = make_field(5, 2)
    assert desc.modulus == (2, 0, 1)  # t^2 + 2
    # exhaustive oracle: first v (low digits first) with irreducible t^2+c1 t+c0
    F = GF(5)
    found = None
    for v in range(25):
        c0, c1 = v % 5, v // 5
        # t^2 + c1 t + c0 irreducible over F_5 iff no roots
        if all((t * t + c1 * t + c0) % 5 for t in range(5)):
            found = (c0, c1, 1)
            break
    assert desc.modulus == found


def test_make_field_rejects_composite():
    with pytest.raises(ValueError):
        make_field(4, 1)


def test_enumeration_and_chunks():
    desc = make_field(5, 1)
    assert list(enumerate_field(desc)) == [0, 1, 2, 3, 4]
    desc25 = make_field(5, 2)
    assert len(list(enumerate_field(desc25))) == 25
    chunks = enumeration_chunks(desc25, 4)
    covered = []
    for a, b in chunks:
        covered.extend(range(a, b))
    assert covered == list(range(25))


def test_quadratic_character_f5():
    t = field_tables(5, 1)
    squares = {(x * x) % 5 for x in range(1, 5)}
    assert squares == {1, 4}
    assert quadratic_character(t, 1) == 1
    assert quadratic_character(t, 2) == -1
    assert quadratic_character(t, 0) == 0
    assert sum(quadratic_character(t, a) for a in range(5)) == 0


def test_tables_agree_with_generic_quotient_ring():
    rng = random.Random(31)
    for (p, m) in [(5, 2), (7, 2), (5, 3)]:
        t = field_tables(p, m)
        K = quotient_ring_of(t.desc)
        for _ in range(30):
            a, b = rng.randrange(t.q), rng.randrange(t.q)
            ea, eb = index_to_element(t, K, a), index_to_element(t, K, b)
            assert element_to_index(t, ea + eb) == add_indices(t, a, b)
            assert element_to_index(t, ea * eb) == mul_indices(t, a, b)
        # sq and cb tables
        for a in range(t.q):
            ea = index_to_element(t, K, a)
            assert element_to_index(t, ea * ea) == int(t.sq[a])
            assert element_to_index(t, ea * ea * ea) == int(t.cb[a])


def test_na_table_is_negated_successor():
    for (p, m) in [(5, 1), (7, 2)]:
        t = field_tables(p, m)
        K = quotient_ring_of(t.desc)
        for a in range(t.q):
            ea = index_to_element(t, K, a)
            assert element_to_index(t, -(ea + K.one)) == int(t.na[a])


def test_scalar_index_embeds_rationals():
    from fractions import Fraction

    t = field_tables(7, 2)
    assert scalar_index(t, Fraction(-27, 2)) == (-27 * pow(2, 5, 7)) % 7
    with pytest.raises(ZeroDivisionError):
        scalar_index(t, Fraction(1, 7))


def test_descriptor_modulus_is_irreducible_over_fp():
    # the generic ring construction validates the modulus by inverting elements
    desc = make_field(11, 2)
    K = quotient_ring_of(desc)
    for v in range(1, 30):
        a = K.from_coeffs([v % 11, v // 11])
        if a:
            assert a * a.inverse() == K.one
