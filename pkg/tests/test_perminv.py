"""Permutation actions, Reynolds averaging, Molien series, invariants."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from quartica.invartheory import (
    act,
    fundamental_invariants,
    is_invariant,
    molien,
    monomial_orbits,
    reynolds,
)
from quartica.mpoly import ring_q
from quartica.perms import PermGroup, Permutation, symmetric_subgroup_types

R3 = ring_q("x", "y", "z")
R4 = ring_q("x", "y", "z", "w")


def test_permutation_parsing_and_composition():
    s = Permutation.from_cycles("(1,2,3)", 4)
    assert s(0) == 1 and s(1) == 2 and s(2) == 0 and s(3) == 3
    assert (s * s * s).is_identity()
    assert s.cycle_type() == (1, 3)
    assert s.inverse() * s == Permutation.identity(4)
    assert repr(Permutation.from_cycles("(1,2)(3,4)", 4)) == "(1,2)(3,4)"


def test_group_enumeration_orders():
    assert PermGroup.symmetric(4).order == 24
    assert PermGroup.cyclic("(1,2,3)", 4).order == 3
    assert PermGroup.cyclic("(1,2,3,4)", 4).order == 4
    assert PermGroup.cyclic("(1,2)(3,4)", 4).order == 2
    assert PermGroup.trivial(3).order == 1
    for g in PermGroup.symmetric(4):
        assert 24 % PermGroup([g], 4).order == 0


def test_action_substitutes_variables():
    # (1,2,3) sends x to y, y to z, z to x
    s = Permutation.from_cycles("(1,2,3)", 3)
    f = R3.parse("x^2z")
    assert act(f, s) == R3.parse("xy^2")


def test_reynolds_examples():
    g2 = PermGroup.cyclic("(1,2)", 3)
    assert reynolds(R3.gen("x"), g2) == R3.parse("x+y") / 2
    inv = R3.parse("x^2+y^2")
    assert reynolds(inv, g2) == inv
    c3 = PermGroup.cyclic("(1,2,3)", 3)
    assert reynolds(R3.parse("x^2z"), c3) == R3.parse("x^2z + xy^2 + yz^2") / 3


def test_reynolds_idempotent_on_random_polys():
    rng = random.Random(5)
    groups = [PermGroup.cyclic("(1,2)", 3), PermGroup.cyclic("(1,2,3)", 3)]
    for group in groups:
        for _ in range(10):
            terms = {}
            for _ in range(5):
                mono = tuple(rng.randint(0, 3) for _ in range(3))
                terms[mono] = Fraction(rng.randint(-5, 5))
            f = R3.poly(terms)
            r = reynolds(f, group)
            assert reynolds(r, group) == r
            assert is_invariant(r, group)


def test_reynolds_characteristic_restriction():
    from quartica.fields import GF
    from quartica.mpoly import PolyRing

    Rp = PolyRing(GF(2), ("x", "y", "z"))
    with pytest.raises(ValueError):
        reynolds(Rp.gen("x"), PermGroup.cyclic("(1,2)", 3))


def test_is_invariant_examples():
    assert is_invariant(R4.parse("x+y+z+w"), PermGroup.symmetric(4))
    assert not is_invariant(R3.gen("x"), PermGroup.cyclic("(1,2)", 3))
    g = PermGroup.cyclic("(1,2)", 3)
    assert is_invariant(R3.parse("x^2+y^2"), g)
    assert is_invariant(R3.gen("z"), g)


def test_molien_trivial_group():
    series = molien(PermGroup.trivial(3), 8)
    # 1/(1-z)^3: coefficients C(d+2, 2)
    assert list(series.coefficients) == [(d + 2) * (d + 1) // 2 for d in range(9)]


def _partitions_into_parts_at_most(d, kmax):
    if d == 0:
        return 1
    count = 0

    def rec(remaining, largest):
        nonlocal count
        if remaining == 0:
            count += 1
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part)

    rec(d, kmax)
    return count


def test_molien_s4_counts_partitions():
    series = molien(PermGroup.symmetric(4), 10)
    for d in range(11):
        assert series.coefficient(d) == _partitions_into_parts_at_most(d, 4)


def test_molien_c2_on_three_variables():
    # (1/2)(1/(1-z)^3 + 1/((1-z)(1-z^2)))
    series = molien(PermGroup.cyclic("(1,2)", 3), 8)
    expected = []
    for d in range(9):
        full = (d + 2) * (d + 1) // 2
        half = sum(1 for a in range(d + 1) if (d - a) % 2 == 0 for _ in range(1))
        # 1/((1-z)(1-z^2)): number of ways d = a + 2b
        half = d // 2 + 1
        expected.append((full + half) // 2)
    assert list(series.coefficients) == expected


def _invariant_dimension_bruteforce(group, ring, degree):
    """Exact nullspace dimension of the invariance constraints on degree-d."""
    from quartica.invartheory import act

    monos = []
    n = ring.nvars
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for perm in group.generators or [Permutation.identity(group.n)]:
        for m in monos:
            shifted = act(ring.poly({m: 1}), perm)
            row = [Fraction(0)] * len(monos)
            row[index[m]] += 1
            for mm, c in shifted.terms.items():
                row[index[mm]] -= c
            rows.append(row)
    # rank via exact elimination
    rank = 0
    rows = [r for r in rows if any(r)]
    cols = len(monos)
    pivots = []
    for row in rows:
        r = row[:]
        for pc, pr in pivots:
            if r[pc]:
                f = r[pc]
                r = [x - f * y for x, y in zip(r, pr)]
        for j in range(cols):
            if r[j]:
                inv = Fraction(1) / r[j]
                pivots.append((j, [x * inv for x in r]))
                rank += 1
                break
    return cols - rank


@pytest.mark.parametrize("name", sorted(symmetric_subgroup_types()))
def test_molien_matches_bruteforce_dimension(name):
    group = symmetric_subgroup_types()[name]
    series = molien(group, 6)
    for d in range(1, 7):
        dim = _invariant_dimension_bruteforce(group, R4, d)
        assert series.coefficient(d) == dim, (name, d)


def test_molien_rational_function_consistent_with_series():
    for group in (PermGroup.cyclic("(1,2)", 3), PermGroup.symmetric(4)):
        s = molien(group, 12)
        num, den = s.numerator, s.denominator
        # multiply series by den and compare against num coefficient-wise
        coeffs = list(s.coefficients)
        for k in range(len(coeffs)):
            acc = Fraction(0)
            for j in range(0, k + 1):
                acc += Fraction(den[j]) * coeffs[k - j]
            assert acc == Fraction(num[k]), (group, k)


def _graded_span_dimension(polys, group, ring, degree):
    """Dimension of the degree-d piece of the algebra the polys generate."""
    from quartica.invartheory import _product_exponents

    orbits = monomial_orbits(group, degree)
    rep_index = {rep: i for i, (rep, _) in enumerate(orbits)}
    degrees = [g.total_degree() for g in polys]
    rows = []
    for exp in _product_exponents(degrees, degree):
        prod = ring.one
        for i, e in enumerate(exp):
            if e:
                prod = prod * polys[i] ** e
        rows.append([Fraction(prod.coefficient(rep)) for rep in rep_index])
    rank = 0
    pivots = []
    for row in rows:
        r = row[:]
        for pc, pr in pivots:
            if r[pc]:
                f = r[pc]
                r = [x - f * y for x, y in zip(r, pr)]
        for j, x in enumerate(r):
            if x:
                inv = Fraction(1) / x
                pivots.append((j, [inv * y for y in r]))
                rank += 1
                break
    return rank


def test_fundamental_invariants_c2_matches_catalog_choice():
    group = PermGroup.cyclic("(1,2)", 3)
    gens = fundamental_invariants(group, R3)
    expected = [R3.parse("x+y"), R3.gen("z"), R3.parse("x^2+y^2")]
    series = molien(group, group.order)
    for d in range(1, group.order + 1):
        got = _graded_span_dimension(gens, group, R3, d)
        want = _graded_span_dimension(expected, group, R3, d)
        assert got == want == series.coefficient(d)


def test_fundamental_invariants_s4_spans_match_power_sums():
    group = PermGroup.symmetric(4)
    gens = fundamental_invariants(group, R4)
    power_sums = [
        R4.parse("x+y+z+w"),
        R4.parse("x^2+y^2+z^2+w^2"),
        R4.parse("x^3+y^3+z^3+w^3"),
        R4.parse("x^4+y^4+z^4+w^4"),
    ]
    assert sorted(g.total_degree() for g in gens) == [1, 2, 3, 4]
    for d in range(1, 7):
        assert _graded_span_dimension(gens, group, R4, d) == _graded_span_dimension(
            power_sums, group, R4, d
        )


def test_fundamental_invariants_c3_spans_match_catalog():
    group = PermGroup.cyclic("(1,2,3)", 3)
    gens = fundamental_invariants(group, R3)
    catalog = [
        R3.parse("x+y+z"),
        R3.parse("x^2+y^2+z^2"),
        R3.parse("x^3+y^3+z^3"),
        R3.parse("x^2z+xy^2+yz^2"),
    ]
    for d in range(1, 4):
        assert _graded_span_dimension(gens, group, R3, d) == _graded_span_dimension(
            catalog, group, R3, d
        )


def test_fundamental_invariants_degrees_bounded_by_group_order():
    for name, group in symmetric_subgroup_types().items():
        if name == "full":
            continue
        gens = fundamental_invariants(group, R4)
        assert all(g.total_degree() <= group.order for g in gens), name
        assert all(is_invariant(g, group) for g in gens), name


def test_orbit_sums_of_low_degree_lie_in_generated_algebra():
    """Degree-d orbit sums lie in the span of generator products, d <= order."""
    for group in (PermGroup.cyclic("(1,2)", 3), PermGroup.cyclic("(1,2,3)", 3)):
        ring = R3
        gens = fundamental_invariants(group, ring)
        for d in range(1, group.order + 1):
            orbits = monomial_orbits(group, d)
            span_dim = _graded_span_dimension(gens, group, ring, d)
            assert span_dim == len(orbits)
