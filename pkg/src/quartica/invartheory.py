"""Invariant theory of permutation actions on polynomial rings.

Reynolds averaging, invariance tests, the exact Molien series, and
fundamental-invariant generation: orbit sums of monomials up to the Noether
bound (the group order), pruned degree by degree so the chosen generators'
products span exactly the Molien-predicted dimension in every degree.

The pruning scan certifies "products already span degree d" by ranking
point-evaluation vectors modulo a word-size prime - a full rank there is a
proof, since evaluation can only lose rank - and falls back to exact
arithmetic in the orbit-sum basis whenever the fast certificate fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np

from .mpoly import MultiPoly, PolyRing
from .perms import Permutation, PermGroup
from .upoly import UPoly, upoly_q

_RANK_PRIME = 2**31 - 1


def act(f: MultiPoly, perm: Permutation) -> MultiPoly:
    """Variable substitution x_i -> x_perm(i)."""
    if perm.n != f.ring.nvars:
        raise ValueError("permutation degree does not match the ring")
    out = {}
    for mono, c in f.terms.items():
        new = [0] * len(mono)
        for i, e in enumerate(mono):
            new[perm(i)] = e
        out[tuple(new)] = c
    return MultiPoly(f.ring, out)


def is_invariant(f: MultiPoly, group: PermGroup) -> bool:
    return all(act(f, p) == f for p in group.elements)


def reynolds(f: MultiPoly, group: PermGroup) -> MultiPoly:
    """Average of f over the group orbit; projects onto the invariant ring."""
    char = f.ring.field.char
    if char and group.order % char == 0:
        raise ValueError(
            f"characteristic {char} divides the group order {group.order}"
        )
    total = f.ring.zero
    for p in group.elements:
        total = total + act(f, p)
    return total / f.ring.field.from_int(group.order)


def monomial_orbits(group: PermGroup, degree: int):
    """Orbits of degree-d monomials, sorted descending by representative."""
    n = group.n
    images = [p.image for p in group.elements]
    seen = set()
    orbits = []
    for combo in combinations_with_replacement(range(n), degree):
        mono = [0] * n
        for i in combo:
            mono[i] += 1
        mono = tuple(mono)
        if mono in seen:
            continue
        orbit = set()
        for img in images:
            new = [0] * n
            for i, e in enumerate(mono):
                new[img[i]] = e
            orbit.add(tuple(new))
        seen.update(orbit)
        orbits.append((max(orbit), frozenset(orbit)))
    orbits.sort(reverse=True)
    return orbits


def orbit_sum(ring: PolyRing, orbit) -> MultiPoly:
    return MultiPoly(ring, {m: ring.field.one for m in orbit})


@dataclass(frozen=True)
class MolienSeries:
    """Hilbert series of the invariant ring as an exact rational function."""

    numerator: UPoly
    denominator: UPoly
    coefficients: tuple

    def coefficient(self, d: int) -> int:
        if d >= len(self.coefficients):
            raise IndexError(f"series only expanded to degree {len(self.coefficients) - 1}")
        return self.coefficients[d]


def molien(group: PermGroup, degree_cap: int) -> MolienSeries:
    """Molien series: (1/|G|) sum over the group of 1/det(1 - z*pi).

    For a permutation with cycle type (l_1..l_k) the determinant factors as
    prod (1 - z^l_i), so both the rational function and its expansion are
    exact integer data.
    """
    n_elems = group.order
    # exact series expansion: divide by (1 - z^l) via strided prefix sums
    acc = [0] * (degree_cap + 1)
    for p in group.elements:
        coeffs = [0] * (degree_cap + 1)
        coeffs[0] = 1
        for length in p.cycle_type():
            for k in range(length, degree_cap + 1):
                coeffs[k] += coeffs[k - length]
        for k in range(degree_cap + 1):
            acc[k] += coeffs[k]
    series = []
    for k, v in enumerate(acc):
        if v % n_elems:
            raise ArithmeticError(f"non-integral Molien coefficient at degree {k}")
        series.append(v // n_elems)

    # exact rational function, reduced
    num = upoly_q([0])
    den = upoly_q([1])
    for p in group.elements:
        d = upoly_q([1])
        for length in p.cycle_type():
            factor = [Fraction(0)] * (length + 1)
            factor[0] = Fraction(1)
            factor[length] = Fraction(-1)
            d = d * upoly_q(factor)
        # num/den + 1/d
        num = num * d + den
        den = den * d
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
    num = num * Fraction(1, n_elems)
    # normalize to integer polynomials with den(0) = 1
    scale = Fraction(1) / den.coeffs[0]
    num, den = num * scale, den * scale
    for poly in (num, den):
        for c in poly.coeffs:
            if c.denominator != 1:
                raise ArithmeticError("Molien series failed to normalize to integers")
    return MolienSeries(num, den, tuple(series))


# -- fundamental invariants ---------------------------------------------------


def _lcg_points(nvars: int, count: int, seed: int = 0x5EED):
    state = seed
    points = []
    for _ in range(count):
        vals = []
        for _ in range(nvars):
            state = (1103515245 * state + 12345) % (2**31)
            vals.append(1 + state % (_RANK_PRIME - 1))
        points.append(vals)
    return points


def _eval_mod(poly: MultiPoly, point, prime: int) -> int:
    total = 0
    for mono, c in poly.terms.items():
        if isinstance(c, Fraction):
            num = c.numerator % prime
            den = pow(c.denominator % prime, prime - 2, prime)
            cv = num * den % prime
        else:
            cv = int(c) % prime
        t = cv
        for i, e in enumerate(mono):
            if e:
                t = t * pow(point[i], e, prime) % prime
        total = (total + t) % prime
    return total


def _mod_rank(rows, prime: int) -> int:
    if not rows:
        return 0
    mat = np.array(rows, dtype=np.int64) % prime
    rank = 0
    ncols = mat.shape[1]
    for col in range(ncols):
        piv = None
        for r in range(rank, mat.shape[0]):
            if mat[r, col]:
                piv = r
                break
        if piv is None:
            continue
        mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), prime - 2, prime)
        mat[rank] = mat[rank] * inv % prime
        mask = mat[:, col].copy()
        mask[rank] = 0
        mat = (mat - np.outer(mask, mat[rank])) % prime
        rank += 1
        if rank == mat.shape[0]:
            break
    return rank


def _exact_echelon_insert(echelon, vec):
    """Reduce vec against echelon rows; insert if independent. Returns bool.

    Rows are kept mutually reduced (zero in every other pivot column), so a
    single reduction pass is a valid membership test.
    """
    v = list(vec)
    for pivot_col, row in echelon:
        if v[pivot_col]:
            factor = Fraction(v[pivot_col])
            for j in range(len(v)):
                v[j] = v[j] - factor * row[j]
    for j, x in enumerate(v):
        if x:
            inv = Fraction(1) / Fraction(x)
            new_row = [inv * y for y in v]
            for _, row in echelon:
                if row[j]:
                    factor = Fraction(row[j])
                    for k in range(len(row)):
                        row[k] = row[k] - factor * new_row[k]
            echelon.append((j, new_row))
            return True
    return False


def _product_exponents(degrees, total):
    """Multi-indices e with sum e_i * degrees_i == total, deterministic order."""
    out = []

    def rec(i, remaining, current):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(current))
            return
        d = degrees[i]
        for e in range(remaining // d, -1, -1):
            current.append(e)
            rec(i + 1, remaining - e * d, current)
            current.pop()

    rec(0, total, [])
    return [e for e in out if any(e)]


def fundamental_invariants(group: PermGroup, ring: PolyRing):
    """Algebra generators of the invariant ring from pruned orbit sums.

    Scans degrees 1..|G|; a degree contributes new orbit sums only when the
    products of the generators already chosen fail to span its invariant
    subspace (whose dimension is the orbit count, equal to the Molien
    coefficient).
    """
    if ring.nvars != group.n:
        raise ValueError("ring variable count does not match the group degree")
    char = ring.field.char
    if char and group.order % char == 0:
        raise ValueError(f"characteristic {char} divides the group order")
    bound = group.order
    gens = []
    gen_degrees = []
    orbits_by_degree = {d: monomial_orbits(group, d) for d in range(1, bound + 1)}
    max_cd = max(len(o) for o in orbits_by_degree.values())
    points = _lcg_points(ring.nvars, max_cd + 8)
    gen_values = []  # per gen: evaluation at every point, mod _RANK_PRIME

    for d in range(1, bound + 1):
        orbits = orbits_by_degree[d]
        c_d = len(orbits)
        if c_d == 0:
            continue
        exponents = _product_exponents(gen_degrees, d)
        npts = c_d + 8
        rows = []
        for exp in exponents:
            row = []
            for t in range(npts):
                v = 1
                for i, e in enumerate(exp):
                    if e:
                        v = v * pow(gen_values[i][t], e, _RANK_PRIME) % _RANK_PRIME
                row.append(v)
            rows.append(row)
        if rows and _mod_rank(rows, _RANK_PRIME) == c_d:
            continue  # proven: products already span this degree

        # exact fallback in orbit-sum coordinates
        rep_index = {rep: k for k, (rep, _) in enumerate(orbits)}
        echelon = []
        power_cache = {}

        def gen_power(i, e):
            if (i, e) not in power_cache:
                power_cache[(i, e)] = gens[i] ** e
            return power_cache[(i, e)]

        for exp in exponents:
            prod = ring.one
            for i, e in enumerate(exp):
                if e:
                    prod = prod * gen_power(i, e)
            coords = [Fraction(0)] * c_d
            for rep, k in rep_index.items():
                c = prod.coefficient(rep)
                coords[k] = c if isinstance(c, Fraction) else Fraction(c)
            _exact_echelon_insert(echelon, coords)
        for k, (rep, orbit) in enumerate(orbits):
            if len(echelon) == c_d:
                break
            unit = [Fraction(0)] * c_d
            unit[k] = Fraction(1)
            if _exact_echelon_insert(echelon, unit):
                g = orbit_sum(ring, orbit)
                gens.append(g)
                gen_degrees.append(d)
                gen_values.append(
                    [_eval_mod(g, pt, _RANK_PRIME) for pt in points]
                )
        if len(echelon) != c_d:
            raise ArithmeticError(f"failed to span invariants of degree {d}")
    return gens
