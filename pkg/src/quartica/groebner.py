"""Buchberger's algorithm, reduced Groebner bases, and elimination ideals.

Small and exact by design: the pair-selection rule is the normal strategy
(minimal lcm degree, then first index), Buchberger's coprimality and chain
criteria prune pairs, and every basis is fully interreduced and monic, so a
given (ideal, order) pair always produces the identical output list.

Monomials stay as exponent tuples; orders contribute a precomputed integer
sort key.  Division queues run on a max-heap with lazy deletion, and pair
selection on its own heap.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .mpoly import BlockOrder, LexOrder, MultiPoly, PolyRing, mono_div, mono_lcm, mono_mul

AnyOrder = LexOrder | BlockOrder


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple

    def __init__(self, generators, ring=None):
        gens = [g for g in generators if not g.is_zero()]
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty ideal")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("ideal generators live in different rings")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: AnyOrder

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)


# -- raw kernel on term dicts ---------------------------------------------------


def _neg(key):
    return tuple(-k for k in key)


def _lead(terms, key):
    return max(terms, key=key)


def _divisor_entry(terms, key):
    lm = _lead(terms, key)
    lc = terms[lm]
    tail = [(m, c) for m, c in terms.items() if m != lm]
    return lm, lc, tail


def _nf_raw(terms, divisors, zero, key):
    """Full normal form of a term dict against [(lm, lc, tail_items)]."""
    coeffs = dict(terms)
    heap = [(_neg(key(m)), m) for m in coeffs]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = coeffs.pop(m, None)
        if c is None:
            continue
        for lm, lc, tail in divisors:
            q = mono_div(m, lm)
            if q is not None:
                scale = c / lc
                for gm, gc in tail:
                    mm = mono_mul(gm, q)
                    prev = coeffs.get(mm)
                    if prev is None:
                        coeffs[mm] = -scale * gc
                        heapq.heappush(heap, (_neg(key(mm)), mm))
                    else:
                        s = prev - scale * gc
                        if s == zero:
                            del coeffs[mm]
                        else:
                            coeffs[mm] = s
                break
        else:
            remainder[m] = c
    return remainder


def _spoly_raw(t1, t2, zero, key):
    lm1, lm2 = _lead(t1, key), _lead(t2, key)
    lcm = mono_lcm(lm1, lm2)
    q1, q2 = mono_div(lcm, lm1), mono_div(lcm, lm2)
    c1, c2 = t1[lm1], t2[lm2]
    out = {}
    for m, c in t1.items():
        out[mono_mul(m, q1)] = c / c1
    for m, c in t2.items():
        mm = mono_mul(m, q2)
        prev = out.get(mm, zero)
        s = prev - c / c2
        if s == zero:
            out.pop(mm, None)
        else:
            out[mm] = s
    return out


def _monic_raw(terms, key):
    lm = _lead(terms, key)
    lc = terms[lm]
    if lc == 1:
        return terms
    return {m: c / lc for m, c in terms.items()}


def _buchberger_raw(polys, zero, key):
    basis = [_monic_raw(t, key) for t in polys if t]
    if not basis:
        return []
    entries = [_divisor_entry(t, key) for t in basis]
    lms = [e[0] for e in entries]

    pair_heap = []
    done = set()

    def push_pairs(upto, k):
        for i in range(upto):
            heapq.heappush(pair_heap, (sum(mono_lcm(lms[i], lms[k])), i, k))

    for k in range(len(basis)):
        push_pairs(k, k)

    while pair_heap:
        _, i, j = heapq.heappop(pair_heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        lcm_ij = mono_lcm(lms[i], lms[j])
        if mono_mul(lms[i], lms[j]) == lcm_ij:
            continue  # coprime leads: S-polynomial reduces to zero
        redundant = False
        for k in range(len(basis)):
            if k in (i, j) or mono_div(lcm_ij, lms[k]) is None:
                continue
            if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                redundant = True
                break
        if redundant:
            continue
        s = _spoly_raw(basis[i], basis[j], zero, key)
        r = _nf_raw(s, entries, zero, key)
        if not r:
            continue
        r = _monic_raw(r, key)
        basis.append(r)
        entries.append(_divisor_entry(r, key))
        lms.append(entries[-1][0])
        push_pairs(len(basis) - 1, len(basis) - 1)

    # minimal: ascending by lead, drop anything an earlier kept lead divides
    order_idx = sorted(range(len(basis)), key=lambda i: key(lms[i]))
    kept = []
    for i in order_idx:
        if any(mono_div(lms[i], lms[k]) is not None for k in kept):
            continue
        kept.append(i)
    # interreduce
    reduced = []
    for i in kept:
        others = [entries[k] for k in kept if k != i]
        r = _nf_raw(basis[i], others, zero, key)
        if r:
            reduced.append(_monic_raw(r, key))
    reduced.sort(key=lambda t: key(_lead(t, key)))
    return reduced


# -- public API ----------------------------------------------------------------


def normal_form(f: MultiPoly, G, order: AnyOrder | None = None) -> MultiPoly:
    """Full remainder of f on division by the list G (tried in list order)."""
    ring = f.ring
    if order is None:
        order = ring.lex_order()
    key = order.sort_key
    zero = ring.field.zero
    divisors = [_divisor_entry(g.terms, key) for g in G if not g.is_zero()]
    rem = _nf_raw(f.terms, divisors, zero, key)
    return MultiPoly(ring, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: AnyOrder | None = None) -> MultiPoly:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    ring = f.ring
    if order is None:
        order = ring.lex_order()
    out = _spoly_raw(f.terms, g.terms, ring.field.zero, order.sort_key)
    return MultiPoly(ring, out)


def buchberger(gens, order: AnyOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens."""
    if isinstance(gens, Ideal):
        gens = gens.generators
    gens = list(gens)
    if not gens:
        return GroebnerBasis((), order)
    ring = gens[0].ring
    if order is None:
        order = ring.lex_order()
    raw = [g.terms for g in gens if not g.is_zero()]
    reduced = _buchberger_raw(raw, ring.field.zero, order.sort_key)
    elems = tuple(MultiPoly(ring, t) for t in reduced)
    return GroebnerBasis(elems, order)


def eliminate(ideal: Ideal, keep_names, kind: str = "block") -> Ideal:
    """Generators of the elimination ideal in the kept variables."""
    ring = ideal.ring
    order = ring.elimination_order(keep_names, kind=kind)
    gb = buchberger(ideal.generators, order)
    keep = set(keep_names)
    kept = [g for g in gb if g.variables() <= keep]
    return Ideal(tuple(kept), ring=ring)


def ideal_member(f: MultiPoly, ideal: Ideal, order: AnyOrder | None = None) -> bool:
    if order is None:
        order = ideal.ring.lex_order()
    gb = buchberger(ideal.generators, order)
    return normal_form(f, list(gb), order).is_zero()


def is_groebner_basis(G, order: AnyOrder) -> bool:
    """Buchberger criterion audit: every S-polynomial reduces to zero."""
    gl = [g for g in G if not g.is_zero()]
    for i in range(len(gl)):
        for j in range(i + 1, len(gl)):
            s = s_polynomial(gl[i], gl[j], order)
            if not normal_form(s, gl, order).is_zero():
                return False
    return True
