"""Point counting for the catalog models over GF(p^m).

A compiled kernel is preferred at import time, with a numpy fallback
(``QUARTICA_FORCE_PURE=1`` forces the fallback).  Counts are exact integers;
the outer enumeration can be partitioned across processes, and the aggregate
is an order-independent sum, so results are identical either way.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fields import GF
from .finitefield import (
    FieldTables,
    enumeration_chunks,
    field_tables,
    scalar_index,
)
from .models import EllipticLong, HyperellipticHF, IntersectionP3, SexticModel
from .upoly import UPoly, upoly_q

if os.environ.get("QUARTICA_FORCE_PURE"):
    from . import _countpure as _kernel
else:
    try:
        from . import _countcore as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _countpure as _kernel


def kernel_name() -> str:
    return "compiled" if _kernel.COMPILED else "pure"


@dataclass(frozen=True)
class PointCount:
    label: str
    p: int
    m: int
    n: int


class BadReductionError(ValueError):
    pass


def _require_good_prime(p: int):
    from .fields import is_prime

    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")


def _affine_chunk(p: int, m: int, x0: int, x1: int) -> int:
    t = field_tables(p, m)
    return _kernel.intersection_pair_count(
        t.digits, t.pows, t.sq, t.cb, t.na, t.logt, p, t.q, x0, x1
    )


def count_intersection(p: int, m: int = 1, workers: int = 1) -> int:
    """Projective points of the quadric-cubic intersection over GF(p^m).

    Chart w=1 contributes at most one z per (x, y); the w=0 plane section is
    a single O(q) sweep, and its own z=w=0 sub-locus is empty for p >= 5.
    """
    _require_good_prime(p)
    t = field_tables(p, m)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = enumeration_chunks(t.desc, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_affine_chunk, p, m, a, b) for a, b in chunks]
            affine = sum(f.result() for f in futs)
    else:
        affine = _affine_chunk(p, m, 0, t.q)
    line = _kernel.intersection_line_count(t.sq, t.cb, t.na, t.logt, t.q)
    return affine + line


def _upoly_indices(poly: UPoly, t: FieldTables) -> np.ndarray:
    """Ascending coefficient indices of a rational polynomial reduced mod p."""
    return np.array([scalar_index(t, c) for c in poly.coeffs], dtype=np.int32)


def _reduce_mod_p(poly: UPoly, p: int) -> UPoly:
    field = GF(p)
    return UPoly(field, [field.coerce(Fraction(c)) for c in poly.coeffs])


def elliptic_discriminant(model: EllipticLong) -> Fraction:
    a1, a2, a3, a4, a6 = model.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (b2 * b6 - b4 * b4) / 4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def count_elliptic(model: EllipticLong, p: int, m: int = 1) -> int:
    """Projective count of a long-form elliptic model: 1 + sum (1 + chi(...))."""
    _require_good_prime(p)
    disc = elliptic_discriminant(model)
    if disc.numerator % p == 0:
        raise BadReductionError(f"{model.label}: singular reduction mod {p}")
    t = field_tables(p, m)
    a1, a2, a3, a4, a6 = model.coefficients()
    x = upoly_q([0, 1])
    rhs = (upoly_q([a3, a1])) ** 2 + upoly_q([4]) * (
        x**3 + upoly_q([a2]) * x**2 + upoly_q([a4]) * x + upoly_q([a6])
    )
    coeff_idx = _upoly_indices(rhs, t)
    s = _kernel.chi_poly_sum(
        coeff_idx, t.digits, t.pows, t.logt, t.expt, t.chi, p, t.q
    )
    return 1 + t.q + s


def _smooth_square_poly(model) -> UPoly:
    if isinstance(model, HyperellipticHF):
        return model.h * model.h + upoly_q([4]) * model.f
    if isinstance(model, SexticModel):
        return model.sextic
    raise TypeError(f"not a y^2-style model: {model!r}")


def count_hyperelliptic(model, p: int, m: int = 1) -> int:
    """Smooth-model count for y^2( + h y) = f via the quadratic character.

    Points at infinity follow the completed square S = h^2 + 4f reduced mod
    p: two, zero, or one according to chi of the leading coefficient and the
    parity of deg S.
    """
    _require_good_prime(p)
    S = _smooth_square_poly(model)
    Sp = _reduce_mod_p(S, p)
    if Sp.degree < S.degree - 1 or Sp.degree < 3:
        raise BadReductionError(f"{model.label}: degree collapse mod {p}")
    if not Sp.is_squarefree():
        witness = Sp.gcd(Sp.derivative())
        raise BadReductionError(
            f"{model.label}: bad reduction mod {p}, repeated factor {witness!r}"
        )
    t = field_tables(p, m)
    coeff_idx = _upoly_indices(S, t)
    s = _kernel.chi_poly_sum(
        coeff_idx, t.digits, t.pows, t.logt, t.expt, t.chi, p, t.q
    )
    if S.degree % 2 == 1:
        infinity = 1
    else:
        lc = scalar_index(t, S.lead)
        infinity = 1 + int(t.chi[lc])
    return t.q + s + infinity


def count_model(model, p: int, m: int = 1, workers: int = 1) -> PointCount:
    if isinstance(model, IntersectionP3):
        n = count_intersection(p, m, workers=workers)
    elif isinstance(model, EllipticLong):
        n = count_elliptic(model, p, m)
    elif isinstance(model, (HyperellipticHF, SexticModel)):
        n = count_hyperelliptic(model, p, m)
    else:
        raise TypeError(f"cannot count points on {model!r}")
    return PointCount(getattr(model, "label", "?"), p, m, n)
