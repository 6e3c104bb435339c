"""Catalog of curve models and coordinate-change data.

Every model carries the source coefficients exactly; nothing here is
recomputed.  The symbolic checks that these presentations really describe
the same curves live in :mod:`quartica.quotient` and
:mod:`quartica.curveinv`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ
from .mpoly import MultiPoly, PolyRing, ring_q
from .upoly import UPoly, upoly_q


@dataclass(frozen=True)
class IntersectionP3:
    """Curve in P^3 cut out by a quadric and a cubic."""

    F1: MultiPoly
    F2: MultiPoly
    label: str
    genus: int | None = None


@dataclass(frozen=True)
class PlaneAffine:
    f: MultiPoly
    label: str
    genus: int | None = None


@dataclass(frozen=True)
class EllipticLong:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    label: str
    genus: int = 1

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


@dataclass(frozen=True)
class HyperellipticHF:
    """y^2 + h(x) y = f(x)."""

    h: UPoly
    f: UPoly
    label: str
    genus: int = 2


@dataclass(frozen=True)
class SexticModel:
    """y^2 = s(x), deg s <= 6."""

    sextic: UPoly
    label: str
    genus: int | None = None


@dataclass(frozen=True)
class QuotientLine:
    """A quotient of genus 0: the ideal from the full symmetric group."""

    generators: tuple
    label: str
    genus: int = 0


CurveModel = (
    IntersectionP3 | PlaneAffine | EllipticLong | HyperellipticHF | SexticModel | QuotientLine
)


def _frac(s) -> Fraction:
    return Fraction(s)


_XYZW = ring_q("x", "y", "z", "w")
_XY = ring_q("x", "y")


def _build_catalog():
    cat = {}
    cat["C"] = IntersectionP3(
        _XYZW.parse("x^2+y^2+z^2+w^2"),
        _XYZW.parse("x^3+y^3+z^3+w^3"),
        label="C",
        genus=4,
    )
    cat["planeC"] = PlaneAffine(
        _XY.parse("(x^3+y^3+1)^2+(x^2+y^2+1)^3"), label="planeC", genus=4
    )
    # y^2 - 3xy - 9y = x^3 - (27/2)x - 27
    cat["C12"] = EllipticLong(
        _frac(-3), _frac(0), _frac(-9), _frac("-27/2"), _frac(-27), label="C12"
    )
    cat["C12.weier"] = EllipticLong(
        _frac(0), _frac(0), _frac(0), _frac(-27), _frac(-378), label="C12.weier"
    )
    # y^2 - 96xy + 110592y = x^3 + 3456x^2 + 14598144x - 5718933504
    cat["C1234"] = EllipticLong(
        _frac(-96),
        _frac(3456),
        _frac(110592),
        _frac(14598144),
        _frac(-5718933504),
        label="C1234",
    )
    # y^2 + (x^3 + x^2) y = -x^6 + 4x^5 - 25x^4 + 36x^3 - 36x^2 + 18x - 6
    cat["C123"] = HyperellipticHF(
        upoly_q([0, 0, 1, 1]),
        upoly_q([-6, 18, -36, 36, -25, 4, -1]),
        label="C123",
    )
    cat["C123.weier"] = SexticModel(
        upoly_q([-24, -72, -144, -144, -99, -18, -3]), label="C123.weier", genus=2
    )
    cat["Ctilde"] = SexticModel(
        upoly_q([2, 6, 15, 18, 15, 6, 2]), label="Ctilde", genus=2
    )
    # the two elliptic covers of Ctilde, written as y^2 = cubic
    cat["E1cover"] = SexticModel(upoly_q([4, 24, 36, 64]), label="E1cover", genus=1)
    cat["E2cover"] = SexticModel(upoly_q([64, 36, 24, 4]), label="E2cover", genus=1)
    # y^2 + xy = x^3 - x^2 - 6x + 8
    cat["E2split"] = EllipticLong(
        _frac(1), _frac(-1), _frac(0), _frac(-6), _frac(8), label="E2split"
    )
    # the S4 quotient is the pair {b, c} in the invariant coordinates
    rabcd = ring_q("a", "b", "c", "d")
    cat["CmodS4"] = QuotientLine((rabcd.gen("b"), rabcd.gen("c")), label="CmodS4")
    return cat


_CATALOG = None


def catalog(label: str) -> CurveModel:
    """Look up a model by label; raises with the label list on a miss."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    if label not in _CATALOG:
        known = ", ".join(sorted(_CATALOG))
        raise KeyError(f"unknown curve label {label!r}; known labels: {known}")
    return _CATALOG[label]


def defining_polys(model: CurveModel) -> list:
    """Affine defining equations of a model as polynomials over QQ."""
    if isinstance(model, IntersectionP3):
        return [model.F1, model.F2]
    if isinstance(model, PlaneAffine):
        return [model.f]
    if isinstance(model, EllipticLong):
        R = ring_q("x", "y")
        x, y = R.gens()
        return [
            y**2 + model.a1 * x * y + model.a3 * y
            - (x**3 + model.a2 * x**2 + model.a4 * x + model.a6)
        ]
    if isinstance(model, HyperellipticHF):
        R = ring_q("x", "y")
        x, y = R.gens()
        return [y**2 + _up_to_mp(model.h, R, "x") * y - _up_to_mp(model.f, R, "x")]
    if isinstance(model, SexticModel):
        R = ring_q("x", "y")
        x, y = R.gens()
        return [y**2 - _up_to_mp(model.sextic, R, "x")]
    if isinstance(model, QuotientLine):
        return list(model.generators)
    raise TypeError(f"no defining equations for {model!r}")


def _up_to_mp(p: UPoly, ring: PolyRing, var: str) -> MultiPoly:
    x = ring.gen(var)
    acc = ring.zero
    for k, c in enumerate(p.coeffs):
        acc = acc + ring.const(c) * x**k
    return acc


@dataclass(frozen=True)
class VariableMap:
    """Assignment of destination variables to rational functions of source ones.

    Values are (numerator, denominator) MultiPoly pairs; a bare polynomial
    means denominator one.
    """

    assignments: dict

    def pairs(self):
        out = {}
        for name, v in self.assignments.items():
            if isinstance(v, tuple):
                out[name] = v
            else:
                out[name] = (v, None)
        return out
