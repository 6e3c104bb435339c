"""Quotient-curve computation and the symbolic geometry checks.

The quotient algorithm: given equations F fixed by a permutation group and a
fundamental set of invariants I_1..I_r, adjoin new variables y_j with the
relations I_j(x) - y_j, and eliminate the x's; the surviving ideal cuts out
the quotient curve in the invariant coordinates.

Alongside it live the verifications that every stored coordinate change
really maps one catalog model onto another, the plane model and its genus
computation, and the nonsingularity / good-reduction check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import GF, QQ
from .groebner import Ideal, buchberger, eliminate, normal_form
from .invartheory import act, is_invariant
from .models import (
    PlaneAffine,
    VariableMap,
    catalog,
    defining_polys,
)
from .mpoly import MultiPoly, PolyRing, ring_q
from .perms import PermGroup
from .upoly import UPoly


# -- Algorithm: quotient ideals -------------------------------------------------


def quotient_ideal(F: Ideal, group: PermGroup, invariants, new_names) -> Ideal:
    """Defining ideal of the quotient curve in the invariant coordinates.

    ``invariants`` are polynomials in F's ring, one per new name.  Each
    generator of F must be fixed by the group; violations are reported with
    the offending generator and group element.
    """
    ring = F.ring
    if group.n != ring.nvars:
        raise ValueError("group degree does not match the ring")
    char = ring.field.char
    if char and group.order % char == 0:
        raise ValueError(f"characteristic {char} divides the group order")
    for g in F.generators:
        for p in group.elements:
            if act(g, p) != g:
                raise ValueError(f"generator {g} is not invariant under {p}")
    if len(invariants) != len(new_names):
        raise ValueError("one new variable per invariant required")
    ext = ring.extend(*new_names)
    gens = [g.map_into(ext) for g in F.generators]
    for inv, name in zip(invariants, new_names):
        if not is_invariant(inv, group):
            raise ValueError(f"{inv} is not invariant under the group")
        gens.append(inv.map_into(ext) - ext.gen(name))
    elim = eliminate(Ideal(gens, ring=ext), new_names)
    out_ring = PolyRing(ring.field, tuple(new_names))
    return Ideal(tuple(g.map_into(out_ring) for g in elim.generators), ring=out_ring)


_QUOTIENT_CASES = {
    "(1,2)": {
        "vars": ("x", "y", "z"),
        "affine": True,
        "invariants": ["x+y", "z", "x^2+y^2"],
        "names": ("a", "b", "c"),
    },
    "(1,2,3)": {
        "vars": ("x", "y", "z"),
        "affine": True,
        "invariants": ["x+y+z", "x^2+y^2+z^2", "x^3+y^3+z^3", "x^2z+xy^2+yz^2"],
        "names": ("a", "b", "c", "d"),
    },
    "S4": {
        "vars": ("x", "y", "z", "w"),
        "affine": False,
        "invariants": [
            "x+y+z+w",
            "x^2+y^2+z^2+w^2",
            "x^3+y^3+z^3+w^3",
            "x^4+y^4+z^4+w^4",
        ],
        "names": ("a", "b", "c", "d"),
    },
}


def curve_equations(ring: PolyRing, affine: bool):
    """The quadric and cubic cutting out the curve, projective or with w=1."""
    if affine:
        return [
            ring.parse("x^2+y^2+z^2+1"),
            ring.parse("x^3+y^3+z^3+1"),
        ]
    return [
        ring.parse("x^2+y^2+z^2+w^2"),
        ring.parse("x^3+y^3+z^3+w^3"),
    ]


def catalog_quotient(group_label: str) -> Ideal:
    """Quotient ideal for one of the three worked subgroup cases.

    Subgroups fixing the fourth coordinate act on the w=1 affine model in
    (x, y, z); the full symmetric group acts on the projective model.
    """
    try:
        case = _QUOTIENT_CASES[group_label]
    except KeyError:
        known = ", ".join(sorted(_QUOTIENT_CASES))
        raise KeyError(f"unknown quotient label {group_label!r}; known: {known}")
    ring = ring_q(*case["vars"])
    F = Ideal(curve_equations(ring, case["affine"]), ring=ring)
    n = len(case["vars"])
    if group_label == "S4":
        group = PermGroup.symmetric(n)
    else:
        group = PermGroup.cyclic(group_label, n)
    invariants = [ring.parse(s) for s in case["invariants"]]
    return quotient_ideal(F, group, invariants, case["names"])


def quotient_pullback_check(group_label: str) -> bool:
    """Every quotient generator, rewritten in the curve variables, lies in F."""
    case = _QUOTIENT_CASES[group_label]
    ring = ring_q(*case["vars"])
    F = Ideal(curve_equations(ring, case["affine"]), ring=ring)
    gb = buchberger(F.generators, ring.lex_order())
    invariants = {n: ring.parse(s) for n, s in zip(case["names"], case["invariants"])}
    q = catalog_quotient(group_label)
    for g in q.generators:
        pulled = g.substitute({n: invariants[n] for n in q.ring.names})
        if not normal_form(pulled, list(gb), ring.lex_order()).is_zero():
            return False
    return True


# -- coordinate-change verification ---------------------------------------------


@dataclass(frozen=True)
class MapVerdict:
    name: str
    holds: bool
    residuals: tuple

    def __bool__(self):
        return self.holds


def verify_model_map(src_polys, dst_polys, vmap: VariableMap, name: str = "map") -> MapVerdict:
    """Substitute the map into dst's equations and test membership in <src>.

    The map sends destination variables to rational functions of the source
    variables; denominators are cleared before the membership test, and any
    nonzero residual is returned in the verdict.
    """
    src_ring = src_polys[0].ring
    gb = buchberger(src_polys, src_ring.lex_order())
    residuals = []
    for eq in dst_polys:
        num, _den = eq.substitute_rational(vmap.pairs())
        if num.ring != src_ring:
            num = num.map_into(src_ring)
        r = normal_form(num, list(gb), src_ring.lex_order())
        if not r.is_zero():
            residuals.append(r)
    return MapVerdict(name, not residuals, tuple(residuals))


def model_map_suite():
    """All stored coordinate-change claims, each as a named verdict.

    The published isomorphism from the order-2 quotient to the order-4 one is
    checked twice: once with the printed constant (a typo, recorded as a
    failing verdict) and once with the constant fitted from the standard
    Weierstrass change of variables, which must hold.
    """
    out = []

    # (1,2)-quotient ideal implies the plane cubic obtained by substitution
    rabc = ring_q("a", "b", "c")
    g2 = [rabc.parse("a^3-3ac+2bc+2b-2"), rabc.parse("b^2+c+1")]
    cubic_abc = rabc.parse("a^3+3ab^2+3a-2b^3-2")
    out.append(
        verify_model_map(g2, [cubic_abc], VariableMap({}), name="g2_12_defines_cubic")
    )

    # homogenized cubic maps onto the long model of the order-2 quotient
    rabw = ring_q("a", "b", "w")
    cubic_h = rabw.parse("a^3+3ab^2+3aw^2-2b^3-2w^3")
    zden = rabw.parse("-a+b+w")
    c12 = defining_polys(catalog("C12"))
    out.append(
        verify_model_map(
            [cubic_h],
            c12,
            VariableMap(
                {
                    "x": (rabw.parse("3a"), zden),
                    "y": (rabw.parse("9b"), zden),
                }
            ),
            name="cubic_to_C12",
        )
    )

    # printed isomorphism constant vs the fitted one
    rxy = ring_q("x", "y")
    c12_eq = defining_polys(catalog("C12"))
    c1234_eq = defining_polys(catalog("C1234"))
    printed_map = VariableMap(
        {
            "x": rxy.parse("1024x-1152"),
            "y": rxy.parse("32768y-2580481"),
        }
    )
    out.append(
        verify_model_map(c12_eq, c1234_eq, printed_map, name="th1_printed_constant")
    )
    fitted_map = VariableMap(
        {
            "x": rxy.parse("1024x-1152"),
            "y": rxy.parse("32768y-258048"),
        }
    )
    out.append(verify_model_map(c12_eq, c1234_eq, fitted_map, name="th1_fitted"))

    # genus-2 quotient relation maps onto the hyperelliptic model: the printed
    # affine-linear change cannot hold (y must pick up the cubic denominator);
    # the corrected map is the Moebius x = -2/(a-1) with the matching y
    rad = ring_q("a", "d")
    g123 = rad.parse("a^6+9a^4-8a^3+27a^2+24ad-48a+24d^2-24d+27")
    half = Fraction(1, 2)
    out.append(
        verify_model_map(
            [g123],
            defining_polys(catalog("C123")),
            VariableMap(
                {"x": rad.parse("1-a") * half, "y": rad.parse("-a-3d") * half}
            ),
            name="g2_123_printed_change",
        )
    )
    den1 = rad.parse("a-1")
    out.append(
        verify_model_map(
            [g123],
            defining_polys(catalog("C123")),
            VariableMap(
                {
                    "x": (rad.parse("-2"), den1),
                    "y": (rad.parse("4a+12d"), den1**3),
                }
            ),
            name="g2_123_fitted_change",
        )
    )

    # hyperelliptic model onto its even-square completion
    c123_eq = defining_polys(catalog("C123"))
    out.append(
        verify_model_map(
            c123_eq,
            defining_polys(catalog("C123.weier")),
            VariableMap(
                {
                    "x": rxy.parse("-x"),
                    "y": rxy.parse("2y + x^3 + x^2"),
                }
            ),
            name="C123_to_weier",
        )
    )

    # identity sanity check
    out.append(
        verify_model_map(
            c12_eq,
            c12_eq,
            VariableMap({"x": rxy.gen("x"), "y": rxy.gen("y")}),
            name="identity_on_C12",
        )
    )
    return out


EXPECTED_MAP_FAILURES = {"th1_printed_constant", "g2_123_printed_change"}


# -- plane model and genus -------------------------------------------------------


def plane_model() -> PlaneAffine:
    """Eliminate z from the affine curve; normalized to primitive integers."""
    R = ring_q("z", "x", "y")
    elim = eliminate(
        Ideal([R.parse("z^2+x^2+y^2+1"), R.parse("z^3+x^3+y^3+1")], ring=R), ["x", "y"]
    )
    if len(elim.generators) != 1:
        raise ArithmeticError("plane model elimination did not yield one generator")
    f = elim.generators[0].primitive().map_into(ring_q("x", "y"))
    return PlaneAffine(f, label="planeC", genus=None)


@dataclass(frozen=True)
class GenusReport:
    genus: int
    degree: int
    singular_x_poly: UPoly | None
    n_singular: int
    n_nodes: int
    n_cusps: int


def _eval_in(poly: MultiPoly, values: dict, domain):
    acc = domain.zero
    for mono, c in poly.terms.items():
        t = domain.coerce(c)
        for i, e in enumerate(mono):
            if e:
                t = t * values[poly.ring.names[i]] ** e
        acc = acc + t
    return acc


def _check_no_singularities_at_infinity(f: MultiPoly):
    F = f.homogenize("z_inf")
    ring = F.ring
    fx, fy, fz = (F.derivative(v) for v in ("x", "y", "z_inf"))
    # chart y=1 on the line at infinity
    subs = {"y": ring.one, "z_inf": ring.zero}
    polys = [q.substitute(subs).to_upoly("x") for q in (F, fx, fy, fz)]
    g = polys[0]
    for q in polys[1:]:
        g = g.gcd(q)
    if g.degree > 0:
        raise ArithmeticError("singular points at infinity; genus formula not applied")
    # remaining point (1:0:0)
    pt = {"x": QQ.one, "y": QQ.zero, "z_inf": QQ.zero}
    if _eval_in(F, pt, QQ) == QQ.zero:
        grad = [_eval_in(q, pt, QQ) for q in (fx, fy, fz)]
        if all(v == QQ.zero for v in grad):
            raise ArithmeticError("singular point at (1:0:0)")


def genus_plane(plane: PlaneAffine) -> GenusReport:
    """Genus of an irreducible plane curve whose singularities are double points.

    Works when every affine singular point has multiplicity two and delta
    invariant one (an ordinary node, or a simple cusp whose cubic term misses
    the doubled tangent); anything worse raises.  The point count comes from
    the squarefree univariate polynomial carrying the singular x-coordinates.
    """
    f = plane.f
    ring = f.ring
    n = f.total_degree()
    arithmetic_genus = (n - 1) * (n - 2) // 2
    _check_no_singularities_at_infinity(f)
    fx, fy = f.derivative("x"), f.derivative("y")
    J = Ideal([f, fx, fy], ring=ring)
    order = ring.elimination_order(["x"], kind="lex")
    gb = list(buchberger(J.generators, order))
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return GenusReport(arithmetic_genus, n, None, 0, 0, 0)
    xonly = [g for g in gb if g.variables() <= {"x"}]
    if len(xonly) != 1:
        raise ArithmeticError("singular locus is not finite over x")
    graw = xonly[0].to_upoly("x")
    # the Jacobian ideal need not be radical (it is not at cusps); the
    # distinct singular x-coordinates are the roots of the squarefree part
    gpoly = (graw // graw.gcd(graw.derivative())).monic()
    gpoly = _primitive_upoly(gpoly)
    ylinear = [g for g in gb if g not in xonly and g.degree_in("y") == 1]
    if not ylinear:
        raise ArithmeticError("no linear y-resolution of the singular points")
    # y*c(x) + d(x) with c invertible modulo gpoly
    res = ylinear[0]
    cpart = ring.zero
    dpart = ring.zero
    for mono, coef in res.terms.items():
        iy = ring.index["y"]
        if mono[iy] == 1:
            new = list(mono)
            new[iy] = 0
            cpart = cpart + ring.poly({tuple(new): coef})
        elif mono[iy] == 0:
            dpart = dpart + ring.poly({mono: coef})
        else:
            raise ArithmeticError("unexpected y-degree in the singular resolution")
    K = _quotient_by(gpoly)
    cK = K.from_upoly(cpart.to_upoly("x"))
    dK = K.from_upoly(dpart.to_upoly("x"))
    if not K.is_unit(cK):
        raise ArithmeticError("singular fibers are not single-valued over x")
    t = K.gen
    b = -dK / cK
    values = {"x": t, "y": b}
    # second-order Taylor data
    alpha = K.coerce(Fraction(1, 2)) * _eval_in(f.derivative("x").derivative("x"), values, K)
    beta = _eval_in(f.derivative("x").derivative("y"), values, K)
    gamma = K.coerce(Fraction(1, 2)) * _eval_in(f.derivative("y").derivative("y"), values, K)
    taylor2 = _gcd_with_modulus(K, [alpha, beta, gamma])
    if taylor2.degree != 0:
        raise ArithmeticError("a singular point has multiplicity above two")
    disc = beta * beta - K.from_int(4) * alpha * gamma
    cusp_part = _gcd_with_modulus(K, [disc])
    n_points = gpoly.degree
    n_cusps = cusp_part.degree
    n_nodes = n_points - n_cusps
    if n_cusps:
        Kc = _quotient_by(cusp_part) if n_cusps != gpoly.degree else K
        proj = (lambda e: Kc.from_upoly(e.lift())) if Kc is not K else (lambda e: e)
        a_c, b_c = proj(alpha), proj(beta)
        tangent = _gcd_with_modulus(Kc, [b_c, Kc.from_int(2) * a_c])
        if tangent.degree != 0:
            raise ArithmeticError("degenerate doubled tangent; formula not applied")
        v = (b_c, Kc.from_int(-2) * a_c)
        tv = proj(K.gen) if Kc is not K else K.gen
        bv = proj(b)
        vals = {"x": tv, "y": bv}
        c30 = Kc.coerce(Fraction(1, 6)) * _eval_in(
            f.derivative("x").derivative("x").derivative("x"), vals, Kc
        )
        c21 = Kc.coerce(Fraction(1, 2)) * _eval_in(
            f.derivative("x").derivative("x").derivative("y"), vals, Kc
        )
        c12 = Kc.coerce(Fraction(1, 2)) * _eval_in(
            f.derivative("x").derivative("y").derivative("y"), vals, Kc
        )
        c03 = Kc.coerce(Fraction(1, 6)) * _eval_in(
            f.derivative("y").derivative("y").derivative("y"), vals, Kc
        )
        f3v = (
            c30 * v[0] ** 3
            + c21 * v[0] ** 2 * v[1]
            + c12 * v[0] * v[1] ** 2
            + c03 * v[1] ** 3
        )
        if _gcd_with_modulus(Kc, [f3v]).degree != 0:
            raise ArithmeticError("cusp worse than a simple one; formula not applied")
    genus = arithmetic_genus - n_points
    return GenusReport(genus, n, gpoly, n_points, n_nodes, n_cusps)


def _primitive_upoly(p: UPoly) -> UPoly:
    """Rescale to integer coefficients with content one and positive lead."""
    from math import gcd, lcm

    if p.is_zero():
        return p
    denom = lcm(*(Fraction(c).denominator for c in p.coeffs))
    nums = [int(Fraction(c) * denom) for c in p.coeffs]
    g = 0
    for v in nums:
        g = gcd(g, abs(v))
    if nums[-1] < 0:
        g = -g
    return UPoly(QQ, [Fraction(v, g) for v in nums])


def _quotient_by(gpoly: UPoly):
    from .quotring import QuotientRing

    return QuotientRing(QQ, gpoly, gen_name="t")


def _gcd_with_modulus(K, elements) -> UPoly:
    """gcd of the lifts with the modulus: the locus where all elements vanish."""
    g = K.modulus
    for e in elements:
        g = g.gcd(e.lift())
        if g.degree == 0:
            return g
    return g


# -- nonsingularity and good reduction -------------------------------------------


def smoothness_check(p: int | None = None) -> bool:
    """Verify the curve is nonsingular over the given base.

    ``p=None`` checks over the rationals (hence over their closure); a prime
    p >= 5 checks good reduction mod p.  Each of the four affine charts must
    make the ideal of the equations plus all 2x2 Jacobian minors the unit
    ideal.
    """
    if p is not None:
        if p in (2, 3):
            raise ValueError("bad reduction excluded by hypothesis p >= 5")
        field = GF(p)
    else:
        field = QQ
    Rq = ring_q("x", "y", "z", "w")
    F1 = Rq.parse("x^2+y^2+z^2+w^2")
    F2 = Rq.parse("x^3+y^3+z^3+w^3")
    names = ("x", "y", "z", "w")
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            mi = F1.derivative(names[i]) * F2.derivative(names[j]) - F1.derivative(
                names[j]
            ) * F2.derivative(names[i])
            minors.append(mi)
    ring = Rq if field == QQ else Rq.change_field(field)
    polys = [F1, F2, *minors]
    if field != QQ:
        polys = [q.map_coefficients(ring) for q in polys]
    for chart in names:
        sub = {chart: ring.one}
        chart_polys = [q.substitute(sub) for q in polys]
        target = chart_polys[0].ring
        gb = buchberger([q for q in chart_polys if not q.is_zero()], target.lex_order())
        if not gb.contains_one():
            return False
    return True
