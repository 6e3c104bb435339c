"""Exact computer algebra for the quadric-cubic intersection curve in P^3.

The package reconstructs, from first principles, the quotient curves of
x^2+y^2+z^2+w^2 = 0, x^3+y^3+z^3+w^3 = 0 under coordinate permutations, the
genus and smoothness facts, point counts and L-polynomials of the curve and
its quotients over prime fields, Igusa invariants of the genus-2 quotient,
and the quadratic-splitting (Richelot) identities behind its split Jacobian.
"""

__version__ = "0.1.0"

from .counting import count_elliptic, count_hyperelliptic, count_intersection, kernel_name
from .models import catalog
from .zeta import (
    LPolynomial,
    hws_defect,
    lpoly_from_counts,
    p_rank,
    quotient_lpolys,
    verify_product_theorem,
    verify_split,
    zeta_report,
)

__all__ = [
    "catalog",
    "count_elliptic",
    "count_hyperelliptic",
    "count_intersection",
    "kernel_name",
    "LPolynomial",
    "lpoly_from_counts",
    "p_rank",
    "hws_defect",
    "quotient_lpolys",
    "verify_product_theorem",
    "verify_split",
    "zeta_report",
    "__version__",
]
