"""The model catalog: exact source coefficients and label handling."""

from fractions import Fraction

import pytest

from quartica.models import catalog
from quartica.upoly import upoly_q


def test_catalog_weierstrass_model():
    m = catalog("C12.weier")
    assert (m.a1, m.a2, m.a3, m.a4, m.a6) == (0, 0, 0, -27, -378)


def test_catalog_split_factor_model():
    m = catalog("E2split")
    assert (m.a1, m.a2, m.a3, m.a4, m.a6) == (1, -1, 0, -6, 8)


def test_catalog_isogenous_sextic():
    m = catalog("Ctilde")
    assert m.sextic == upoly_q([2, 6, 15, 18, 15, 6, 2])


def test_catalog_long_model_fraction_coefficient():
    m = catalog("C12")
    assert m.a4 == Fraction(-27, 2)


def test_catalog_unknown_label_lists_labels():
    with pytest.raises(KeyError) as exc:
        catalog("nope")
    msg = str(exc.value)
    for label in ("C", "planeC", "C12", "C123", "Ctilde", "CmodS4", "E2split"):
        assert label in msg


def test_catalog_quotient_line():
    m = catalog("CmodS4")
    assert m.genus == 0
    names = {g.ring.names for g in m.generators}
    assert names == {("a", "b", "c", "d")}
    assert {repr(g) for g in m.generators} == {"b", "c"}
