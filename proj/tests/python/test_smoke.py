import pytest

import bwf2


def test_element_arithmetic():
    fam = bwf2.Family.f2()
    x = bwf2.Element(2, 1, 0)
    y = bwf2.Element(3, 4, 1)
    assert bwf2.multiply(x, y, fam) == bwf2.Element(4, 4, 1)
    assert x * y == bwf2.Element(4, 4, 1)
    assert str(bwf2.inverse(bwf2.Element(2, 5, 1))) == "(5,2,[1))"
    assert bwf2.is_idempotent(bwf2.Element(3, 3, 1))
    assert bwf2.natural_leq(bwf2.Element(1, 1, 0), bwf2.Element(0, 0, 0))
    assert bwf2.green_related(bwf2.Element(2, 3, 0), bwf2.Element(2, 5, 0), "R")
    assert not bwf2.green_related(bwf2.Element(2, 3, 0), bwf2.Element(2, 3, 1), "R")


def test_parse_format_round_trip():
    x = bwf2.parse_element("(2,5,[1))")
    assert (x.i, x.j, x.tail) == (2, 5, 1)
    assert bwf2.format_element(x) == "(2,5,[1))"
    with pytest.raises(ValueError):
        bwf2.parse_element("(1,2,[3))")


def test_families():
    assert bwf2.validate_family([0, 1])
    assert not bwf2.validate_family([0, 2])
    assert bwf2.family_closure_witness([0, 2]) == (0, 2, 1, 1)
    with pytest.raises(ValueError):
        bwf2.Family([0, 2])
    quotient = bwf2.Family([0, 1], includes_empty=True)
    z = bwf2.Element.zero()
    assert bwf2.multiply(z, bwf2.Element(1, 2, 0), quotient) == z


def test_endomorphisms():
    e = bwf2.parse_endo("alpha[2,1];w^3")
    assert e.kind == "alpha" and e.k == 2 and e.p == 1 and e.power == 3
    assert bwf2.apply(e, bwf2.Element(1, 2, 1)) == bwf2.Element(5, 7, 0)
    assert str(e) == "alpha[2,1] ; w^3"
    assert bwf2.parse_endo(str(e)) == e

    g = bwf2.compose(bwf2.EndoNormalForm.gamma(2), bwf2.EndoNormalForm.gamma(3))
    assert g == bwf2.EndoNormalForm.gamma(6)

    chi = bwf2.EndoNormalForm.chi(2, 1)
    assert chi.power == 5
    assert bwf2.apply(chi, bwf2.Element(7, 0, 0)) == bwf2.Element(2, 2, 1)

    flags = bwf2.predicates(bwf2.parse_endo("beta[3,2];w^4"))
    assert flags == {"injective": True, "annihilating": False, "monoidal": False}

    with pytest.raises(ValueError):
        bwf2.parse_endo("beta[2,0]")


def test_factor_from_python_callable():
    e = bwf2.parse_endo("delta[2];w^1")
    recovered = bwf2.factor(lambda x: bwf2.apply(e, x))
    assert recovered == e


def test_classify_window():
    e = bwf2.parse_endo("alpha[2,1]")
    m = bwf2.WindowMap(8, lambda x: bwf2.apply(e, x))
    assert bwf2.classify_window(m) == e
    assert len(m) == 2 * 9 * 9


def test_corner_membership():
    assert bwf2.corner_membership(0, 1, bwf2.Element(0, 0, 1))
    assert not bwf2.corner_membership(1, 1, bwf2.Element(0, 0, 1))
    assert bwf2.in_pi_power_image(bwf2.Element(0, 0, 1), 1)


def test_suite_is_clean():
    reports = bwf2.run_default_suite(element_window=3)
    assert len(reports) == 18
    for report in reports:
        assert report.ok(), report.law
