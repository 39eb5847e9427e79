from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath
import pytest

import zetaforms


def test_base_case_coefficients():
    form = zetaforms.q_coefficients(0, 68)
    assert form["q0"] == 0 and form["q0_hat"] == 0
    assert {j: v for j, v in form["q"].items() if v} == {69: Fraction(9112)}
    p = zetaforms.partial_fractions(0, 68)
    assert p[67] == [Fraction(2)]


def test_base_case_value_against_mpmath():
    mpmath.mp.prec = 300
    expected = 9112 * mpmath.zeta(69)
    got = zetaforms.S_direct(0, 68, "plain", 256)
    assert abs(mpmath.mpf(str(got)) - expected) < mpmath.mpf(2) ** -250 * expected


def test_routes_agree():
    with localcontext() as ctx:
        ctx.prec = 90
        for which in ("plain", "hat"):
            a = zetaforms.S_direct(2, 16, which, 256)
            b = zetaforms.S_via_zeta(2, 16, which, 256)
            assert abs(a - b) <= abs(a) * Decimal(2) ** -240


def test_elimination_drops_the_chosen_zeta():
    e = zetaforms.eliminate(2, 68, 5)
    assert 5 not in e["c"]


def test_constants():
    assert abs(zetaforms.delta(128) - Decimal("1.29564")) < Decimal("1e-4")
    assert abs(zetaforms.kappa(68, 128) - Decimal("66.1727")) < Decimal("1e-3")
    assert abs(zetaforms.final_exponent(128) + Decimal("0.0597")) < Decimal("1e-3")
    re, im = zetaforms.predict_S(10, 68, "plain", 128)
    assert re != 0 and abs(im) < abs(re)


def test_contour_matches_series():
    r = zetaforms.contour_S(2, 16, "plain", "3/4", 1e-20, 128)
    re, im = r["value"]
    series = zetaforms.S_direct(2, 16, "plain", 128)
    assert abs(re - series) <= abs(series) * Decimal("1e-18")
    assert abs(im) <= abs(re) * Decimal("1e-15")


def test_arithmetic():
    d = zetaforms.phi(30)
    assert d["d_n"] == 2329089562800
    assert zetaforms.rho0(Fraction(1, 2)) == zetaforms.rho0("1/2")


def test_errors_map_to_python_exceptions():
    with pytest.raises(zetaforms.PreconditionError):
        zetaforms.partial_fractions(1, 14)
    with pytest.raises(ValueError):
        zetaforms.S_direct(2, 16, "neither", 128)
    with pytest.raises(ValueError):
        zetaforms.q_coefficients(3, 68)
