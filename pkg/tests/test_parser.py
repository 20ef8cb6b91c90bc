from fractions import Fraction

import pytest

from crjets.parser import ParseError, parse_constant, parse_polynomial
from crjets.scalars import GQ, I


def coeffs(text, n=1, d=1):
    return parse_polynomial(text, n, d).coeffs


def test_literals_and_variables():
    assert coeffs("3") == {(0, 0, 0): GQ(3)}
    assert coeffs("3/4") == {(0, 0, 0): GQ(Fraction(3, 4))}
    assert coeffs("z1") == {(1, 0, 0): GQ(1)}
    assert coeffs("zb1") == {(0, 1, 0): GQ(1)}
    assert coeffs("s1") == {(0, 0, 1): GQ(1)}
    assert coeffs("i") == {(0, 0, 0): I}


def test_arithmetic():
    assert coeffs("z1*zb1") == {(1, 1, 0): GQ(1)}
    assert coeffs("2*z1*zb1 - z1*zb1") == {(1, 1, 0): GQ(1)}
    assert coeffs("z1^3*zb1") == {(3, 1, 0): GQ(1)}
    assert coeffs("(z1 + zb1)^2") == {(2, 0, 0): GQ(1), (1, 1, 0): GQ(2),
                                      (0, 2, 0): GQ(1)}
    assert coeffs("z1/2") == {(1, 0, 0): GQ(Fraction(1, 2))}


def test_unicode_minus_and_juxtaposition():
    assert coeffs("−z1*zb1") == {(1, 1, 0): GQ(-1)}
    assert coeffs("2 z1 zb1") == {(1, 1, 0): GQ(2)}
    assert coeffs("2i*z1*zb1") == {(1, 1, 0): GQ(0, 2)}


def test_re_im_conj():
    assert coeffs("conj(z1)") == {(0, 1, 0): GQ(1)}
    assert coeffs("conj(i*z1)") == {(0, 1, 0): -I}
    assert coeffs("2*Re(z1^3*zb1)") == {(3, 1, 0): GQ(1), (1, 3, 0): GQ(1)}
    assert coeffs("Im(z1)") == \
        {(1, 0, 0): GQ(0, Fraction(-1, 2)), (0, 1, 0): GQ(0, Fraction(1, 2))}


def test_unary_minus_binding():
    assert coeffs("-z1^2") == {(2, 0, 0): GQ(-1)}
    assert coeffs("3 - -2") == {(0, 0, 0): GQ(5)}


def test_errors_are_positioned():
    with pytest.raises(ParseError):
        parse_polynomial("z1 +", 1, 1)
    with pytest.raises(ParseError):
        parse_polynomial("z2", 1, 1)
    with pytest.raises(ParseError):
        parse_polynomial("q1", 1, 1)
    with pytest.raises(ParseError) as err:
        parse_polynomial("z1 $ zb1", 1, 1)
    assert err.value.pos == 3
    with pytest.raises(ParseError):
        parse_polynomial("1/0", 1, 1)
    with pytest.raises(ParseError):
        parse_polynomial("(z1", 1, 1)


def test_untruncated_output():
    series = parse_polynomial("z1^5*zb1^5", 1, 1)
    assert series.order is None
    assert series.coeff((5, 5, 0)) == GQ(1)


def test_parse_constant():
    assert parse_constant("1/2 + 1/3*i") == GQ(Fraction(1, 2), Fraction(1, 3))
    assert parse_constant("-2") == GQ(-2)
    assert parse_constant("(1/2-1/4*i)") == GQ(Fraction(1, 2),
                                               Fraction(-1, 4))
    with pytest.raises(ParseError):
        parse_constant("z1")


def test_roundtrip_through_render():
    from crjets.report import format_gq
    for c in (GQ(3), GQ(Fraction(-1, 2)), GQ(0, 1), GQ(0, -1),
              GQ(Fraction(2, 7), Fraction(-3, 5))):
        assert parse_constant(format_gq(c)) == c
