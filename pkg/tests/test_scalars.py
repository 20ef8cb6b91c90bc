from fractions import Fraction

import pytest

from crjets.scalars import GQ, I, ONE, ZERO, DualGQ, conj, is_unit


def test_field_axioms_spot():
    a = GQ(Fraction(2, 3), Fraction(-1, 5))
    b = GQ(Fraction(-7, 2), Fraction(1, 3))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * a.inv() == ONE
    assert -(-a) == a


def test_conjugation():
    a = GQ(Fraction(1, 2), Fraction(3, 4))
    assert a.conj().conj() == a
    assert (a * a.conj()).is_real()
    assert I * I == GQ(-1)
    assert conj(5) == 5
    assert conj(a) == a.conj()


def test_coercion_and_zero():
    assert GQ(2) + 1 == GQ(3)
    assert 2 * GQ(Fraction(1, 2)) == ONE
    assert not ZERO
    assert is_unit(GQ(1)) and not is_unit(ZERO)
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_dual_product_rule():
    x = DualGQ(GQ(3), (GQ(1), ZERO))
    y = DualGQ(GQ(5), (ZERO, GQ(1)))
    p = x * y
    assert p.val == GQ(15)
    assert p.grad == (GQ(5), GQ(3))


def test_dual_inverse():
    x = DualGQ(GQ(2), (GQ(1), GQ(3)))
    one = x * x.inv()
    assert one.val == ONE
    assert all(not g for g in one.grad)
    nilpotent = DualGQ(ZERO, (GQ(1),))
    assert nilpotent and not nilpotent.is_unit()


def test_dual_lift_and_conj():
    x = DualGQ.lift(GQ(0, 1), 2)
    assert x.val == I and x.grad == (ZERO, ZERO)
    y = DualGQ(I, (GQ(1, 1),))
    assert y.conj().val == -I
    assert y.conj().grad == (GQ(1, -1),)
