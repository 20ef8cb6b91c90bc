"""Exact scalar arithmetic.

Two coefficient rings are provided:

* ``GQ`` -- Gaussian rationals a + b*i with ``Fraction`` parts.  All rank
  and vanishing decisions in the package are made over this ring, so there
  is no floating point anywhere.
* ``DualGQ`` -- first-order dual numbers over ``GQ`` carrying a fixed
  number of partial derivatives.  Used to push exact basepoint derivatives
  through the normalization pipeline.

Both rings implement the small protocol the series layer relies on:
``+ - *``, ``conj()``, ``is_unit()``, ``inv()``, truthiness as a zero test,
and promotion from ``int``/``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction


class GQ:
    """Gaussian rational ``re + im*i``, always exact and normalized."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, GQ):
            return x
        if isinstance(x, (int, Fraction)):
            return GQ(x)
        return None

    def __add__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return GQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return GQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return GQ(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return GQ(self.re * o.re - self.im * o.im,
                  self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = GQ._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conj(self):
        return GQ(self.re, -self.im)

    def is_unit(self):
        return bool(self)

    def inv(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        den = self.re * self.re + self.im * self.im
        return GQ(self.re / den, -self.im / den)

    def is_real(self):
        return not self.im

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im
        sign = "+" if self.im > 0 else "-"
        return "(%s%s%s*i)" % (self.re, sign, abs(self.im))


ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)
HALF = GQ(Fraction(1, 2))


class DualGQ:
    """``GQ`` value plus a fixed-length tuple of exact partial derivatives.

    Forms a local ring: elements with nonzero value part are units.  The
    gradient length is fixed per computation (number of perturbation
    directions); mixing lengths is an error.
    """

    __slots__ = ("val", "grad")

    def __init__(self, val, grad):
        self.val = val if isinstance(val, GQ) else GQ(val)
        self.grad = tuple(grad)

    @classmethod
    def lift(cls, x, npartials):
        """Promote a plain scalar to a dual number with zero gradient."""
        g = GQ._coerce(x)
        if g is None:
            raise TypeError("cannot lift %r" % (x,))
        return cls(g, (ZERO,) * npartials)

    def _coerce(self, x):
        if isinstance(x, DualGQ):
            if len(x.grad) != len(self.grad):
                raise ValueError("gradient length mismatch")
            return x
        g = GQ._coerce(x)
        if g is None:
            return None
        return DualGQ(g, (ZERO,) * len(self.grad))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualGQ(self.val + o.val,
                      tuple(a + b for a, b in zip(self.grad, o.grad)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualGQ(self.val - o.val,
                      tuple(a - b for a, b in zip(self.grad, o.grad)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualGQ(self.val * o.val,
                      tuple(self.val * gb + ga * o.val
                            for ga, gb in zip(self.grad, o.grad)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __neg__(self):
        return DualGQ(-self.val, tuple(-g for g in self.grad))

    def __bool__(self):
        return bool(self.val) or any(self.grad)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.val == o.val and self.grad == o.grad

    def __hash__(self):
        return hash((self.val, self.grad))

    def conj(self):
        return DualGQ(self.val.conj(), tuple(g.conj() for g in self.grad))

    def is_unit(self):
        return bool(self.val)

    def inv(self):
        v = self.val.inv()
        return DualGQ(v, tuple(-(v * g * v) for g in self.grad))

    def __repr__(self):
        return "DualGQ(%r, %r)" % (self.val, self.grad)


def conj(x):
    """Conjugate usable on ints, Fractions, GQ and DualGQ alike."""
    return x.conj() if hasattr(x, "conj") else x


def is_unit(x):
    """Unit test usable on ints, Fractions, GQ and DualGQ alike."""
    if isinstance(x, (GQ, DualGQ)):
        return x.is_unit()
    return bool(x)


def parse_gq(text):
    """Parse a complex rational constant like ``-3/4+1/2*i`` into ``GQ``."""
    from .parser import parse_constant
    return parse_constant(text)
