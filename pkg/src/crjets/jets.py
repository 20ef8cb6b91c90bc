"""Jets of defining functions on generic submanifolds ``Im w = phi``.

A ``Jet`` is a truncated polynomial in the ``2n + d`` formal variables

    ``z_1 .. z_n,  zb_1 .. zb_n,  s_1 .. s_d``

where the ``zb`` block holds the conjugate variables and ``s`` the real
transverse directions.  Coefficients are exact (``GQ`` or ``DualGQ``).
Realness of a jet means ``coeff(alpha, beta, gamma) ==
conj(coeff(beta, alpha, gamma))`` for every stored key.

A ``DefiningJet`` is a d-tuple of real jets sharing one ``Dimensions``,
the graph datum ``Im w = phi(z, zbar, Re w)`` through the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .linalg import invert_matrix
from .scalars import I, ONE, ZERO, conj
from .series import Series


@dataclass(frozen=True)
class Dimensions:
    """CR dimension ``n``, codimension ``d`` and truncation order ``k``."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        if self.k < 1:
            raise ValueError("truncation order must be >= 1")

    @property
    def N(self):
        return self.n + self.d

    @property
    def m(self):
        return 2 * self.n + self.d

    def key(self, alpha, beta, gamma):
        """Flatten an (alpha, beta, gamma) multi-index into a series key."""
        alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
        if len(alpha) != self.n or len(beta) != self.n or len(gamma) != self.d:
            raise ValueError("multi-index arity mismatch")
        return alpha + beta + gamma


class Jet:
    """A truncated polynomial in (z, zbar, s) with exact coefficients."""

    __slots__ = ("dims", "series")

    def __init__(self, dims, series):
        if series.nvars != dims.m:
            raise ValueError("series has %d variables, expected %d"
                             % (series.nvars, dims.m))
        self.dims = dims
        self.series = series

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, dims, order=None):
        return cls(dims, Series.zero(dims.m, dims.k if order is None else order))

    @classmethod
    def from_coeffs(cls, dims, table, order=None):
        """Build from a mapping (alpha, beta, gamma) -> coefficient."""
        flat = {dims.key(*key): c for key, c in table.items()}
        return cls(dims, Series(dims.m, dims.k if order is None else order, flat))

    # -- structure ------------------------------------------------------

    @property
    def order(self):
        return self.series.order

    def split_key(self, key):
        n, d = self.dims.n, self.dims.d
        return key[:n], key[n:2 * n], key[2 * n:]

    def coeff(self, alpha, beta, gamma):
        return self.series.coeff(self.dims.key(alpha, beta, gamma))

    def items(self):
        for key, c in self.series.coeffs.items():
            yield self.split_key(key), c

    def is_zero(self):
        return self.series.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.dims == other.dims and self.series == other.series

    def __hash__(self):
        return hash((self.dims, self.series))

    # -- arithmetic -----------------------------------------------------

    def _wrap(self, series):
        return Jet(self.dims, series)

    def __add__(self, other):
        if isinstance(other, Jet):
            if other.dims != self.dims:
                raise ValueError("dimension mismatch")
            return self._wrap(self.series + other.series)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Jet):
            if other.dims != self.dims:
                raise ValueError("dimension mismatch")
            return self._wrap(self.series - other.series)
        return NotImplemented

    def __neg__(self):
        return self._wrap(-self.series)

    def __mul__(self, other):
        if isinstance(other, Jet):
            if other.dims != self.dims:
                raise ValueError("dimension mismatch")
            return self._wrap(self.series * other.series)
        return self._wrap(self.series * other)  # scalar

    __rmul__ = __mul__

    def truncate(self, order):
        return self._wrap(self.series.truncate(order))

    def conjugate(self):
        """Conjugate coefficients and swap the z and zbar blocks."""
        n = self.dims.n
        perm = list(range(self.dims.m))
        for j in range(n):
            perm[j], perm[n + j] = n + j, j
        swapped = self.series.permute_vars(perm)
        return self._wrap(swapped.map_coeffs(conj))

    def is_real(self):
        return self.series == self.conjugate().series

    def derive_z(self, j):
        return self._wrap(self.series.derive(j))

    def derive_zb(self, j):
        return self._wrap(self.series.derive(self.dims.n + j))

    def derive_s(self, c):
        return self._wrap(self.series.derive(2 * self.dims.n + c))

    def derivative_at_zero(self, alpha, beta, gamma):
        """Exact mixed derivative at the origin (coefficient times factorials)."""
        c = self.coeff(alpha, beta, gamma)
        scale = 1
        for e in tuple(alpha) + tuple(beta) + tuple(gamma):
            scale *= factorial(e)
        return c * scale

    # -- harmonic structure --------------------------------------------

    def is_nonharmonic(self):
        """Every stored monomial has both a z and a zbar factor."""
        for (alpha, beta, _), _c in self.items():
            if not any(alpha) or not any(beta):
                return False
        return True

    def split_harmonic(self):
        """Split into (harmonic, nonharmonic) parts, exactly additive.

        Monomials with ``alpha == 0`` or ``beta == 0`` are harmonic (this
        includes pure-s monomials); those with both blocks nonzero are
        nonharmonic.
        """
        harm, nonharm = {}, {}
        for key, c in self.series.coeffs.items():
            alpha, beta, _ = self.split_key(key)
            (nonharm if any(alpha) and any(beta) else harm)[key] = c
        wrap = lambda t: self._wrap(Series(self.dims.m, self.order, t))
        return wrap(harm), wrap(nonharm)

    def __repr__(self):
        return "Jet(n=%d,d=%d,%r)" % (self.dims.n, self.dims.d, self.series)


class DefiningJet:
    """d-tuple of real jets defining the graph ``Im w = phi`` at 0."""

    __slots__ = ("dims", "components")

    def __init__(self, dims, components, check=True):
        components = tuple(components)
        if len(components) != dims.d:
            raise ValueError("expected %d components, got %d"
                             % (dims.d, len(components)))
        if check:
            for c in components:
                if c.dims.n != dims.n or c.dims.d != dims.d:
                    raise ValueError("component dimensions mismatch")
                if c.series.constant_term():
                    raise ValueError("defining jet must vanish at the origin")
                if not c.is_real():
                    raise ValueError("defining jet component is not real")
        self.dims = dims
        self.components = components

    @classmethod
    def zero(cls, dims):
        return cls(dims, [Jet.zero(dims) for _ in range(dims.d)], check=False)

    def __eq__(self, other):
        if not isinstance(other, DefiningJet):
            return NotImplemented
        return self.dims == other.dims and self.components == other.components

    def truncate(self, order):
        return DefiningJet(self.dims, [c.truncate(order) for c in self.components],
                           check=False)

    def is_nonharmonic(self):
        return all(c.is_nonharmonic() for c in self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def phi_s0(self):
        """The d x d matrix of first s-derivatives at the origin."""
        d, n = self.dims.d, self.dims.n
        unit = lambda c: tuple(1 if e == c else 0 for e in range(d))
        zero_n = (0,) * n
        return [[self.components[row].coeff(zero_n, zero_n, unit(col))
                 for col in range(d)] for row in range(d)]

    def graph_matrix(self, sign=1):
        """The matrix ``id + sign*i*phi_s(0)`` of the graph condition."""
        d = self.dims.d
        p = self.phi_s0()
        si = I if sign > 0 else -I
        return [[(ONE if r == c else ZERO) + si * p[r][c] for c in range(d)]
                for r in range(d)]

    def chart_invertible(self):
        """Whether ``id + i*phi_s(0)`` is invertible (graph condition)."""
        try:
            invert_matrix(self.graph_matrix())
        except ValueError:
            return False
        return True

    def __repr__(self):
        return "DefiningJet(%r)" % (self.components,)


def multi_indices(nvars, min_deg, max_deg):
    """All exponent tuples with total degree in [min_deg, max_deg],
    graded lexicographic order."""
    out = []
    for deg in range(min_deg, max_deg + 1):
        out.extend(_compositions(deg, nvars))
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
