"""Truncated multivariate polynomial arithmetic over an exact scalar ring.

A ``Series`` is a finite coefficient table indexed by exponent tuples,
truncated by total degree with unit weights.  ``order=None`` means an
untruncated polynomial (used for globally defined defining functions that
get recentred before analysis).

The layer is deliberately coefficient-ring agnostic: anything satisfying
the protocol in :mod:`crjets.scalars` works, in particular both ``GQ`` and
``DualGQ``.
"""

from __future__ import annotations

from .linalg import invert_matrix


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars, order, coeffs=None):
        self.nvars = nvars
        self.order = order
        table = {}
        if coeffs:
            for key, c in coeffs.items():
                if not c:
                    continue
                if order is not None and sum(key) > order:
                    continue
                table[key] = c
        self.coeffs = table

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars, order):
        return cls(nvars, order)

    @classmethod
    def constant(cls, nvars, order, c):
        return cls(nvars, order, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, order, i, scale=1):
        key = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, order, {key: scale})

    # -- basic queries --------------------------------------------------

    def coeff(self, key):
        return self.coeffs.get(tuple(key), 0)

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, 0)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Largest total degree with a stored coefficient (-1 if zero)."""
        return max((sum(k) for k in self.coeffs), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    # -- ring operations ------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch: %d vs %d"
                             % (self.nvars, other.nvars))

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        table = dict(self.coeffs)
        for key, c in other.coeffs.items():
            table[key] = table[key] + c if key in table else c
        return Series(self.nvars, _min_order(self.order, other.order), table)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Series(self.nvars, self.order,
                      {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Series):
            # scalar
            return Series(self.nvars, self.order,
                          {k: c * other for k, c in self.coeffs.items()})
        self._check(other)
        order = _min_order(self.order, other.order)
        table = {}
        for ka, ca in self.coeffs.items():
            da = sum(ka)
            for kb, cb in other.coeffs.items():
                if order is not None and da + sum(kb) > order:
                    continue
                key = tuple(a + b for a, b in zip(ka, kb))
                prod = ca * cb
                table[key] = table[key] + prod if key in table else prod
        return Series(self.nvars, order, table)

    def __rmul__(self, other):
        return self.__mul__(other)

    def truncate(self, order):
        return Series(self.nvars, order, self.coeffs)

    def map_coeffs(self, fn):
        return Series(self.nvars, self.order,
                      {k: fn(c) for k, c in self.coeffs.items()})

    def derive(self, i):
        table = {}
        for key, c in self.coeffs.items():
            e = key[i]
            if e == 0:
                continue
            nk = key[:i] + (e - 1,) + key[i + 1:]
            term = c * e
            table[nk] = table[nk] + term if nk in table else term
        order = None if self.order is None else self.order - 1
        return Series(self.nvars, max(order, 0) if order is not None else None,
                      table)

    def homogeneous_part(self, deg):
        return Series(self.nvars, self.order,
                      {k: c for k, c in self.coeffs.items() if sum(k) == deg})

    def permute_vars(self, perm):
        """Relabel variable ``i`` as ``perm[i]``."""
        table = {}
        for key, c in self.coeffs.items():
            nk = [0] * self.nvars
            for i, e in enumerate(key):
                nk[perm[i]] = e
            table[tuple(nk)] = c
        return Series(self.nvars, self.order, table)

    def embed(self, new_nvars, var_map):
        """Move into a larger variable space; ``var_map[i]`` is the new index."""
        table = {}
        for key, c in self.coeffs.items():
            nk = [0] * new_nvars
            for i, e in enumerate(key):
                nk[var_map[i]] += e
            table[tuple(nk)] = c
        return Series(new_nvars, self.order, table)

    # -- composition and evaluation ------------------------------------

    def compose(self, inner):
        """Substitute ``inner[i]`` for variable ``i``, truncating by order.

        Every inner series must share a variable space; inner constant
        terms must vanish so truncation commutes with substitution (the
        only exception is a variable that the outer series never uses).
        """
        if len(inner) != self.nvars:
            raise ValueError("expected %d inner series, got %d"
                             % (self.nvars, len(inner)))
        if not inner:
            raise ValueError("compose needs at least one variable")
        nv = inner[0].nvars
        order = self.order
        for i, g in enumerate(inner):
            if g.nvars != nv:
                raise ValueError("inner series variable counts differ")
            order = _min_order(order, g.order)
            if g.constant_term() and any(k[i] for k in self.coeffs):
                raise ValueError("inner series %d has nonzero constant term"
                                 % i)
        result = Series.zero(nv, order)
        powers = [{0: None} for _ in inner]  # lazily filled per exponent

        def power(i, e):
            cache = powers[i]
            if e in cache and cache[e] is not None:
                return cache[e]
            if e == 1:
                p = inner[i].truncate(order) if order is not None else inner[i]
            else:
                p = power(i, e - 1) * inner[i]
            cache[e] = p
            return p

        for key, c in self.coeffs.items():
            term = None
            for i, e in enumerate(key):
                if e == 0:
                    continue
                p = power(i, e)
                term = p if term is None else term * p
            if term is None:
                term = Series.constant(nv, order, c)
            else:
                term = term * c
            result = result + term
        return result

    def eval(self, point):
        """Exact evaluation at a tuple of scalars (polynomial semantics)."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        total = 0
        for key, c in self.coeffs.items():
            term = c
            for x, e in zip(point, key):
                for _ in range(e):
                    term = term * x
            total = term + total
        return total

    def shift(self, offsets):
        """Substitute ``x_i -> x_i + offsets[i]`` exactly (binomial shift).

        Total degree never grows, so the truncation order is kept.
        """
        from math import comb
        result = self
        for i, a in enumerate(offsets):
            if not a:
                continue
            table = {}
            for key, c in result.coeffs.items():
                e = key[i]
                apow = 1
                for j in range(e, -1, -1):
                    # coefficient of x_i^j: C(e, j) * a^(e-j)
                    nk = key[:i] + (j,) + key[i + 1:]
                    term = c * (comb(e, j) * apow)
                    table[nk] = table[nk] + term if nk in table else term
                    apow = apow * a
            result = Series(result.nvars, result.order, table)
        return result

    def __repr__(self):
        if not self.coeffs:
            return "Series(0)"
        parts = []
        for key in sorted(self.coeffs, key=lambda k: (sum(k), k)):
            mono = "*".join("x%d^%d" % (i, e) if e > 1 else "x%d" % i
                            for i, e in enumerate(key) if e)
            c = repr(self.coeffs[key])
            parts.append(c if not mono else "%s*%s" % (c, mono))
        return "Series(%s)" % " + ".join(parts)


def identity_tuple(nvars, order):
    return [Series.variable(nvars, order, i) for i in range(nvars)]


def implicit_solve(F, nu, order):
    """Solve ``F(u, v(u)) = 0`` for ``v`` with ``v(0) = 0``, degree by degree.

    ``F`` is a tuple of series in ``nu + nv`` variables (u first) with zero
    constant terms and invertible linear block dF/dv(0).  Each degree layer
    is obtained by applying the inverse of that constant block to the
    current residual (graded Newton; one linear solve shared by all layers).
    """
    nv = len(F)
    for f in F:
        if f.nvars != nu + nv:
            raise ValueError("F component has %d variables, expected %d"
                             % (f.nvars, nu + nv))
        if f.constant_term():
            raise ValueError("F(0,0) != 0")
    jac = [[f.coeff(tuple(1 if t == nu + j else 0 for t in range(nu + nv)))
            for j in range(nv)] for f in F]
    jinv = invert_matrix(jac)  # raises on singular block
    v = [Series.zero(nu, order) for _ in range(nv)]
    u_ident = identity_tuple(nu, order)
    for deg in range(1, order + 1):
        residual = [f.compose(u_ident + v) for f in F]
        layers = [r.homogeneous_part(deg) for r in residual]
        if all(l.is_zero() for l in layers):
            continue
        for j in range(nv):
            delta = Series.zero(nu, order)
            for i in range(nv):
                if not layers[i].is_zero():
                    delta = delta + layers[i] * jinv[j][i]
            v[j] = v[j] - delta
    return v


def invert_map(g, order):
    """Inverse of a formal map ``g: R^m -> R^m`` with zero constant term.

    Returns ``h`` with ``g(h(u)) = u`` (hence also ``h(g(u)) = u``)
    through the given order.  Raises ``ValueError`` if the linear part is
    singular.
    """
    m = len(g)
    # F(u, v) := g(v) - u over variables (u_1..u_m, v_1..v_m)
    vmap = list(range(m, 2 * m))
    F = []
    for i in range(m):
        gi = g[i].embed(2 * m, vmap)
        F.append(gi - Series.variable(2 * m, g[i].order, i))
    return implicit_solve(F, m, order)
