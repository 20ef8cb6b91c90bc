"""Independent vector-field oracle for the invariants.

Everything here recomputes the degeneracy, defect and finite-type data
straight from the original definitions: a truncated CR basis of (1,0)
fields on the graph, Lie brackets with exact jet coefficients, and span
dimensions of derivative/commutator values at the origin.  The matrix
path in :mod:`crjets.invariants` never feeds into these results, so exact
agreement of the two is a meaningful cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import invert_matrix, rank_exact
from .scalars import GQ, HALF, I, ZERO, conj
from .series import Series


class OrderExhausted(ValueError):
    """A bracket was requested below truncation order zero."""


class VectorFieldJet:
    """Vector field on M with jet coefficients in the (d/dz, d/dzbar, d/ds)
    basis; ``order`` is the degree through which the coefficients are
    trusted (each bracket costs one)."""

    __slots__ = ("dims", "order", "coeffs")

    def __init__(self, dims, order, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != dims.m:
            raise ValueError("expected %d coefficient jets" % dims.m)
        self.dims = dims
        self.order = order
        self.coeffs = coeffs

    def value_at_zero(self):
        return tuple(c.constant_term() or ZERO for c in self.coeffs)

    def apply(self, series):
        """Derivation applied to a function jet (one order is consumed)."""
        out = Series.zero(series.nvars, None)
        for v, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * series.derive(v)
        return out

    def conjugate(self):
        dims = self.dims
        n = dims.n
        conj = [_conj_series(c, n) for c in self.coeffs]
        coeffs = conj[n:2 * n] + conj[:n] + conj[2 * n:]
        return VectorFieldJet(dims, self.order, coeffs)

    def __repr__(self):
        return "VectorFieldJet(order=%d, %r)" % (self.order, self.coeffs)


def _conj_series(series, n):
    nvars = series.nvars
    perm = list(range(nvars))
    for j in range(n):
        perm[j], perm[n + j] = n + j, j
    return series.permute_vars(perm).map_coeffs(conj)


def bracket(x, y):
    """Lie bracket of two vector-field jets; output loses one order."""
    if x.dims != y.dims:
        raise ValueError("dimension mismatch")
    order = min(x.order, y.order) - 1
    if order < 0:
        raise OrderExhausted("bracket would drop below order zero")
    m = x.dims.m
    coeffs = []
    for e in range(m):
        acc = Series.zero(m, None)
        for v in range(m):
            if not x.coeffs[v].is_zero():
                acc = acc + x.coeffs[v] * y.coeffs[e].derive(v)
            if not y.coeffs[v].is_zero():
                acc = acc - y.coeffs[v] * x.coeffs[e].derive(v)
        coeffs.append(acc.truncate(order))
    return VectorFieldJet(x.dims, order, coeffs)


def _series_matrix_inverse(mat, order, m):
    """Truncated inverse of a square series matrix with invertible
    constant part (finite Neumann tail around the constant inverse)."""
    d = len(mat)
    const = [[s.constant_term() or ZERO for s in row] for row in mat]
    cinv = invert_matrix(const)
    # P := mat - const has positive order; inv = (sum (-Cinv P)^t) Cinv
    P = [[mat[r][c] - Series.constant(m, order, const[r][c])
          for c in range(d)] for r in range(d)]
    CP = [[_dot([cinv[r][t] for t in range(d)],
                [P[t][c] for t in range(d)], m, order)
           for c in range(d)] for r in range(d)]
    term = [[Series.constant(m, order, GQ(1) if r == c else ZERO)
             for c in range(d)] for r in range(d)]
    total = [row[:] for row in term]
    for _ in range(order):
        term = [[_sum_series([term[r][t] * (-1) * CP[t][c] for t in range(d)],
                             m, order) for c in range(d)] for r in range(d)]
        if all(s.is_zero() for row in term for s in row):
            break
        total = [[total[r][c] + term[r][c] for c in range(d)]
                 for r in range(d)]
    return [[_sum_series([total[r][t] * cinv[t][c] for t in range(d)],
                         m, order) for c in range(d)] for r in range(d)]


def _dot(consts, series_list, m, order):
    acc = Series.zero(m, order)
    for c, s in zip(consts, series_list):
        if c and not s.is_zero():
            acc = acc + s * c
    return acc


def _sum_series(items, m, order):
    acc = Series.zero(m, order)
    for s in items:
        acc = acc + s
    return acc


def cr_basis(phi):
    """The (1,0) fields ``L_j = d/dz_j + i*phi_{z_j} (id - i*phi_s)^{-1} d/ds``
    and their conjugates, as jets of order k-1.

    Raises ``ValueError`` if ``id - i*phi_s(0)`` is singular (equivalent
    to the graph chart condition since phi_s(0) is real).
    """
    dims = phi.dims
    n, d, m, k = dims.n, dims.d, dims.m, dims.k
    order = k - 1
    comp = [c.series.truncate(k) for c in phi.components]
    phi_s = [[comp[r].derive(2 * n + c) for c in range(d)] for r in range(d)]
    mat = [[Series.constant(m, order, GQ(1) if r == c else ZERO)
            - I * phi_s[r][c].truncate(order) for c in range(d)]
           for r in range(d)]
    minv = _series_matrix_inverse(mat, order, m)
    fields = []
    for j in range(n):
        phi_zj = [comp[c].derive(j).truncate(order) for c in range(d)]
        coeffs = [Series.zero(m, order)] * m
        coeffs = list(coeffs)
        coeffs[j] = Series.constant(m, order, GQ(1))
        for e in range(d):
            acc = Series.zero(m, order)
            for c in range(d):
                acc = acc + minv[e][c] * phi_zj[c]
            coeffs[2 * n + e] = I * acc
        fields.append(VectorFieldJet(dims, order, coeffs))
    return fields, [f.conjugate() for f in fields]


def tangency_certificate(phi, fields=None):
    """Each L_j must kill the antiholomorphic coordinates restricted to M,
    i.e. ``L_j (s - i*phi) = 0`` through the available order."""
    dims = phi.dims
    n, d, m = dims.n, dims.d, dims.m
    if fields is None:
        fields, _ = cr_basis(phi)
    residuals = []
    for L in fields:
        wbar = [Series.variable(m, L.order + 1, 2 * n + c)
                - I * phi.components[c].series.truncate(L.order + 1)
                for c in range(d)]
        residuals.extend(L.apply(w).truncate(L.order) for w in wbar)
    return all(r.is_zero() for r in residuals)


def _complex_gradients(phi):
    """Jets of the complex defining-function gradients restricted to M.

    For ``rho^c = Im w_c - phi^c``: the z-part is ``-phi^c_z`` and the
    w-part is ``delta/(2i) - phi^c_s / 2``.
    """
    dims = phi.dims
    n, d, m, k = dims.n, dims.d, dims.m, dims.k
    comp = [c.series.truncate(k) for c in phi.components]
    grads = []
    minus_half_i = GQ(0, Fraction(-1, 2))  # 1/(2i)
    for c in range(d):
        vec = [-comp[c].derive(j) for j in range(n)]
        for e in range(d):
            entry = comp[c].derive(2 * n + e) * (-HALF)
            if e == c:
                entry = entry + Series.constant(m, entry.order, minus_half_i)
            vec.append(entry)
        grads.append(vec)
    return grads


def _span_rank(vectors):
    return rank_exact(vectors) if vectors else 0


def degeneracy_oracle(phi, jmax=None):
    """The degeneracy sequence from the original definition.

    r1(j) is N minus the dimension of the span of all words of (0,1)
    basis fields of length <= j applied to the complex gradient jets,
    evaluated at the origin.  Breadth-first with early saturation.
    """
    dims = phi.dims
    N, k = dims.N, dims.k
    if jmax is None:
        jmax = k - 1
    _, lbars = cr_basis(phi)
    level = _complex_gradients(phi)
    vectors = [[s.constant_term() or ZERO for s in vec] for vec in level]
    r1 = []
    rank = _span_rank(vectors)
    for _j in range(1, jmax + 1):
        if rank < N:
            nxt = []
            for vec in level:
                for L in lbars:
                    new = [L.apply(s) for s in vec]
                    nxt.append(new)
                    vectors.append([s.constant_term() or ZERO for s in new])
            level = nxt
            rank = _span_rank(vectors)
        r1.append(N - rank)
    return tuple(r1)


def _collect_span_with_conjugates(dims, values):
    """Span dimension of a set of tangent vectors and their conjugates."""
    n = dims.n
    rows = []
    for v in values:
        rows.append(list(v))
        cv = [conj(c) for c in v]
        rows.append(cv[n:2 * n] + cv[:n] + cv[2 * n:])
    return _span_rank(rows)


def strong_type_oracle(phi, jmax=None):
    """The defect sequence from the commutator definition (innermost field
    conjugated), including conjugate commutators in the span."""
    dims = phi.dims
    m, k = dims.m, dims.k
    if jmax is None:
        jmax = k
    fields, lbars = cr_basis(phi)
    level = list(lbars)
    values = [f.value_at_zero() for f in level]
    r2 = []
    dim = _collect_span_with_conjugates(dims, values)
    for _j in range(2, jmax + 1):
        r2.append(m - dim)  # defect at the previous length
        if dim < m:
            nxt = []
            for w in level:
                for L in fields:
                    b = bracket(L, w)
                    nxt.append(b)
                    values.append(b.value_at_zero())
            level = nxt
            dim = _collect_span_with_conjugates(dims, values)
    r2.append(m - dim)
    return tuple(r2)


def finite_type_oracle(phi, jmax=None):
    """Least bracket length spanning the complexified tangent space, over
    all nested words in the basis fields and their conjugates; ``None``
    when no length <= k suffices (undetermined beyond the jet order)."""
    dims = phi.dims
    m, k = dims.m, dims.k
    if jmax is None:
        jmax = k
    fields, lbars = cr_basis(phi)
    alphabet = fields + lbars
    level = list(alphabet)
    values = [f.value_at_zero() for f in level]
    dim = _span_rank([list(v) for v in values])
    if dim == m:
        return 1
    for length in range(2, jmax + 1):
        nxt = []
        for w in level:
            for L in alphabet:
                b = bracket(L, w)
                nxt.append(b)
                values.append(b.value_at_zero())
        level = nxt
        dim = _span_rank([list(v) for v in values])
        if dim == m:
            return length
    return None


def lemma_ident_check(psi, word):
    """Check the bracket/derivative identity for one word.

    ``word = (j_1, .., j_r, l)``: the nested bracket
    ``[L_{j1}, [.., [L_{jr}, Lbar_l]..]]`` at the origin must equal
    ``-2i * psi_{z_{j1}..z_{jr}, zbar_l}(0) * d/ds`` exactly.
    """
    dims = psi.dims
    n, d = dims.n, dims.d
    *js, l = word
    fields, lbars = cr_basis(psi)
    acc = lbars[l]
    for j in reversed(js):
        acc = bracket(fields[j], acc)
    got = acc.value_at_zero()
    alpha = [0] * n
    for j in js:
        alpha[j] += 1
    beta = tuple(1 if t == l else 0 for t in range(n))
    expect = [ZERO] * (2 * n)
    for c in range(d):
        deriv = psi.components[c].derivative_at_zero(tuple(alpha), beta,
                                                     (0,) * d)
        expect.append((-2 * I) * deriv)
    return list(got) == expect


def oracle_profile(phi):
    """(r1, r2, finite_type) computed entirely on the vector-field side."""
    return degeneracy_oracle(phi), strong_type_oracle(phi), \
        finite_type_oracle(phi)
