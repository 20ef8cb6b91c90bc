"""Graph normalization: harmonic splitting and elimination, graph
extraction from embedding jets, recentring, and the jet-splitting map.

The central operation is :func:`eliminate_harmonic`, which produces the
holomorphic coordinate change ``w = h(z', w')`` killing every harmonic
monomial of a defining jet, together with the nonharmonic defining jet
``psi`` of the manifold in the new coordinates.  Both are obtained by
graded implicit solving; all identities hold exactly through the
truncation order and are re-checked by :func:`substitution_residual`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .jets import DefiningJet, Jet
from .linalg import rank_exact
from .scalars import GQ, HALF, I, ZERO, conj
from .series import Series, identity_tuple, implicit_solve, invert_map


class ChartError(ValueError):
    """The graph/invertibility precondition fails in every candidate chart."""


def split_harmonic(phi):
    """Split a real jet into (harmonic, nonharmonic); see ``Jet.split_harmonic``."""
    if not phi.is_real():
        raise ValueError("harmonic splitting needs a real jet")
    return phi.split_harmonic()


def _axis_series(phi, order):
    """phi(0, 0, s) of each component as a pure-s series in d variables."""
    n, d = phi.dims.n, phi.dims.d
    out = []
    for comp in phi.components:
        table = {}
        for (alpha, beta, gamma), c in comp.items():
            if not any(alpha) and not any(beta):
                table[gamma] = c
        out.append(Series(d, order, table))
    return out


def holomorphic_change(phi):
    """The coordinate change ``w = h(z', w')`` eliminating harmonic terms.

    Returns ``h`` as a d-tuple of series in the n + d complex variables
    ``(z'_1..z'_n, w'_1..w'_d)``, normalized on the w'-axis by
    ``h(0, s) = s + i*phi(0, 0, s)`` and elsewhere by the graded solution
    of the reflection identity ``h(z',w') - hbar(0,w') =
    2i*phi(z', 0, (h(z',w') + hbar(0,w'))/2)``.
    """
    dims = phi.dims
    n, d, k = dims.n, dims.d, dims.k
    if not phi.chart_invertible():
        raise ChartError("not graph-normalizable here: id + i*phi_s(0) is singular")

    phi0 = _axis_series(phi, k)  # phi(0,0,s), real coefficients
    # hbar(0, w') = w' - i*phi(0,0,w'), lifted into the (z', w') space
    nv = n + d
    wmap = list(range(n, n + d))
    hbar_axis = [Series.variable(nv, k, n + c) - I * phi0[c].embed(nv, wmap)
                 for c in range(d)]

    # F over (u, v) = ((z', w'), h): F_c = h_c - hbar_c(0,w')
    #                                 - 2i*phi^c(z', 0, (h + hbar(0,w'))/2)
    total = nv + d
    umap = list(range(nv))
    hbar_big = [s.embed(total, umap) for s in hbar_axis]
    h_vars = [Series.variable(total, k, nv + c) for c in range(d)]
    s_arg = [(h_vars[c] + hbar_big[c]) * HALF for c in range(d)]
    zero_big = Series.zero(total, k)
    inner = ([Series.variable(total, k, j) for j in range(n)]  # z -> z'
             + [zero_big] * n                                  # zbar -> 0
             + s_arg)                                          # s -> (h+hbar)/2
    F = []
    for c in range(d):
        phic = phi.components[c].series.truncate(k).compose(inner)
        F.append(h_vars[c] - hbar_big[c] - (2 * I) * phic)
    return implicit_solve(F, nv, k)


def _transformed_graph(phi, h):
    """Defining jet ``psi`` of the manifold in the coordinates of ``h``.

    Solves ``Im h(z', s'+it') = phi(z', zbar', Re h(z', s'+it'))`` for
    ``t'`` as a function of ``(z', zbar', s')``.
    """
    dims = phi.dims
    n, d, k, m = dims.n, dims.d, dims.k, dims.m
    total = m + d  # (z', zbar', s') then unknowns t'
    t_vars = [Series.variable(total, k, m + c) for c in range(d)]
    s_vars = [Series.variable(total, k, 2 * n + c) for c in range(d)]
    wp = [s_vars[c] + I * t_vars[c] for c in range(d)]
    wpbar = [s_vars[c] - I * t_vars[c] for c in range(d)]

    inner_h = [Series.variable(total, k, j) for j in range(n)] + wp
    inner_hbar = [Series.variable(total, k, n + j) for j in range(n)] + wpbar
    H = [h[c].truncate(k).compose(inner_h) for c in range(d)]
    Hbar = [h[c].map_coeffs(conj).truncate(k).compose(inner_hbar)
            for c in range(d)]

    re_h = [(H[c] + Hbar[c]) * HALF for c in range(d)]
    inner_phi = ([Series.variable(total, k, j) for j in range(2 * n)] + re_h)
    G = []
    minus_half_i = GQ(0, Fraction(-1, 2))
    for c in range(d):
        im_h = (H[c] - Hbar[c]) * minus_half_i  # (H - Hbar)/(2i)
        G.append(im_h - phi.components[c].series.truncate(k).compose(inner_phi))
    t_sol = implicit_solve(G, m, k)
    return DefiningJet(dims, [Jet(dims, s) for s in t_sol])


def eliminate_harmonic(phi):
    """Normalize a defining jet: kill all harmonic monomials.

    Returns ``(h, psi)`` where ``h`` is the holomorphic coordinate change
    (d series in (z', w')) and ``psi`` the nonharmonic defining jet in the
    new coordinates.  Raises :class:`ChartError` when the graph condition
    ``id + i*phi_s(0)`` fails.
    """
    h = holomorphic_change(phi)
    psi = _transformed_graph(phi, h)
    for comp in psi.components:
        if not comp.is_nonharmonic():
            raise AssertionError("harmonic residue survived normalization")
    return h, psi


def substitution_residual(phi, h, psi):
    """The jet ``Im h - phi(z', zbar', Re h)`` with ``w' = s' + i*psi``.

    Zero through order k exactly certifies that ``h`` and ``psi`` describe
    the same manifold as ``phi``.
    """
    dims = phi.dims
    n, d, k, m = dims.n, dims.d, dims.k, dims.m
    psi_s = [c.series for c in psi.components]
    wp = [Series.variable(m, k, 2 * n + c) + I * psi_s[c] for c in range(d)]
    wpbar = [Series.variable(m, k, 2 * n + c) - I * psi_s[c] for c in range(d)]
    inner_h = [Series.variable(m, k, j) for j in range(n)] + wp
    inner_hbar = [Series.variable(m, k, n + j) for j in range(n)] + wpbar
    H = [h[c].truncate(k).compose(inner_h) for c in range(d)]
    Hbar = [h[c].map_coeffs(conj).truncate(k).compose(inner_hbar)
            for c in range(d)]
    re_h = [(H[c] + Hbar[c]) * HALF for c in range(d)]
    inner_phi = [Series.variable(m, k, j) for j in range(2 * n)] + re_h
    minus_half_i = GQ(0, Fraction(-1, 2))
    out = []
    for c in range(d):
        im_h = (H[c] - Hbar[c]) * minus_half_i
        out.append(im_h - phi.components[c].series.truncate(k).compose(inner_phi))
    return out


def reconstruct_graph(dims, h, psi):
    """Recover the original defining jet from ``(h, psi)``.

    Inverse direction of :func:`eliminate_harmonic`: given the coordinate
    change and the normalized jet, solve ``Re h(z, s'+i psi) = s`` for
    ``s'`` and read off ``phi = Im h``.
    """
    n, d, k, m = dims.n, dims.d, dims.k, dims.m
    total = m + d  # (z, zbar, s) then unknowns s'
    sp = [Series.variable(total, k, m + c) for c in range(d)]
    inner_psi = ([Series.variable(total, k, j) for j in range(2 * n)] + sp)
    psi_at = [c.series.truncate(k).compose(inner_psi) for c in psi.components]
    wp = [sp[c] + I * psi_at[c] for c in range(d)]
    wpbar = [sp[c] - I * psi_at[c] for c in range(d)]
    inner_h = [Series.variable(total, k, j) for j in range(n)] + wp
    inner_hbar = [Series.variable(total, k, n + j) for j in range(n)] + wpbar
    H = [h[c].truncate(k).compose(inner_h) for c in range(d)]
    Hbar = [h[c].map_coeffs(conj).truncate(k).compose(inner_hbar)
            for c in range(d)]
    F = [(H[c] + Hbar[c]) * HALF - Series.variable(total, k, 2 * n + c)
         for c in range(d)]
    s_sol = implicit_solve(F, m, k)
    minus_half_i = GQ(0, Fraction(-1, 2))
    ident_m = identity_tuple(m, k)
    comps = []
    for c in range(d):
        im_h = (H[c] - Hbar[c]) * minus_half_i
        comps.append(Jet(dims, im_h.compose(ident_m + s_sol)))
    return DefiningJet(dims, comps)


# -- graph extraction from embedding jets -------------------------------


@dataclass(frozen=True)
class ChartTransform:
    """Linear chart choice: coordinate permutation plus {1, i} multipliers.

    ``permutation[j]`` is the index of the original coordinate placed at
    slot ``j``; ``multipliers[j]`` is 0 for the identity factor and 1 for
    multiplication by i.  ``offset`` recentres the target.
    """

    permutation: tuple
    multipliers: tuple
    offset: tuple

    def apply(self, values):
        """Apply the chart to an N-tuple of complex entries."""
        out = []
        for j, src in enumerate(self.permutation):
            v = values[src]
            if self.multipliers[j]:
                v = I * v
            out.append(v)
        return tuple(out)


def _real_im_series(series):
    re = series.map_coeffs(lambda c: GQ(c.re))
    im = series.map_coeffs(lambda c: GQ(c.im))
    return re, im


def _to_zzbars(series, dims):
    """Rewrite a real-variable series (x, y, s) as a jet in (z, zbar, s)."""
    n, d, m = dims.n, dims.d, dims.m
    k = series.order
    half_i = GQ(0, Fraction(-1, 2))  # 1/(2i)
    inner = []
    for j in range(n):  # x_j = (z_j + zb_j)/2
        inner.append((Series.variable(m, k, j) + Series.variable(m, k, n + j))
                     * HALF)
    for j in range(n):  # y_j = (z_j - zb_j)/(2i)
        inner.append((Series.variable(m, k, j) - Series.variable(m, k, n + j))
                     * half_i)
    for c in range(d):
        inner.append(Series.variable(m, k, 2 * n + c))
    return Jet(dims, series.compose(inner))


def graph_extract(g, dims):
    """Bring an embedding jet into graph position ``Im w = phi``.

    ``g`` is an N-tuple of series with GQ coefficients in the m real
    source variables (the k-jet of an embedding of R^m into C^N at the
    source origin; a constant term is treated as the target basepoint and
    subtracted).  Charts are enumerated deterministically (coordinate
    permutations, then {1, i} multiplier patterns); the first chart where
    both the diffeomorphism condition on ``g_1`` and the graph condition
    hold wins.  Raises :class:`ChartError` if no chart succeeds.
    """
    n, d, N, m, k = dims.n, dims.d, dims.N, dims.m, dims.k
    if len(g) != N:
        raise ValueError("expected %d components, got %d" % (N, len(g)))
    offset = tuple(comp.constant_term() or ZERO for comp in g)
    g = [comp - Series.constant(m, comp.order, off) if off else comp
         for comp, off in zip(g, offset)]

    for perm in itertools.permutations(range(N)):
        for mults in itertools.product((0, 1), repeat=N):
            chart = ChartTransform(perm, mults, offset)
            Z = list(chart.apply(g))
            xs, ys = [], []
            for j in range(n):
                re, im = _real_im_series(Z[j])
                xs.append(re)
                ys.append(im)
            ss, ts = [], []
            for c in range(d):
                re, im = _real_im_series(Z[n + c])
                ss.append(re)
                ts.append(im)
            g1 = xs + ys + ss
            linear = [[comp.coeff(tuple(1 if t == v else 0 for t in range(m)))
                       for v in range(m)] for comp in g1]
            if rank_exact(linear) != m:
                continue
            g1_inv = invert_map([c.truncate(k) for c in g1], k)
            phi_real = [t.truncate(k).compose(g1_inv) for t in ts]
            comps = [_to_zzbars(s, dims) for s in phi_real]
            try:
                phi = DefiningJet(dims, comps)
            except ValueError:
                continue
            if not phi.chart_invertible():
                continue
            return chart, phi
    raise ChartError("not a generic embedding jet: no admissible chart found")


def recentre(phi_global, point):
    """Recentre a globally defined polynomial graph at a point of M.

    ``phi_global`` must be an exact polynomial defining jet (untruncated or
    of order at least its degree); ``point = (z0, s0)`` with ``z0`` a
    tuple of n GQ values and ``s0`` a tuple of d real values.  The result
    is the defining jet of the same manifold in coordinates centered at
    the point, truncated to the analysis order.
    """
    dims = phi_global.dims
    n, d = dims.n, dims.d
    z0, s0 = point
    z0 = tuple(c if isinstance(c, GQ) or hasattr(c, "grad") else GQ(c)
               for c in z0)
    if len(z0) != n or len(s0) != d:
        raise ValueError("basepoint arity mismatch")
    offsets = list(z0) + [c.conj() if hasattr(c, "conj") else c for c in z0] \
        + list(s0)
    comps = []
    for comp in phi_global.components:
        shifted = comp.series.shift(offsets)
        t0 = shifted.constant_term()
        if t0:
            shifted = shifted - Series.constant(dims.m, shifted.order, t0)
        comps.append(Jet(dims, shifted.truncate(dims.k)))
    return DefiningJet(dims, comps)


# -- the splitting map --------------------------------------------------


@dataclass(frozen=True)
class SplitJet:
    """Four-component splitting of an embedding jet in graph position:
    target basepoint, parametrization jet, harmonic part, nonharmonic
    normalized defining jet."""

    base_point: tuple
    param_jet: tuple
    harmonic_part: DefiningJet
    nonharmonic_part: DefiningJet


def psi_map(g, dims):
    """Split an embedding jet into (basepoint, parametrization, harmonic,
    nonharmonic) data; the nonharmonic part is complete k-equivalence data
    for the germ."""
    chart, phi = graph_extract(g, dims)
    harm, _ = split_harmonic_tuple(phi)
    _, psi = eliminate_harmonic(phi)
    n, N, m, k = dims.n, dims.N, dims.m, dims.k
    offset = chart.offset
    Z = list(chart.apply([comp - Series.constant(m, comp.order, off)
                          if off else comp for comp, off in zip(g, offset)]))
    param = []
    for j in range(n):
        re, im = _real_im_series(Z[j])
        param.append(re)
        param.append(im)
    for c in range(dims.d):
        re, _ = _real_im_series(Z[n + c])
        param.append(re)
    return SplitJet(tuple(offset), tuple(s.truncate(k) for s in param),
                    harm, psi)


def split_harmonic_tuple(phi):
    """Componentwise harmonic/nonharmonic split of a defining jet."""
    harms, nonharms = [], []
    for comp in phi.components:
        h, nh = split_harmonic(comp)
        harms.append(h)
        nonharms.append(nh)
    mk = lambda parts: DefiningJet(phi.dims, parts, check=False)
    return mk(harms), mk(nonharms)
