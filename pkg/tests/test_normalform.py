from fractions import Fraction

import pytest

from crjets.genericity import sample_jet
from crjets.jets import DefiningJet, Dimensions, Jet
from crjets.normalform import (ChartError, eliminate_harmonic, graph_extract,
                               psi_map, recentre, reconstruct_graph,
                               substitution_residual)
from crjets.parser import parse_polynomial
from crjets.scalars import GQ, I
from crjets.series import Series


def defining(texts, dims, truncate=True):
    comps = []
    for t in texts:
        s = parse_polynomial(t, dims.n, dims.d)
        if truncate:
            s = s.truncate(dims.k)
        comps.append(Jet(dims, s))
    return DefiningJet(dims, comps)


def test_already_nonharmonic_fixed():
    dims = Dimensions(1, 1, 3)
    phi = defining(["z1*zb1"], dims)
    h, psi = eliminate_harmonic(phi)
    assert psi.components[0] == phi.components[0]
    # h is the identity on w up to the vanishing axis data
    assert h[0] == Series.variable(2, 3, 1)


def test_harmonic_terms_removed_and_certified():
    dims = Dimensions(1, 1, 4)
    phi = defining(["z1*zb1 + z1^2 + zb1^2 + s1^2 + z1*s1 + zb1*s1"], dims)
    h, psi = eliminate_harmonic(phi)
    assert psi.is_nonharmonic()
    residual = substitution_residual(phi, h, psi)
    assert all(r.is_zero() for r in residual)


def test_roundtrip_reconstruction():
    dims = Dimensions(1, 1, 4)
    for seed in range(4):
        base = sample_jet(dims, seed)
        pollution = defining(["z1^2 + zb1^2 + s1^2"], dims)
        phi = DefiningJet(dims, [base.components[0]
                                 + pollution.components[0]])
        h, psi = eliminate_harmonic(phi)
        back = reconstruct_graph(dims, h, psi)
        assert back == phi


def test_codimension_two_normalization():
    dims = Dimensions(2, 2, 3)
    phi = defining(["z1*zb1 + z1*z2 + zb1*zb2 + s1*s2",
                    "z1*zb2 + z2*zb1 + s2^2"], dims)
    h, psi = eliminate_harmonic(phi)
    assert psi.is_nonharmonic()
    assert all(r.is_zero() for r in substitution_residual(phi, h, psi))


def test_chart_error():
    dims = Dimensions(1, 1, 2)
    # phi_s(0) = i is not real, so build the jet unchecked: id + i*phi_s(0) = 0
    bad = Jet(dims, Series(3, 2, {(0, 0, 1): I}))
    phi = DefiningJet(dims, [bad], check=False)
    with pytest.raises(ChartError):
        eliminate_harmonic(phi)


def test_recentre_stays_on_manifold():
    dims = Dimensions(1, 1, 4)
    phi = defining(["z1*zb1 + 2*Re(z1^3*zb1)"], dims, truncate=False)
    z0 = (GQ(Fraction(1, 2), Fraction(1, 3)),)
    s0 = (Fraction(1, 5),)
    centred = recentre(phi, (z0, s0))
    assert all(not c.series.constant_term() for c in centred.components)
    assert all(c.is_real() for c in centred.components)
    # the origin shift is exact: re-shifting by the negated offsets and
    # restoring the removed constant recovers the original coefficients
    _, psi = eliminate_harmonic(centred)
    assert psi.is_nonharmonic()


def test_recentre_at_origin_is_truncation():
    dims = Dimensions(1, 1, 3)
    phi = defining(["z1*zb1 + 2*Re(z1^3*zb1)"], dims, truncate=False)
    centred = recentre(phi, ((GQ(0),), (Fraction(0),)))
    assert centred == phi.truncate(dims.k)


def test_graph_extract_identity_embedding():
    dims = Dimensions(1, 1, 2)
    m = dims.m
    # g(x, y, s) = (x + iy, s + i*(x^2 + y^2)): graph of z*zb
    x = Series.variable(m, None, 0)
    y = Series.variable(m, None, 1)
    s = Series.variable(m, None, 2)
    g = ((x + y * I).map_coeffs(GQ._coerce),
         (s + (x * x + y * y) * I).map_coeffs(GQ._coerce))
    chart, phi = graph_extract(g, dims)
    assert phi.components[0].coeff((1,), (1,), (0,)) == GQ(1)
    split = psi_map(g, dims)
    assert split.nonharmonic_part.components[0].coeff((1,), (1,), (0,)) \
        == GQ(1)


def test_graph_extract_swapped_components():
    dims = Dimensions(1, 1, 2)
    m = dims.m
    x = Series.variable(m, None, 0)
    y = Series.variable(m, None, 1)
    s = Series.variable(m, None, 2)
    g = ((s + (x * x + y * y) * I).map_coeffs(GQ._coerce),
         (x + y * I).map_coeffs(GQ._coerce))
    chart, phi = graph_extract(g, dims)
    assert chart.permutation != (0, 1)
    assert phi.components[0].coeff((1,), (1,), (0,)) == GQ(1)


def test_graph_extract_degenerate_rejected():
    dims = Dimensions(1, 1, 2)
    m = dims.m
    x = Series.variable(m, None, 0)
    # rank-deficient differential: both components depend only on x
    g = (x.map_coeffs(GQ._coerce), (x * x).map_coeffs(GQ._coerce))
    with pytest.raises(ChartError):
        graph_extract(g, dims)
