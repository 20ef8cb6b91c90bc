import pytest

from crjets.genericity import sample_jet
from crjets.jets import DefiningJet, Dimensions, Jet, multi_indices
from crjets.parser import parse_polynomial
from crjets.scalars import GQ, I
from crjets.series import Series


def jet_from(text, dims):
    return Jet(dims, parse_polynomial(text, dims.n, dims.d).truncate(dims.k))


def test_dimensions_derived():
    dims = Dimensions(2, 3, 4)
    assert dims.N == 5 and dims.m == 7


def test_multi_indices_graded():
    idx = multi_indices(2, 1, 2)
    assert idx == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_conjugate_involution_and_realness():
    dims = Dimensions(2, 1, 3)
    jet = jet_from("z1*zb2 + z2*zb1 + z1*zb1*s1", dims)
    assert jet.conjugate().conjugate() == jet
    assert jet.is_real()
    assert not jet_from("i*z1*zb2", dims).is_real()


def test_realness_closed_under_ops():
    dims = Dimensions(1, 1, 4)
    for seed in range(5):
        a = sample_jet(dims, seed).components[0]
        b = sample_jet(dims, seed + 100).components[0]
        assert (a + b).is_real()
        assert (a * b).is_real()
        assert (a * GQ(3)).is_real()


def test_derivative_at_zero_scaling():
    dims = Dimensions(1, 1, 4)
    jet = jet_from("z1^2*zb1^2", dims)
    assert jet.derivative_at_zero((2,), (2,), (0,)) == GQ(4)
    assert jet.derivative_at_zero((1,), (1,), (0,)) == 0


def test_harmonic_split_partition():
    dims = Dimensions(1, 1, 3)
    jet = jet_from("z1*zb1 + z1 + zb1 + s1^2 + z1*s1 + zb1*s1", dims)
    harm, nonharm = jet.split_harmonic()
    assert harm + nonharm == jet
    assert nonharm.is_nonharmonic()
    assert not harm.is_nonharmonic() or harm.is_zero()
    for (alpha, beta, _g), _c in harm.items():
        assert not any(alpha) or not any(beta)


def test_defining_jet_validation():
    dims = Dimensions(1, 1, 2)
    with pytest.raises(ValueError):
        DefiningJet(dims, [jet_from("i*z1*zb1", dims)])
    with pytest.raises(ValueError):
        DefiningJet(dims, [Jet(dims, Series.constant(3, 2, GQ(1)))])
    with pytest.raises(ValueError):
        DefiningJet(dims, [])


def test_graph_condition():
    dims = Dimensions(1, 1, 2)
    ok = DefiningJet(dims, [jet_from("z1*zb1", dims)])
    assert ok.chart_invertible()
    assert ok.graph_matrix() == [[GQ(1)]]
    # phi = -s makes id + i*phi_s(0) = 1 - i, still invertible
    tilted = DefiningJet(dims, [jet_from("z1*zb1 - s1", dims)], check=False)
    assert tilted.graph_matrix() == [[GQ(1) - I]]
    assert tilted.chart_invertible()
