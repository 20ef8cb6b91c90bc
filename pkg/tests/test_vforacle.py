from crjets.genericity import sample_jet
from crjets.invariants import profile
from crjets.jets import DefiningJet, Dimensions, Jet
from crjets.parser import parse_polynomial
from crjets.vforacle import (bracket, cr_basis, degeneracy_oracle,
                             finite_type_oracle, lemma_ident_check,
                             strong_type_oracle, tangency_certificate)


def defining(texts, dims):
    return DefiningJet(dims, [Jet(dims, parse_polynomial(t, dims.n, dims.d)
                                  .truncate(dims.k)) for t in texts])


def test_tangency():
    dims = Dimensions(2, 2, 4)
    phi = sample_jet(dims, 3)
    assert tangency_certificate(phi)


def test_bracket_antisymmetry():
    dims = Dimensions(2, 1, 4)
    phi = sample_jet(dims, 5)
    fields, lbars = cr_basis(phi)
    a = bracket(fields[0], lbars[1])
    b = bracket(lbars[1], fields[0])
    assert a.value_at_zero() == tuple(-c for c in b.value_at_zero())


def test_bracket_derivative_identity():
    dims = Dimensions(2, 1, 4)
    phi = sample_jet(dims, 9)
    for word in ((0, 0), (0, 1), (1, 0), (0, 0, 1), (1, 1, 0)):
        assert lemma_ident_check(phi, word)


def test_levi_quadric_oracle():
    dims = Dimensions(2, 1, 2)
    phi = defining(["z1*zb1 + z2*zb2"], dims)
    assert degeneracy_oracle(phi) == (0,)
    assert strong_type_oracle(phi) == (1, 0)
    assert finite_type_oracle(phi) == 2


def test_flat_oracle():
    dims = Dimensions(1, 1, 3)
    phi = DefiningJet.zero(dims)
    assert degeneracy_oracle(phi) == (1, 1)
    assert strong_type_oracle(phi) == (1, 1, 1)
    assert finite_type_oracle(phi) is None


def test_oracle_matches_matrix_path():
    for n, d in ((1, 1), (2, 1), (1, 2)):
        for seed in (31, 32):
            dims = Dimensions(n, d, 3)
            psi = sample_jet(dims, seed)
            p = profile(psi)
            assert degeneracy_oracle(psi) == p.r1
            assert strong_type_oracle(psi) == p.r2


def test_finite_type_tube():
    # Im w = z^2*zb^2: brackets reach d/ds only at length 4
    dims = Dimensions(1, 1, 6)
    phi = defining(["z1^2*zb1^2"], dims)
    assert finite_type_oracle(phi) == 4
