import pytest

from crjets.genericity import sample_jet
from crjets.invariants import (InvariantProfile, bound_constants,
                               brute_force_codim_rank0, build_matrix_A,
                               build_matrix_B, codim_A_r, codim_B_r,
                               codim_query, K_double_prime, minuses,
                               nonharmonic_real_coordinates, pluses, profile)
from crjets.jets import DefiningJet, Dimensions, Jet
from crjets.linalg import rank_exact
from crjets.parser import parse_polynomial


def defining(texts, dims):
    return DefiningJet(dims, [Jet(dims, parse_polynomial(t, dims.n, dims.d)
                                  .truncate(dims.k)) for t in texts])


def test_matrix_shapes():
    dims = Dimensions(2, 1, 3)
    psi = defining(["z1*zb1 + z2*zb2"], dims)
    A = build_matrix_A(psi, 2)
    assert len(A) == 5 and all(len(r) == 2 for r in A)  # |alpha| in {1, 2}
    B, B_real = build_matrix_B(psi, 3)
    assert len(B) == 2 * 2 * 5  # n * |alphas| rows plus conjugates
    assert all(len(r) == 1 for r in B)


def test_levi_nondegenerate_quadric():
    dims = Dimensions(2, 1, 2)
    psi = defining(["z1*zb1 + z2*zb2"], dims)
    p = profile(psi)
    assert p.r1 == (0,) and p.nondeg_order == 1
    assert p.r2 == (1, 0) and p.strong_type == 2


def test_flat_jet_maximally_degenerate():
    dims = Dimensions(2, 2, 3)
    psi = DefiningJet.zero(dims)
    p = profile(psi)
    assert p.maximally_degenerate
    assert p.nondeg_order is None and p.strong_type is None
    assert p.r1 == (2, 2) and p.r2 == (2, 2, 2)


def test_reduced_defect_matrix_rank_matches():
    # the real reduction must preserve the rank of the conjugate-closed
    # complex matrix
    for seed in range(6):
        dims = Dimensions(2, 2, 4)
        psi = sample_jet(dims, seed)
        for j in range(2, dims.k + 1):
            B, B_real = build_matrix_B(psi, j)
            assert rank_exact(B) == rank_exact(B_real)


def test_requires_nonharmonic():
    dims = Dimensions(1, 1, 3)
    psi = defining(["z1*zb1 + z1^2 + zb1^2"], dims)
    with pytest.raises(ValueError):
        build_matrix_A(psi, 2)


def test_bound_constants_domain():
    with pytest.raises(ValueError):
        bound_constants(5, 5)
    with pytest.raises(ValueError):
        bound_constants(9, 4)
    assert bound_constants(3, 2) == (3, 4, 4)


def test_codim_formulas_spot():
    assert codim_A_r(1, 1, 3, 0) == 3
    assert codim_A_r(1, 1, 4, 0) == 5
    assert codim_A_r(2, 1, 2, 2) == 0  # full rank stratum is open
    assert codim_B_r(1, 1, 2, 1) == 0
    assert codim_query("minuses", 1, 1, 3) == minuses(1, 1, 3)
    assert codim_query("K2", 2, 3) == K_double_prime(2, 3)
    with pytest.raises(ValueError):
        codim_query("nope", 1)


def test_corank_one_identities_grid():
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(2, 7):
                assert minuses(n, d, k) == codim_A_r(n, d, k, n - 1)
                assert pluses(n, d, k) == codim_B_r(n, d, k, d - 1)


def test_brute_force_count():
    coords = nonharmonic_real_coordinates(1, 1, 4)
    # 4 self-conjugate monomials plus 3 conjugate pairs in degrees 2..4
    assert len(coords) == 10
    assert brute_force_codim_rank0(1, 1, 4) == 5
    assert brute_force_codim_rank0(1, 1, 3) == 3


def test_profile_is_hashable_value():
    p = InvariantProfile(1, 1, 2, (0,), (1, 0), 1, 2)
    assert hash(p) == hash(InvariantProfile(1, 1, 2, (0,), (1, 0), 1, 2))
