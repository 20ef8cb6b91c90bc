import random
from fractions import Fraction

import pytest

from crjets.linalg import invert_matrix, mat_mul, rank_exact, span_dim
from crjets.scalars import GQ, ZERO, DualGQ


def random_matrix(n, m, rng):
    return [[GQ(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
             for _ in range(m)] for _ in range(n)]


def test_rank_basic():
    assert rank_exact([]) == 0
    assert rank_exact([[ZERO, ZERO]]) == 0
    assert rank_exact([[GQ(1), GQ(2)], [GQ(2), GQ(4)]]) == 1
    assert rank_exact([[GQ(1), GQ(0)], [GQ(0), GQ(1)]]) == 2


def test_rank_invariant_under_row_ops():
    rng = random.Random(11)
    for _ in range(10):
        m = random_matrix(3, 4, rng)
        r = rank_exact(m)
        scaled = [[GQ(Fraction(3, 7)) * c for c in m[0]]] + m[1:]
        mixed = [m[0], [a + b for a, b in zip(m[0], m[1])], m[2]]
        assert rank_exact(scaled) == r
        assert rank_exact(mixed) == r


def test_rank_invariant_under_invertible_transform():
    rng = random.Random(12)
    for _ in range(10):
        m = random_matrix(3, 3, rng)
        while True:
            t = random_matrix(3, 3, rng)
            try:
                invert_matrix(t)
                break
            except ValueError:
                continue
        assert rank_exact(mat_mul(t, m)) == rank_exact(m)


def test_inverse_roundtrip():
    rng = random.Random(13)
    for _ in range(10):
        while True:
            m = random_matrix(3, 3, rng)
            try:
                inv = invert_matrix(m)
                break
            except ValueError:
                continue
        prod = mat_mul(m, inv)
        for r in range(3):
            for c in range(3):
                assert prod[r][c] == (GQ(1) if r == c else ZERO)


def test_singular_raises():
    with pytest.raises(ValueError):
        invert_matrix([[GQ(1), GQ(2)], [GQ(2), GQ(4)]])


def test_dual_local_ring_inverse():
    m = [[DualGQ(GQ(2), (GQ(1),)), DualGQ(ZERO, (GQ(5),))],
         [DualGQ(ZERO, (GQ(-3),)), DualGQ(GQ(1), (ZERO,))]]
    inv = invert_matrix(m)
    prod = mat_mul(m, inv)
    one = DualGQ(GQ(1), (ZERO,))
    zero = DualGQ(ZERO, (ZERO,))
    assert prod[0][0] == one and prod[1][1] == one
    assert prod[0][1] == zero and prod[1][0] == zero


def test_span_dim():
    assert span_dim([]) == 0
    assert span_dim([[GQ(1), GQ(1)], [GQ(2), GQ(2)]]) == 1
