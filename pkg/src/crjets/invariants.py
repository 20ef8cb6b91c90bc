"""Nondegeneracy and defect invariants of nonharmonic defining jets.

Two matrices drive everything: ``A`` (rows of mixed derivatives
``phi^j_{z, zbar^alpha}(0)``) whose rank deficiency gives the degeneracy
sequence r1, and ``B`` (rows ``phi_{z^alpha, zbar_r}(0)`` plus conjugates)
whose rank deficiency gives the defect sequence r2.  Also: the dimension
bound constants and the codimension formulas for the rank strata.

Index convention: a jet of order k yields r1(j) for j <= k-1 and r2(j)
for j <= k; empty matrices have rank 0, so r2(1) = d always.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .jets import multi_indices
from .linalg import rank_exact
from .scalars import GQ, conj


def _check_nonharmonic(psi):
    if not psi.is_nonharmonic():
        raise ValueError("defining jet is not nonharmonic; normalize first")


def build_matrix_A(psi, j):
    """Rows ``phi^c_{z, zbar^alpha}(0)`` for 1 <= |alpha| <= j.

    Row order: components outermost, alpha graded lexicographic.  Columns
    are the n first-order z-derivatives.  Entries are exact.
    """
    _check_nonharmonic(psi)
    dims = psi.dims
    n = dims.n
    alphas = multi_indices(n, 1, j)
    unit = lambda q: tuple(1 if t == q else 0 for t in range(n))
    zero_d = (0,) * dims.d
    rows = []
    for comp in psi.components:
        for alpha in alphas:
            rows.append([comp.derivative_at_zero(unit(q), alpha, zero_d)
                         for q in range(n)])
    return rows


def build_matrix_B(psi, j):
    """The defect matrix at order j and its real reduction.

    Returns ``(B, B_real)``: ``B`` has rows ``phi_{z^alpha, zbar_r}(0)``
    in C^d for 1 <= r <= n, 1 <= |alpha| <= j-1, followed by their
    conjugates.  ``B_real`` replaces each conjugate pair by real rows
    (real/imaginary parts for |alpha| > 1; for |alpha| = 1 the duplicate
    rows are dropped, keeping the real diagonal and the off-diagonal
    real/imag combinations), preserving the rank.
    """
    _check_nonharmonic(psi)
    dims = psi.dims
    n, d = dims.n, dims.d
    unit = lambda r: tuple(1 if t == r else 0 for t in range(n))
    zero_d = (0,) * d
    alphas = multi_indices(n, 1, j - 1) if j >= 2 else []
    rows = []
    tagged = []  # (alpha, r, row) for the real reduction
    for r in range(n):
        for alpha in alphas:
            row = [comp.derivative_at_zero(alpha, unit(r), zero_d)
                   for comp in psi.components]
            rows.append(row)
            tagged.append((alpha, r, row))
    rows.extend([conj(c) for c in row] for row in list(rows))

    real_rows = []
    seen_linear = set()
    re_row = lambda row: [GQ(c.re if isinstance(c, GQ) else c) for c in row]
    im_row = lambda row: [GQ(c.im if isinstance(c, GQ) else 0) for c in row]
    for alpha, r, row in tagged:
        if sum(alpha) > 1:
            real_rows.append(re_row(row))
            real_rows.append(im_row(row))
            continue
        q = alpha.index(1)
        if q == r:
            real_rows.append(re_row(row))
        elif (r, q) not in seen_linear:
            seen_linear.add((q, r))
            real_rows.append(re_row(row))
            real_rows.append(im_row(row))
    return rows, real_rows


@dataclass(frozen=True)
class InvariantProfile:
    """Degeneracy sequence r1(1..k-1), defect sequence r2(1..k), and the
    derived orders; ``finite_type`` is filled by the vector-field oracle
    (None means undetermined > k)."""

    n: int
    d: int
    k: int
    r1: tuple
    r2: tuple
    nondeg_order: int | None
    strong_type: int | None
    finite_type: int | None = None

    @property
    def maximally_degenerate(self):
        return all(v == self.n for v in self.r1) and \
            all(v == self.d for v in self.r2)


def degeneracy_profile(psi):
    """r1(j) = n - rank(A at order j), with the nondegeneracy order."""
    dims = psi.dims
    r1 = []
    nondeg = None
    for j in range(1, dims.k):
        rank = rank_exact(build_matrix_A(psi, j))
        r1.append(dims.n - rank)
        if nondeg is None and rank == dims.n:
            nondeg = j
    return tuple(r1), nondeg


def defect_profile(psi):
    """r2(j) = d - rank(B at order j), with the strong type order."""
    dims = psi.dims
    r2 = [dims.d]  # empty matrix at j = 1
    strong = None
    for j in range(2, dims.k + 1):
        B, _ = build_matrix_B(psi, j)
        rank = rank_exact(B)
        r2.append(dims.d - rank)
        if strong is None and rank == dims.d:
            strong = j
    return tuple(r2), strong


def profile(psi):
    """Full matrix-path invariant profile of a nonharmonic defining jet."""
    dims = psi.dims
    r1, nondeg = degeneracy_profile(psi)
    r2, strong = defect_profile(psi)
    return InvariantProfile(dims.n, dims.d, dims.k, r1, r2, nondeg, strong)


# -- dimension bound constants ------------------------------------------


def bound_constants(m, N):
    """The constants (k1, k2, k2') attached to the dimension pair (m, N).

    Requires 2 <= N < m < 2N.  k1 is given by an explicit case split; k2
    (resp. k2') is the least k with 2(m-N)*C(k+m-N-1, k-1) >= (m-N)^2+2m
    (resp. the same right side plus one).
    """
    if not (2 <= N < m < 2 * N):
        raise ValueError("need 2 <= N < m < 2N")
    if (m, N) == (3, 2):
        k1 = 3
    elif N + 2 <= m <= 2 * N - 3 and (m, N) != (7, 5):
        k1 = 1
    else:
        k1 = 2
    return k1, _least_k(m, N, (m - N) ** 2 + 2 * m), \
        _least_k(m, N, (m - N) ** 2 + 2 * m + 1)


def _least_k(m, N, rhs):
    n = m - N
    k = 1
    while 2 * n * comb(k + n - 1, k - 1) < rhs:
        k += 1
        if k > 10_000:
            raise RuntimeError("bound search did not terminate")
    return k


# -- codimension formulas for the rank strata ---------------------------


def codim_A_r(n, d, k, r):
    """Codimension of the rank-r stratum of the degeneracy matrix locus."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    nr = n - r
    return 2 * d * nr * comb(k + n - 1, k - 1) - nr * (2 * d + d * nr + 2 * r)


def minuses(n, d, k):
    """Codimension lower bound for the degenerate-jet strata."""
    return 2 * d * comb(k + n - 1, k - 1) - 2 * n - 3 * d + 2


def codim_B_r(n, d, k, r):
    """Codimension of the rank-r stratum of the defect matrix locus."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return (d - r) * max(2 * n * comb(k + n - 1, k - 1) - n * n - 2 * n - r, 0)


def pluses(n, d, k):
    """Codimension lower bound for the non-strong-type strata."""
    return max(2 * n * comb(k + n - 1, k - 1) - n * n - 2 * n - d + 1, 0)


def K_double_prime(n, k):
    """Row count of the real reduced defect matrix at order k."""
    return 2 * n * (comb(k + n - 1, k - 1) - n - 1) + n * n


def codim_query(name, *args):
    table = {
        "codim_A_r": codim_A_r,
        "minuses": minuses,
        "codim_B_r": codim_B_r,
        "pluses": pluses,
        "K2": K_double_prime,
    }
    if name not in table:
        raise ValueError("unknown codimension query %r" % name)
    return table[name](*args)


# -- brute-force independent-condition count ----------------------------


def nonharmonic_real_coordinates(n, d, k):
    """Real coordinates of the nonharmonic jet space: one per key with
    ``alpha == beta`` (real coefficient), two per conjugate pair."""
    coords = []  # (key, part) with part in {"re", "im"}; key canonical
    seen = set()
    for key in multi_indices(2 * n + d, 2, k):
        alpha, beta, gamma = key[:n], key[n:2 * n], key[2 * n:]
        if not any(alpha) or not any(beta):
            continue
        mirror = beta + alpha + gamma
        if key in seen or mirror in seen:
            continue
        seen.add(key)
        if alpha == beta:
            coords.append((key, "re"))
        else:
            coords.append((key, "re"))
            coords.append((key, "im"))
    return coords


def brute_force_codim_rank0(n, d, k):
    """Independent-condition count for the vanishing of the degeneracy
    matrix, counted directly in the real coordinates of the nonharmonic
    jet space (rank of the defining linear system)."""
    coords = nonharmonic_real_coordinates(n, d, k)
    index = {c: i for i, c in enumerate(coords)}
    unit = lambda q, size: tuple(1 if t == q else 0 for t in range(size))
    zero_d = (0,) * d
    conditions = []
    for c in range(d):
        for alpha in multi_indices(n, 1, k - 1):
            for q in range(n):
                # entry phi^c_{z_q, zbar^alpha}(0) = 0: a complex condition on
                # the coefficient at key (eps_q, alpha, 0) or its mirror
                key = unit(q, n) + alpha + zero_d
                mirror = alpha + unit(q, n) + zero_d
                for part in ("re", "im"):
                    row = [Fraction(0)] * len(coords)
                    if (key, part) in index:
                        row[index[(key, part)]] = Fraction(1)
                    elif (mirror, part) in index:
                        # conjugate coefficient: imaginary part flips sign
                        row[index[(mirror, part)]] = \
                            Fraction(-1) if part == "im" else Fraction(1)
                    elif (key, "re") in index or (mirror, "re") in index:
                        continue  # real coefficient, no imaginary condition
                    else:
                        continue  # key not present (harmonic or out of range)
                    if any(row):
                        conditions.append(row)
    return rank_exact(conditions)
