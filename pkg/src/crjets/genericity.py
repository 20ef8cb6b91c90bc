"""Desk-scale genericity and deformation experiments.

Random nonharmonic jets with exact rational coefficients, explicit
rank-stratum witnesses and their closure perturbations, one-parameter
deformation sweeps over basepoint grids, and the exact transversality
rank of the normalized-coefficient map at the origin.  Everything is
seeded and deterministic; reports are canonically ordered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .invariants import InvariantProfile, build_matrix_A, profile
from .jets import DefiningJet, Dimensions, Jet, multi_indices
from .linalg import rank_exact
from .normalform import ChartError, eliminate_harmonic, recentre
from .scalars import GQ, ZERO, DualGQ
from .series import Series


def _random_fraction(rng):
    # bounded, never zero: numerator in +-{1..9}, denominator in {1..4}
    num = rng.randint(1, 9) * rng.choice((1, -1))
    return Fraction(num, rng.randint(1, 4))


def _random_gq(rng, real=False):
    if real:
        return GQ(_random_fraction(rng))
    return GQ(_random_fraction(rng), _random_fraction(rng))


def sample_jet(dims, seed):
    """Deterministic random nonharmonic defining jet.

    Every canonical nonharmonic coefficient is drawn from a bounded
    nonzero rational distribution; conjugation symmetry is enforced by
    mirroring.  An all-zero draw cannot occur (coefficients are nonzero
    by construction) but is guarded against anyway.
    """
    rng = random.Random(f"sample_jet:{dims.n}:{dims.d}:{dims.k}:{seed}")
    n, d, k = dims.n, dims.d, dims.k
    comps = []
    for _c in range(d):
        table = {}
        for key in multi_indices(dims.m, 2, k):
            alpha, beta, gamma = key[:n], key[n:2 * n], key[2 * n:]
            if not any(alpha) or not any(beta):
                continue
            mirror = beta + alpha + gamma
            if mirror in table or key in table:
                continue
            if alpha == beta:
                table[key] = _random_gq(rng, real=True)
            else:
                c = _random_gq(rng)
                table[key] = c
                table[mirror] = c.conj()
        comps.append(Jet(dims, Series(dims.m, k, table)))
    out = DefiningJet(dims, comps)
    if out.is_zero():
        return sample_jet(dims, seed + 10_000_019)
    return out


def stratum_witness(dims, rank):
    """A nonharmonic jet whose degeneracy matrix has exactly this rank.

    Construction: Hermitian part ``sum_{l <= rank} z_l zbar_l`` in the
    first component; for rank 0 a quartic ``z_1^2 zbar_1^2`` (or the zero
    jet when the order does not admit it).
    """
    n, d, k = dims.n, dims.d, dims.k
    if not 0 <= rank <= n:
        raise ValueError("target rank out of range")
    table = {}
    if rank == 0:
        if k >= 4:
            key = tuple(2 if t == 0 else 0 for t in range(n)) * 2 + (0,) * d
            table[key] = GQ(1)
    else:
        for l in range(rank):
            key = tuple(1 if t == l else 0 for t in range(n)) * 2 + (0,) * d
            table[key] = GQ(1)
    comps = [Jet(dims, Series(dims.m, k, table))]
    comps.extend(Jet.zero(dims) for _ in range(d - 1))
    psi = DefiningJet(dims, comps)
    assert rank_exact(build_matrix_A(psi, k - 1)) == rank
    return psi


DEFAULT_EPSILONS = tuple(Fraction(1, 2 ** t) for t in range(1, 9))


@dataclass(frozen=True)
class PerturbationRecord:
    base_rank: int
    target_rank: int
    epsilons: tuple
    ranks: tuple

    @property
    def ok(self):
        return all(r == self.target_rank for r in self.ranks)


def closure_perturb(psi, target_rank, epsilons=DEFAULT_EPSILONS):
    """Perturb a rank-c witness by ``eps * (sum_{l<=r} z_l zbar_l, 0..)``
    and record the exact rank at every tested epsilon.

    Realizes the closure relation of the rank stratification: the rank
    jumps to the target for every nonzero epsilon of the schedule.
    """
    dims = psi.dims
    n, k = dims.n, dims.k
    base_rank = rank_exact(build_matrix_A(psi, k - 1))
    if not base_rank <= target_rank <= n:
        raise ValueError("target rank must lie in [rank(psi), n]")
    table = {}
    for l in range(target_rank):
        key = tuple(1 if t == l else 0 for t in range(n)) * 2 + (0,) * dims.d
        table[key] = GQ(1)
    bump = Jet(dims, Series(dims.m, k, table))
    ranks = []
    for eps in epsilons:
        comps = list(psi.components)
        comps[0] = comps[0] + bump * GQ(eps)
        perturbed = DefiningJet(dims, comps)
        ranks.append(rank_exact(build_matrix_A(perturbed, k - 1)))
    return PerturbationRecord(base_rank, target_rank, tuple(epsilons),
                              tuple(ranks))


# -- deformation sweeps -------------------------------------------------


@dataclass(frozen=True)
class DeformationFamily:
    """Graph family ``Im w = base + t * direction`` over exact grids."""

    base: DefiningJet          # polynomial defining jet (untruncated)
    direction: tuple           # d-tuple of real polynomial jets
    t_grid: tuple              # exact rational parameters, 0 allowed
    basepoints: tuple          # (z0 tuple, s0 tuple) pairs


@dataclass(frozen=True)
class SweepEntry:
    t: Fraction
    basepoint: tuple
    chart_ok: bool
    profile: InvariantProfile | None


@dataclass(frozen=True)
class SweepReport:
    dims: Dimensions
    entries: tuple

    @property
    def degenerate_count(self):
        return sum(1 for e in self.entries
                   if e.profile is not None and e.profile.nondeg_order is None)

    @property
    def non_strong_type_count(self):
        return sum(1 for e in self.entries
                   if e.profile is not None and e.profile.strong_type is None)


def deform_sweep(family):
    """Profile of every (t, basepoint) member of the family.

    Each entry recentres the perturbed graph at the basepoint, normalizes
    it and records the matrix-path profile; chart failures are flagged
    per entry rather than aborting the sweep.  Entries are ordered by t,
    then by the given basepoint order.
    """
    dims = family.base.dims
    entries = []
    for t in sorted(family.t_grid):
        comps = [family.base.components[c] + family.direction[c] * GQ(t)
                 for c in range(dims.d)]
        phi_t = DefiningJet(dims, comps)
        for bp in family.basepoints:
            z0 = tuple(GQ(x) if not isinstance(x, GQ) else x for x in bp[0])
            s0 = tuple(Fraction(x) for x in bp[1])
            try:
                centred = recentre(phi_t, (z0, s0))
                _, psi = eliminate_harmonic(centred)
                entry = SweepEntry(Fraction(t), (z0, s0), True, profile(psi))
            except ChartError:
                entry = SweepEntry(Fraction(t), (z0, s0), False, None)
            entries.append(entry)
    return SweepReport(dims, tuple(entries))


def lattice_basepoints(dims, values=(Fraction(-1, 4), Fraction(0),
                                     Fraction(1, 4))):
    """Small rational lattice of basepoints near the origin: the given
    values swept over all m real coordinates (x, y, s)."""
    import itertools
    n, d = dims.n, dims.d
    pts = []
    for combo in itertools.product(values, repeat=dims.m):
        z0 = tuple(GQ(combo[j], combo[n + j]) for j in range(n))
        s0 = tuple(combo[2 * n + c] for c in range(d))
        pts.append((z0, s0))
    return tuple(pts)


# -- transversality rank of the normalized-coefficient map ---------------


def mu_transversality_rank(phi):
    """Exact rank at the origin of the basepoint-to-normalized-coefficients
    map (hypersurfaces in C^2 only).

    The map sends a basepoint (x, y, s) to the three real coefficients
    ``psi_{z zbar}(0)``, ``Re psi_{z^2 zbar}(0)``, ``Im psi_{z^2 zbar}(0)``
    of the order-3 normalized defining jet at that point.  Its Jacobian is
    obtained by carrying first-order dual numbers through the exact
    recentre-and-normalize pipeline, then the rank is computed exactly.
    """
    if phi.dims.n != 1 or phi.dims.d != 1:
        raise ValueError("transversality rank is defined for n = d = 1")
    k = 3
    dims = Dimensions(1, 1, k)
    npart = 3  # partials in (x, y, s)

    def lift(c):
        return DualGQ.lift(c, npart)

    comps = []
    for comp in phi.components:
        comps.append(Jet(dims, Series(dims.m, comp.series.order,
                                      {key: lift(c) for key, c
                                       in comp.series.coeffs.items()})))
    phi_dual = DefiningJet(dims, comps, check=False)

    z0 = DualGQ(ZERO, (GQ(1), GQ(0, 1), ZERO))   # x + i y
    s0 = DualGQ(ZERO, (ZERO, ZERO, GQ(1)))
    centred = recentre(phi_dual, ((z0,), (s0,)))
    _, psi = eliminate_harmonic(centred)
    c11 = psi.components[0].coeff((1,), (1,), (0,))
    c21 = psi.components[0].derivative_at_zero((2,), (1,), (0,))
    if not isinstance(c11, DualGQ):
        c11 = lift(c11)
    if not isinstance(c21, DualGQ):
        c21 = lift(c21)
    jacobian = [
        [g.re for g in c11.grad],
        [g.re for g in c21.grad],
        [g.im for g in c21.grad],
    ]
    return rank_exact(jacobian)


# -- bulk trials ---------------------------------------------------------


@dataclass(frozen=True)
class TrialSummary:
    dims: Dimensions
    sample_count: int
    seed: int
    degenerate: int
    non_strong_type: int


def genericity_trial(dims, sample_count, seed):
    """Count degenerate / non-strong-type samples among seeded random
    nonharmonic jets (the expected count is zero: the bad loci are proper
    algebraic subsets and the sampling is exact)."""
    degenerate = 0
    non_strong = 0
    for i in range(sample_count):
        psi = sample_jet(dims, seed + i)
        p = profile(psi)
        if p.nondeg_order is None:
            degenerate += 1
        if p.strong_type is None:
            non_strong += 1
    return TrialSummary(dims, sample_count, seed, degenerate, non_strong)
