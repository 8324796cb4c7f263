"""The two permutation-sum inner products, null vectors, and similarity.

On basis kets the bosonic product sums a product of mode-index deltas
over all permutations of one ket's indices (a matrix permanent in
disguise); the fermionic product weights each permutation with its sign
(a determinant). Both extend sesquilinearly, conjugate-linear in the
LEFT argument.

The fermionic form is degenerate: kets with a doubly occupied mode have
vanishing product with everything. ``is_null`` decides membership in
that radical exactly, and ``similar`` identifies vectors that differ by
a radical element only.
"""

from __future__ import annotations

import itertools

from .errors import StatisticsMismatch
from .exact import ExactComplex
from .states import OccupationState, Statistics, canonical_states
from .vectors import FockVector

_PERM_SIGNS = {}


def _permutations_with_sign(n: int):
    """All permutations of range(n) with their parity, cached."""
    if n not in _PERM_SIGNS:
        perms = []
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            perms.append((perm, sign))
        _PERM_SIGNS[n] = tuple(perms)
    return _PERM_SIGNS[n]


def basis_inner(a: OccupationState, b: OccupationState) -> int:
    """Permutation-sum product of two same-statistics basis kets.

    Returns an int (the value is always integral on basis kets); vanishes
    when the particle numbers differ. Signs carried by the states flow
    into the result.
    """
    if a.statistics is not b.statistics:
        raise StatisticsMismatch("cannot pair boson and fermion kets")
    if a.n_particles != b.n_particles:
        return 0
    n = a.n_particles
    fermionic = a.statistics is Statistics.FERMION
    total = 0
    for perm, sign in _permutations_with_sign(n):
        if all(a.modes[k] == b.modes[perm[k]] for k in range(n)):
            total += sign if fermionic else 1
    return total * a.canonical_sign * b.canonical_sign


def boson_inner(u: FockVector, v: FockVector) -> ExactComplex:
    """Symmetric permutation-sum product, extended sesquilinearly."""
    _require(u, v, Statistics.BOSON)
    return _sesquilinear(u, v)


def fermion_inner(u: FockVector, v: FockVector) -> ExactComplex:
    """Antisymmetric (signed) permutation-sum product."""
    _require(u, v, Statistics.FERMION)
    return _sesquilinear(u, v)


def inner(u: FockVector, v: FockVector, statistics: Statistics = None) -> ExactComplex:
    """Dispatch to the product matching the vectors' statistics."""
    if statistics is not None and (
        u.statistics is not statistics or v.statistics is not statistics
    ):
        raise StatisticsMismatch(
            f"expected {statistics.value} vectors, got "
            f"{u.statistics.value} and {v.statistics.value}"
        )
    if u.statistics is Statistics.BOSON:
        return boson_inner(u, v)
    return fermion_inner(u, v)


def _require(u: FockVector, v: FockVector, statistics: Statistics):
    if u.statistics is not statistics or v.statistics is not statistics:
        raise StatisticsMismatch(
            f"expected two {statistics.value} vectors, got "
            f"{u.statistics.value} and {v.statistics.value}"
        )


def _sesquilinear(u: FockVector, v: FockVector) -> ExactComplex:
    # Group by particle number first: cross-sector pairings vanish.
    total = ExactComplex(0)
    v_by_n = {}
    for t, c in v.terms.items():
        v_by_n.setdefault(t.n_particles, []).append((t, c))
    for s, cs in u.terms.items():
        for t, ct in v_by_n.get(s.n_particles, ()):
            pairing = basis_inner(s, t)
            if pairing:
                total = total + cs.conjugate() * ct * pairing
    return total


def norm_squared(v: FockVector) -> ExactComplex:
    """Self-product; always real and non-negative here."""
    return inner(v, v)


def is_null(v: FockVector) -> bool:
    """True iff v has vanishing product with every vector.

    Checked against the finitely many canonical basis kets that share a
    particle number and draw their modes from v's support; those span
    every sector a term of v can pair with, so the check is exact.
    """
    if v.is_zero():
        return True
    modes = sorted(v.support_modes())
    for n in sorted(v.particle_numbers()):
        for b in canonical_states(n, modes, v.statistics):
            probe = FockVector(v.statistics, [(b, ExactComplex(1))])
            if not inner(probe, v).is_zero():
                return False
    return True


def similar(u: FockVector, v: FockVector) -> bool:
    """True iff u and v differ by a combination of null-norm vectors."""
    if u.statistics is not v.statistics:
        raise StatisticsMismatch("cannot compare boson and fermion vectors")
    return is_null(u - v)
