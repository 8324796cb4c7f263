"""Reference construction over labeled particle slots.

This module rebuilds many-particle states the conventional way: a ket is
a length-n tuple assigning a mode to each (labeled) particle slot, the
product basis is orthonormal, and physical states are images of the
(anti)symmetrizer. It deliberately shares no machinery with the
occupation-number implementation beyond the scalar type, so the two
constructions can check each other: for n-particle kets the symmetrized
product equals n! times the permutation-sum product.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import SectorMismatch, StatisticsMismatch
from .exact import ExactComplex
from .states import OccupationState, Statistics
from .vectors import FockVector
from .products import inner


def permutation_parity(perm) -> int:
    """+1 for even, -1 for odd, via cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class LabeledVector:
    """Finite combination of labeled product-basis kets of one length."""

    __slots__ = ("terms", "n_particles")

    def __init__(self, n_particles: int, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        collected = {}
        for key, coeff in items:
            key = tuple(key)
            if len(key) != n_particles:
                raise ValueError(
                    f"slot tuple {key} does not have length {n_particles}"
                )
            coeff = ExactComplex.coerce(coeff)
            collected[key] = collected.get(key, ExactComplex(0)) + coeff
        object.__setattr__(
            self,
            "terms",
            {k: c for k, c in collected.items() if not c.is_zero()},
        )
        object.__setattr__(self, "n_particles", n_particles)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledVector is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LabeledVector):
            return NotImplemented
        return self.n_particles == other.n_particles and self.terms == other.terms

    def scaled(self, scalar) -> "LabeledVector":
        scalar = ExactComplex.coerce(scalar)
        return LabeledVector(
            self.n_particles, {k: c * scalar for k, c in self.terms.items()}
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            parts.append(f"{self.terms[key]}*|{','.join(map(str, key))}>")
        return " + ".join(parts)


def symmetrize(state: OccupationState) -> LabeledVector:
    """Sum of all slot relabelings, signed for fermions, unnormalized.

    All n! permutations contribute, so repeated modes accumulate
    multiplicity for bosons and cancel outright for fermions.
    """
    modes = state.modes
    n = len(modes)
    terms = []
    for perm in itertools.permutations(range(n)):
        key = tuple(modes[perm[k]] for k in range(n))
        if state.statistics is Statistics.FERMION:
            coeff = permutation_parity(perm) * state.canonical_sign
        else:
            coeff = 1
        terms.append((key, ExactComplex(coeff)))
    return LabeledVector(n, terms)


def labeled_inner(u: LabeledVector, v: LabeledVector) -> ExactComplex:
    """Orthonormal product-basis pairing, conjugate-linear on the left."""
    if u.n_particles != v.n_particles:
        return ExactComplex(0)
    total = ExactComplex(0)
    for key, cu in u.terms.items():
        cv = v.terms.get(key)
        if cv is not None:
            total = total + cu.conjugate() * cv
    return total


@dataclass(frozen=True)
class InnerComparison:
    """Both products on one pair of kets, and the n!-bridging verdict."""

    vq: ExactComplex
    labeled: ExactComplex
    n_particles: int
    sector_factor: int  # n!, the constant relating the two conventions
    ratio_ok: bool


def compare_inner(a: OccupationState, b: OccupationState) -> InnerComparison:
    """Check labeled == n! * permutation-sum on a pair of basis kets."""
    if a.statistics is not b.statistics:
        raise StatisticsMismatch("cannot compare kets of different statistics")
    if a.n_particles != b.n_particles:
        raise SectorMismatch(
            f"particle numbers differ: {a.n_particles} vs {b.n_particles}"
        )
    stats = a.statistics
    vq = inner(
        FockVector(stats, [(a, ExactComplex(1))]),
        FockVector(stats, [(b, ExactComplex(1))]),
    )
    lab = labeled_inner(symmetrize(a), symmetrize(b))
    factor = math.factorial(a.n_particles)
    return InnerComparison(
        vq=vq,
        labeled=lab,
        n_particles=a.n_particles,
        sector_factor=factor,
        ratio_ok=(lab == vq * factor),
    )
