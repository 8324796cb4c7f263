"""Occupation-number basis states.

A basis ket ``|i1,...,in)`` records which single-particle modes are
occupied, with multiplicity, and nothing else: there are no particle
labels anywhere in the representation. Bosonic kets are plain multisets
of mode indices; fermionic kets additionally remember the sign picked up
when an input ordering is rearranged into the canonical (sorted) one.

Fermionic kets with a repeated mode are kept as first-class values; they
turn out to have vanishing inner product with everything (see
``focklat.products``), which is how exclusion shows up here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import StatisticsMismatch


class Statistics(Enum):
    BOSON = "boson"
    FERMION = "fermion"


def sort_sign(modes) -> int:
    """Parity (+1/-1) of the stable sort taking ``modes`` to sorted order.

    Counts strict inversions, so equal entries never contribute: the sign
    of a sequence with repeats is the sign of the permutation that sorts
    it while preserving the relative order of equal entries.
    """
    inversions = 0
    for i in range(len(modes)):
        for j in range(i + 1, len(modes)):
            if modes[i] > modes[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class OccupationState:
    """A canonical occupation-number ket.

    ``modes`` is always sorted non-decreasing. ``canonical_sign`` records
    the parity relating the ordering this state was built from to the
    stored sorted ordering; it is +1 for bosons by construction and is
    absorbed into coefficients whenever the state is used as a basis key.
    """

    modes: tuple
    statistics: Statistics
    canonical_sign: int = 1

    def __post_init__(self):
        if any(m < 0 or not isinstance(m, int) for m in self.modes):
            raise ValueError("mode indices must be non-negative integers")
        if list(self.modes) != sorted(self.modes):
            raise ValueError("modes must be stored sorted; use from_raw()")
        if self.canonical_sign not in (1, -1):
            raise ValueError("canonical_sign must be +1 or -1")
        if self.statistics is Statistics.BOSON and self.canonical_sign != 1:
            raise ValueError("bosonic states always carry sign +1")

    @classmethod
    def from_raw(cls, modes, statistics: Statistics) -> "OccupationState":
        """Build a state from an arbitrarily ordered mode sequence."""
        modes = tuple(int(m) for m in modes)
        sign = sort_sign(modes) if statistics is Statistics.FERMION else 1
        return cls(tuple(sorted(modes)), statistics, sign)

    @classmethod
    def vacuum(cls, statistics: Statistics) -> "OccupationState":
        return cls((), statistics)

    def with_sign(self, sign: int) -> "OccupationState":
        return OccupationState(self.modes, self.statistics, sign)

    @property
    def n_particles(self) -> int:
        return len(self.modes)

    def occupation(self, mode: int) -> int:
        return self.modes.count(mode)

    def occupation_map(self) -> dict:
        """Mode index -> occupation number, for the occupied modes."""
        occ = {}
        for m in self.modes:
            occ[m] = occ.get(m, 0) + 1
        return occ

    def support(self) -> frozenset:
        """The set of occupied modes (occupation numbers forgotten)."""
        return frozenset(self.modes)

    def has_repeat(self) -> bool:
        return len(set(self.modes)) != len(self.modes)

    def __str__(self):
        body = ",".join(str(m) for m in self.modes)
        ket = f"|{body})"
        return ket if self.canonical_sign == 1 else f"-{ket}"


def canonicalize(raw_modes, statistics: Statistics):
    """Canonical state for a raw mode sequence, plus the relating sign.

    The returned state carries sign +1; the second component is +1 for
    bosons and the sorting parity for fermions. Canonical input maps to
    itself with sign +1.
    """
    state = OccupationState.from_raw(raw_modes, statistics)
    return state.with_sign(1), state.canonical_sign


def require_same_statistics(*objs):
    stats = {o.statistics for o in objs}
    if len(stats) > 1:
        raise StatisticsMismatch(
            "mixed statistics: " + ", ".join(sorted(s.value for s in stats))
        )


def canonical_states(n_particles: int, modes, statistics: Statistics):
    """All canonical basis states with ``n_particles`` drawn from ``modes``.

    Fermionic states with repeated modes are included; they are legal
    basis keys (with null norm). Ordering is deterministic:
    non-decreasing mode tuples in lexicographic order.
    """
    modes = sorted(set(modes))
    return [
        OccupationState(combo, statistics)
        for combo in itertools.combinations_with_replacement(modes, n_particles)
    ]
