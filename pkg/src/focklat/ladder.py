"""Ladder operators and particle-number queries.

The creation operator prepends a mode and recanonicalizes; there are no
square-root normalization factors anywhere. Annihilation is its formal
adjoint under the permutation-sum products: remove the mode at each of
its occurrences, with alternating signs for fermions. For a boson this
collapses to "occupation times the reduced ket"; for a fermion on a
distinct-mode ket it is the usual signed single removal, and on a
doubly occupied ket the signed occurrences cancel, which is exactly
what the adjoint identity demands.
"""

from __future__ import annotations

from .errors import ZeroVector
from .exact import ExactComplex
from .states import OccupationState, Statistics
from .vectors import FockVector


def create(mode: int, v: FockVector) -> FockVector:
    """Apply the creation operator for ``mode`` to every term."""

    def prepend(state: OccupationState):
        raw = (mode,) + state.modes
        yield OccupationState.from_raw(raw, state.statistics), 1

    return v.map_terms(prepend)


def annihilate(mode: int, v: FockVector) -> FockVector:
    """Apply the annihilation operator for ``mode`` (adjoint of create)."""

    def remove(state: OccupationState):
        fermionic = state.statistics is Statistics.FERMION
        for k, m in enumerate(state.modes):
            if m == mode:
                reduced = state.modes[:k] + state.modes[k + 1 :]
                sign = -1 if (fermionic and k % 2) else 1
                yield OccupationState(reduced, state.statistics), sign

    return v.map_terms(remove)


def number_operator(mode: int, v: FockVector) -> FockVector:
    """Scale each term by its occupation of ``mode``.

    Agrees with create(mode, annihilate(mode, v)) up to similarity, and
    exactly on every term without a repeated fermionic mode.
    """

    def scale(state: OccupationState):
        occ = state.occupation(mode)
        if occ:
            yield state, occ

    return v.map_terms(scale)


def particle_number(v: FockVector):
    """Total occupation shared by all terms, or None if they disagree.

    A superposition that mixes particle-number sectors has no definite
    count, so the query deliberately has no numeric answer there.
    """
    if v.is_zero():
        raise ZeroVector("the zero vector has no particle number")
    numbers = v.particle_numbers()
    if len(numbers) == 1:
        return numbers.pop()
    return None
