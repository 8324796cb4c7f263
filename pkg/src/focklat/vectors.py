"""Finite linear combinations of occupation-number states.

A :class:`FockVector` is a finitely supported map from canonical basis
states to exact complex coefficients. The empty map is the zero vector.
Stored keys always carry sign +1: any sign held by an input state is
absorbed into its coefficient on construction, and zero coefficients are
pruned, so equality of vectors is plain dictionary equality.
"""

from __future__ import annotations

from types import MappingProxyType

from .errors import StatisticsMismatch
from .exact import ExactComplex
from .states import OccupationState, Statistics, require_same_statistics


class FockVector:
    """An immutable vector in the occupation-number state space."""

    __slots__ = ("_terms", "statistics")

    def __init__(self, statistics: Statistics, terms=()):
        """``terms``: mapping or iterable of (OccupationState, coefficient)."""
        collected = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for state, coeff in items:
            if state.statistics is not statistics:
                raise StatisticsMismatch(
                    f"{state.statistics.value} state in a "
                    f"{statistics.value} vector"
                )
            coeff = ExactComplex.coerce(coeff)
            if state.canonical_sign != 1:
                coeff = coeff * state.canonical_sign
                state = state.with_sign(1)
            if state in collected:
                collected[state] = collected[state] + coeff
            else:
                collected[state] = coeff
        object.__setattr__(
            self,
            "_terms",
            {s: c for s, c in collected.items() if not c.is_zero()},
        )
        object.__setattr__(self, "statistics", statistics)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def zero(cls, statistics: Statistics) -> "FockVector":
        return cls(statistics)

    @classmethod
    def basis(cls, modes, statistics: Statistics) -> "FockVector":
        """Unit-coefficient vector on the canonical state of ``modes``.

        The input ordering matters for fermions: an odd rearrangement
        shows up as a -1 coefficient.
        """
        state = OccupationState.from_raw(modes, statistics)
        return cls(statistics, [(state, ExactComplex(1))])

    @classmethod
    def vacuum(cls, statistics: Statistics) -> "FockVector":
        return cls.basis((), statistics)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, state: OccupationState) -> ExactComplex:
        if state.canonical_sign != 1:
            coeff = self._terms.get(state.with_sign(1), ExactComplex(0))
            return coeff * state.canonical_sign
        return self._terms.get(state, ExactComplex(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms, key=lambda s: (len(s.modes), s.modes)))

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.statistics is other.statistics and self._terms == other._terms

    def __hash__(self):
        return hash(
            (self.statistics, frozenset(self._terms.items()))
        )

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        require_same_statistics(self, other)
        merged = dict(self._terms)
        for state, coeff in other._terms.items():
            merged[state] = merged.get(state, ExactComplex(0)) + coeff
        return FockVector(self.statistics, merged)

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FockVector(
            self.statistics,
            {s: -c for s, c in self._terms.items()},
        )

    def __mul__(self, scalar):
        scalar = ExactComplex.coerce(scalar)
        return FockVector(
            self.statistics,
            {s: c * scalar for s, c in self._terms.items()},
        )

    __rmul__ = __mul__

    def map_terms(self, fn) -> "FockVector":
        """Linear extension of ``fn``: state -> iterable of (state, coeff).

        Each output contribution is scaled by the input coefficient.
        """
        out = []
        for state, coeff in self._terms.items():
            for new_state, factor in fn(state):
                out.append((new_state, coeff * ExactComplex.coerce(factor)))
        return FockVector(self.statistics, out)

    def particle_numbers(self) -> set:
        """Total occupations present among the terms."""
        return {s.n_particles for s in self._terms}

    def support_modes(self) -> frozenset:
        """Union of occupied modes over all terms."""
        modes = frozenset()
        for state in self._terms:
            modes |= state.support()
        return modes

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for state in self:
            coeff = self._terms[state]
            if coeff == ExactComplex(1):
                parts.append(str(state))
            else:
                parts.append(f"{coeff}*{state}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockVector({self.statistics.value}: {self})"
