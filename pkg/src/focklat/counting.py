"""Counting and enumerating particle arrangements over cells.

Three counting regimes: distinguishable particles (every assignment of
particles to cells is its own arrangement), indistinguishable with
unrestricted occupancy (only the occupation vector matters), and
indistinguishable with single occupancy (occupation vectors that are
0/1). The classic 2-particles/2-cells instance gives 4, 3 and 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from .errors import CapExceeded

DEFAULT_ENUMERATION_CAP = 10**6


class ArrangementStatistics(Enum):
    MAXWELL_BOLTZMANN = "mb"
    BOSE_EINSTEIN = "be"
    FERMI_DIRAC = "fd"


@dataclass(frozen=True)
class CountingProblem:
    n_particles: int
    n_cells: int
    statistics: ArrangementStatistics

    def __post_init__(self):
        if self.n_particles < 0:
            raise ValueError("n_particles must be non-negative")
        if self.n_cells < 1:
            raise ValueError("n_cells must be positive")


def count_arrangements(problem: CountingProblem) -> int:
    n, k = problem.n_particles, problem.n_cells
    kind = problem.statistics
    if kind is ArrangementStatistics.MAXWELL_BOLTZMANN:
        return k**n
    if kind is ArrangementStatistics.BOSE_EINSTEIN:
        return math.comb(n + k - 1, n)
    # single occupancy: infeasible when there are more particles than cells
    return math.comb(k, n) if n <= k else 0


def _occupations_descending(n: int, k: int):
    """Occupation vectors summing to n over k cells, most-filled-first."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _occupations_descending(n - first, k - 1):
            yield (first,) + rest


def enumerate_arrangements(
    problem: CountingProblem, cap: int = DEFAULT_ENUMERATION_CAP
):
    """List every arrangement counted by :func:`count_arrangements`.

    Occupancy-style statistics yield occupation vectors (length
    ``n_cells``), emitted with the first cells filled first; the
    distinguishable case yields particle->cell assignment tuples
    (index = particle) in ascending lexicographic order.
    """
    total = count_arrangements(problem)
    if total > cap:
        raise CapExceeded(f"{total} arrangements exceed the cap of {cap}")
    n, k = problem.n_particles, problem.n_cells
    kind = problem.statistics
    if kind is ArrangementStatistics.MAXWELL_BOLTZMANN:
        return list(itertools.product(range(k), repeat=n))
    if kind is ArrangementStatistics.BOSE_EINSTEIN:
        return list(_occupations_descending(n, k))
    arrangements = []
    for cells in itertools.combinations(range(k), n):
        occupation = [0] * k
        for c in cells:
            occupation[c] = 1
        arrangements.append(tuple(occupation))
    return arrangements
