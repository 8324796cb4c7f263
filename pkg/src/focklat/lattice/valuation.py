"""Two-valued valuations: per-block homomorphisms that agree on overlaps.

A Boolean block admits exactly one homomorphism onto {0, 1} per atom
(send the chosen atom, and everything above it, to 1). A global
valuation picks one such homomorphism per maximal block so that any two
agree wherever their blocks overlap. For diagrams this collapses to a
crisp constraint problem on the atoms: exactly one true atom per block.
Nonexistence of a solution is the finite, checkable face of
contextuality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .build import GreechieDiagram
from .core import Lattice, block_atoms, blocks


@dataclass(frozen=True)
class BooleanHomomorphism:
    """A {0,1}-valued map on a Boolean sublattice, given by element id."""

    domain: frozenset
    assignment: dict

    def __post_init__(self):
        object.__setattr__(self, "domain", frozenset(self.domain))
        object.__setattr__(self, "assignment", dict(self.assignment))
        if set(self.assignment) != set(self.domain):
            raise ValueError("assignment keys must equal the domain")

    def __call__(self, element: int) -> int:
        return self.assignment[element]

    def violations(self, lat: Lattice):
        """Ways this map fails to be a homomorphism on its domain."""
        v = []
        a = self.assignment
        if a.get(lat.bottom) != 0:
            v.append("bottom not sent to 0")
        if a.get(lat.top) != 1:
            v.append("top not sent to 1")
        for x in self.domain:
            if a[x] not in (0, 1):
                v.append(f"non-binary value at {lat.names[x]!r}")
            if a[lat.ortho(x)] != 1 - a[x]:
                v.append(f"complement law fails at {lat.names[x]!r}")
            for y in self.domain:
                if a[lat.meet(x, y)] != (a[x] & a[y]):
                    v.append(
                        f"meet not preserved at ({lat.names[x]!r}, {lat.names[y]!r})"
                    )
                if a[lat.join(x, y)] != (a[x] | a[y]):
                    v.append(
                        f"join not preserved at ({lat.names[x]!r}, {lat.names[y]!r})"
                    )
        return v


@dataclass(frozen=True)
class GlobalValuation:
    """One Boolean homomorphism per maximal block, agreeing on overlaps."""

    per_block: tuple

    def as_map(self) -> dict:
        merged = {}
        for hom in self.per_block:
            merged.update(hom.assignment)
        return merged

    def true_atoms(self, lat: Lattice):
        merged = self.as_map()
        return tuple(
            sorted(
                (x for x in lat.atoms() if merged.get(x) == 1),
                key=lambda x: lat.names[x],
            )
        )

    def violations(self, lat: Lattice):
        v = []
        for hom in self.per_block:
            v.extend(hom.violations(lat))
        for i in range(len(self.per_block)):
            for j in range(i + 1, len(self.per_block)):
                h1, h2 = self.per_block[i], self.per_block[j]
                for x in h1.domain & h2.domain:
                    if h1(x) != h2(x):
                        v.append(
                            f"blocks {i} and {j} disagree at {lat.names[x]!r}"
                        )
        return v


def _hom_from_atom(lat: Lattice, block, chosen_atom: int) -> BooleanHomomorphism:
    assignment = {x: (1 if lat.leq(chosen_atom, x) else 0) for x in block}
    return BooleanHomomorphism(frozenset(block), assignment)


def _search(lat: Lattice, block_list, atom_lists, forced):
    """Depth-first search for a consistent choice of one atom per block.

    ``forced`` maps element ids to required values; it doubles as the
    overlap-consistency store while the search runs. Blocks are visited
    in the given order and atoms in the given per-block order, so the
    first solution found is the canonical one.
    """
    assigned = dict(forced)
    choice = []

    def fits(block, atom):
        for x in block:
            value = 1 if lat.leq(atom, x) else 0
            if x in assigned and assigned[x] != value:
                return False
        return True

    def place(depth):
        if depth == len(block_list):
            return True
        block = block_list[depth]
        for atom in atom_lists[depth]:
            if not fits(block, atom):
                continue
            added = []
            for x in block:
                if x not in assigned:
                    assigned[x] = 1 if lat.leq(atom, x) else 0
                    added.append(x)
            choice.append(atom)
            if place(depth + 1):
                return True
            choice.pop()
            for x in added:
                del assigned[x]
        return False

    if not place(0):
        return None
    return GlobalValuation(
        per_block=tuple(
            _hom_from_atom(lat, block_list[i], choice[i])
            for i in range(len(block_list))
        )
    )


def exists_global_valuation(lat: Lattice):
    """First global valuation in canonical order, or None.

    Canonical order: blocks as returned by :func:`blocks` (sorted by
    member names), atoms within a block by name.
    """
    block_list = blocks(lat)
    atom_lists = [block_atoms(lat, b) for b in block_list]
    forced = {lat.bottom: 0, lat.top: 1}
    return _search(lat, block_list, atom_lists, forced)


def search_with_constraints(lat: Lattice, forced: dict):
    """Like :func:`exists_global_valuation` with pre-pinned element values."""
    block_list = blocks(lat)
    atom_lists = [block_atoms(lat, b) for b in block_list]
    merged = {lat.bottom: 0, lat.top: 1}
    merged.update(forced)
    if merged.get(lat.bottom) != 0 or merged.get(lat.top) != 1:
        return None
    return _search(lat, block_list, atom_lists, merged)


def greechie_valuation_fast(diagram: GreechieDiagram):
    """Diagram-level search: one true atom per block, no lattice built.

    Returns the first solution with atoms considered in name order and
    the value 1 tried before 0, as a name -> {0,1} map; None when the
    constraints are unsatisfiable. Existence agrees with the
    lattice-level search whenever the diagram pastes successfully.
    """
    diagram.validate()
    atoms = sorted(diagram.atoms)
    blocks_of = {a: [] for a in atoms}
    for bi, block in enumerate(diagram.blocks):
        for a in block:
            blocks_of[a].append(bi)
    block_sets = [tuple(b) for b in diagram.blocks]
    true_count = [0] * len(block_sets)
    unassigned = [len(b) for b in block_sets]
    value = {}

    def consistent_block(bi) -> bool:
        if true_count[bi] > 1:
            return False
        if unassigned[bi] == 0 and true_count[bi] != 1:
            return False
        return True

    def assign(atom, val) -> bool:
        value[atom] = val
        ok = True
        for bi in blocks_of[atom]:
            unassigned[bi] -= 1
            true_count[bi] += val
            if not consistent_block(bi):
                ok = False
        return ok

    def retract(atom, val):
        del value[atom]
        for bi in blocks_of[atom]:
            unassigned[bi] += 1
            true_count[bi] -= val

    def place(i) -> bool:
        if i == len(atoms):
            return all(c == 1 for c in true_count)
        atom = atoms[i]
        for val in (1, 0):
            ok = assign(atom, val)
            if ok and place(i + 1):
                return True
            retract(atom, val)
        return False

    if not place(0):
        return None
    return {a: value[a] for a in atoms}


def parity_obstructed(diagram: GreechieDiagram) -> bool:
    """Counting witness that no valuation can exist.

    When every atom sits in exactly two blocks, summing "number of true
    atoms" over blocks counts each true atom twice, so the block count
    must be even; an odd block count is therefore a contradiction. This
    is an oracle independent of any search.
    """
    degrees = diagram.atom_degrees()
    if any(d != 2 for d in degrees.values()):
        return False
    return len(diagram.blocks) % 2 == 1
