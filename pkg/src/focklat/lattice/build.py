"""Constructors for finite orthomodular lattices.

Besides the stock families (powerset algebras, horizontal sums MOn,
direct products) this module pastes orthogonality diagrams: named atoms
grouped into blocks, each block standing for the Boolean algebra of a
maximal family of mutually exclusive alternatives. Blocks are glued
along shared atoms (and the complements of shared atoms). Diagrams
whose pasting fails the lattice or orthomodular laws are rejected as
is; nothing is repaired behind the caller's back.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from ..errors import InvalidDiagram, NotOrthomodular, SizeExceeded
from .core import Lattice, verify_oml

MAX_BOOLEAN_ATOMS = 6
MAX_PRODUCT_SIZE = 4096
_ATOM_LETTERS = "abcdef"


def boolean_lattice(n: int) -> Lattice:
    """The powerset algebra on n named atoms (2^n elements)."""
    if not 1 <= n <= MAX_BOOLEAN_ATOMS:
        raise SizeExceeded(
            f"boolean_lattice supports 1..{MAX_BOOLEAN_ATOMS} atoms, got {n}"
        )
    size = 1 << n
    full = size - 1

    def name(mask: int) -> str:
        if mask == 0:
            return "0"
        if mask == full:
            return "1"
        return "+".join(_ATOM_LETTERS[i] for i in range(n) if mask >> i & 1)

    names = [name(m) for m in range(size)]
    down = [[s for s in range(size) if s & m == s] for m in range(size)]
    meet_t = [[a & b for b in range(size)] for a in range(size)]
    join_t = [[a | b for b in range(size)] for a in range(size)]
    ortho_t = [full ^ m for m in range(size)]
    return Lattice(names, down, meet_t, join_t, ortho_t, 0, full)


def chain2() -> Lattice:
    """The two-element lattice {0, 1}."""
    return boolean_lattice(1)


def mo(n: int) -> Lattice:
    """Horizontal sum of n complementary pairs: 0, 1 and 2n side atoms.

    mo(1) is the four-element Boolean algebra; for n >= 2 the result is
    the standard small non-distributive orthomodular lattice.
    """
    if n < 1:
        raise ValueError("mo(n) needs n >= 1")
    if n > 26:
        raise SizeExceeded("mo(n) supports at most 26 pairs")
    size = 2 * n + 2
    bottom, top = 0, size - 1
    names = ["0"]
    for k in range(n):
        letter = chr(ord("a") + k)
        names += [letter, letter + "'"]
    names.append("1")
    down = []
    for e in range(size):
        if e == bottom:
            down.append([bottom])
        elif e == top:
            down.append(list(range(size)))
        else:
            down.append([bottom, e])
    meet_t = [[0] * size for _ in range(size)]
    join_t = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            if a == b:
                meet_t[a][b] = a
                join_t[a][b] = a
            elif a == bottom or b == top:
                meet_t[a][b] = a
                join_t[a][b] = b
            elif b == bottom or a == top:
                meet_t[a][b] = b
                join_t[a][b] = a
            else:
                meet_t[a][b] = bottom
                join_t[a][b] = top
    ortho_t = [top]
    for k in range(n):
        ortho_t += [2 * k + 2, 2 * k + 1]
    ortho_t.append(bottom)
    return Lattice(names, down, meet_t, join_t, ortho_t, bottom, top)


def product(l1: Lattice, l2: Lattice) -> Lattice:
    """Direct product with componentwise order and operations."""
    size = l1.n * l2.n
    if size > MAX_PRODUCT_SIZE:
        raise SizeExceeded(f"product would have {size} elements")

    def pid(i: int, j: int) -> int:
        return i * l2.n + j

    names = [
        f"({l1.names[i]},{l2.names[j]})"
        for i in range(l1.n)
        for j in range(l2.n)
    ]
    down = []
    for i in range(l1.n):
        for j in range(l2.n):
            down.append(
                [pid(i2, j2) for i2 in l1.down[i] for j2 in l2.down[j]]
            )
    meet_t = [[0] * size for _ in range(size)]
    join_t = [[0] * size for _ in range(size)]
    for i in range(l1.n):
        for j in range(l2.n):
            a = pid(i, j)
            for i2 in range(l1.n):
                for j2 in range(l2.n):
                    b = pid(i2, j2)
                    meet_t[a][b] = pid(l1.meet_t[i][i2], l2.meet_t[j][j2])
                    join_t[a][b] = pid(l1.join_t[i][i2], l2.join_t[j][j2])
    ortho_t = [
        pid(l1.ortho_t[i], l2.ortho_t[j])
        for i in range(l1.n)
        for j in range(l2.n)
    ]
    return Lattice(
        names,
        down,
        meet_t,
        join_t,
        ortho_t,
        pid(l1.bottom, l2.bottom),
        pid(l1.top, l2.top),
    )


@dataclass(frozen=True)
class GreechieDiagram:
    """Named atoms grouped into blocks of mutually exclusive outcomes."""

    atoms: tuple
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(
            self, "blocks", tuple(tuple(block) for block in self.blocks)
        )

    def validate(self):
        """Raise InvalidDiagram on any structural violation."""
        seen = set()
        for atom in self.atoms:
            if not atom or not isinstance(atom, str):
                raise InvalidDiagram(f"bad atom name {atom!r}")
            if any(ch in atom for ch in "+'") or atom in ("0", "1"):
                raise InvalidDiagram(
                    f"atom name {atom!r} collides with derived element names"
                )
            if atom in seen:
                raise InvalidDiagram(f"duplicate atom name {atom!r}")
            seen.add(atom)
        if not self.blocks:
            raise InvalidDiagram("diagram has no blocks")
        for block in self.blocks:
            if len(block) < 2:
                raise InvalidDiagram(f"block {block!r} has fewer than 2 atoms")
            if len(set(block)) != len(block):
                raise InvalidDiagram(f"block {block!r} repeats an atom")
            for atom in block:
                if atom not in seen:
                    raise InvalidDiagram(f"block atom {atom!r} not declared")
        for b1, b2 in itertools.combinations(range(len(self.blocks)), 2):
            shared = set(self.blocks[b1]) & set(self.blocks[b2])
            if len(shared) > 1:
                raise InvalidDiagram(
                    f"blocks {b1} and {b2} share {len(shared)} atoms "
                    f"({sorted(shared)}); at most one is allowed"
                )
        covered = {atom for block in self.blocks for atom in block}
        missing = [a for a in self.atoms if a not in covered]
        if missing:
            raise InvalidDiagram(f"atoms in no block: {missing}")

    def atom_degrees(self) -> dict:
        degrees = {a: 0 for a in self.atoms}
        for block in self.blocks:
            for atom in block:
                degrees[atom] += 1
        return degrees


def parse_greechie(text: str) -> GreechieDiagram:
    """Parse the on-disk diagram format (a JSON document).

    Expected shape: {"atoms": ["a", ...], "blocks": [["a", "b"], ...]}.
    Atom and block order is preserved; it matters for deterministic
    search output.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDiagram(
            f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    if not isinstance(doc, dict) or set(doc) != {"atoms", "blocks"}:
        raise InvalidDiagram("document must have exactly the fields 'atoms' and 'blocks'")
    atoms = doc["atoms"]
    blocks = doc["blocks"]
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise InvalidDiagram("'atoms' must be a list of strings")
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(isinstance(a, str) for a in b) for b in blocks
    ):
        raise InvalidDiagram("'blocks' must be a list of lists of atom names")
    diagram = GreechieDiagram(tuple(atoms), tuple(tuple(b) for b in blocks))
    diagram.validate()
    return diagram


def format_greechie(diagram: GreechieDiagram) -> str:
    """Canonical textual form of a diagram (round-trips with parse)."""
    return json.dumps(
        {"atoms": list(diagram.atoms), "blocks": [list(b) for b in diagram.blocks]},
        indent=2,
    )


def from_greechie(diagram: GreechieDiagram) -> Lattice:
    """Paste the blocks of a diagram into one orthomodular lattice.

    Every block contributes its full powerset algebra; empty set, full
    set, singletons and co-singletons are identified globally (the last
    two as the shared atoms and their complements), interior subsets
    stay block-local. Raises NotOrthomodular when the glued structure is
    not a lattice, has inconsistent complements, or fails any law: short
    cycles of blocks surface here.
    """
    diagram.validate()
    blocks = [tuple(b) for b in diagram.blocks]
    atom_blocks = {}
    for bi, block in enumerate(blocks):
        for atom in block:
            atom_blocks.setdefault(atom, []).append(bi)

    # Global element keys. Singleton/co-singleton resolution must agree
    # across the blocks sharing an atom; 2-atom blocks make an atom double
    # as the complement of its partner, which the consistency check below
    # will reject if the partner also has a complement of a larger rank.
    def key_for(bi: int, subset: frozenset):
        block = set(blocks[bi])
        if not subset:
            return ("bot",)
        if subset == block:
            return ("top",)
        if len(subset) == 1:
            return ("atom", next(iter(subset)))
        if len(subset) == len(block) - 1:
            (missing,) = block - subset
            return ("coatom", missing)
        return ("local", bi, tuple(sorted(subset)))

    keys = {("bot",), ("top",)}
    local_subsets = []  # (block index, subset, key)
    for bi, block in enumerate(blocks):
        for size in range(len(block) + 1):
            for sub in itertools.combinations(sorted(block), size):
                key = key_for(bi, frozenset(sub))
                keys.add(key)
                local_subsets.append((bi, frozenset(sub), key))

    def sort_key(key):
        order = {"bot": 0, "atom": 1, "coatom": 2, "local": 3, "top": 4}
        return (order[key[0]],) + key[1:]

    ordered = sorted(keys, key=sort_key)
    ids = {key: i for i, key in enumerate(ordered)}

    def name_for(key) -> str:
        if key[0] == "bot":
            return "0"
        if key[0] == "top":
            return "1"
        if key[0] == "atom":
            return key[1]
        if key[0] == "coatom":
            return key[1] + "'"
        return "+".join(key[2])

    names = [name_for(key) for key in ordered]
    if len(set(names)) != len(names):
        # two blocks produced distinct interior subsets with equal atom
        # sets; impossible when blocks share at most one atom
        raise NotOrthomodular("derived element names collide")

    leq_pairs = set()
    ortho_map = {}
    for bi, subset, key in local_subsets:
        gid = ids[key]
        block = frozenset(blocks[bi])
        complement_key = key_for(bi, block - subset)
        partner = ids[complement_key]
        if gid in ortho_map and ortho_map[gid] != partner:
            raise NotOrthomodular(
                f"element {names[gid]!r} has inconsistent complements "
                f"across blocks"
            )
        ortho_map[gid] = partner
        for size in range(len(subset), len(block) + 1):
            for sup in itertools.combinations(sorted(block), size):
                if subset <= frozenset(sup):
                    leq_pairs.add((gid, ids[key_for(bi, frozenset(sup))]))

    lattice = Lattice.from_order(
        names, leq_pairs, ortho_map, ids[("bot",)], ids[("top",)]
    )
    report = verify_oml(lattice)
    if not report.ok:
        raise NotOrthomodular(
            "pasting failed verification: " + "; ".join(report.violations[:3])
        )
    return lattice
