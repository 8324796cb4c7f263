"""Finite bounded ortholattices as explicit tables, and their laws.

Elements are integer ids with attached names. The order is stored as
down-sets, and meets/joins as full tables, so every law can be checked
by finite enumeration: `verify_oml` re-derives the order-theoretic
meaning of each table entry instead of trusting the builder.

Distributivity is probed through triples: (a,b,c) satisfies the primal
identity when (a v b) ^ c = (a ^ c) v (b ^ c), the dual with meet and
join exchanged, and the full condition when both hold under every
permutation of the triple. Elements forming such a triple with every
pair make up the center, which is always a Boolean sublattice; the
maximal Boolean sublattices are the blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import NotOrthomodular, UnknownElement

MAX_VIOLATIONS = 25


class Lattice:
    """Immutable finite bounded ortholattice with explicit tables."""

    __slots__ = ("names", "_index", "down", "up", "meet_t", "join_t",
                 "ortho_t", "bottom", "top")

    def __init__(self, names, down, meet_t, join_t, ortho_t, bottom, top):
        n = len(names)
        if len(set(names)) != n:
            raise ValueError("element names must be unique")
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "_index", {nm: i for i, nm in enumerate(names)})
        object.__setattr__(self, "down", tuple(frozenset(d) for d in down))
        up = [set() for _ in range(n)]
        for a in range(n):
            for b in self.down[a]:
                up[b].add(a)
        object.__setattr__(self, "up", tuple(frozenset(u) for u in up))
        object.__setattr__(self, "meet_t", tuple(tuple(row) for row in meet_t))
        object.__setattr__(self, "join_t", tuple(tuple(row) for row in join_t))
        object.__setattr__(self, "ortho_t", tuple(ortho_t))
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.n:
            raise UnknownElement(f"no element with id {a!r}")
        return a

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"no element named {name!r}") from None

    def leq(self, a: int, b: int) -> bool:
        return a in self.down[b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_t[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_t[a][b]

    def ortho(self, a: int) -> int:
        return self.ortho_t[a]

    def atoms(self):
        """Elements covering bottom, in id order."""
        return tuple(
            a for a in range(self.n)
            if a != self.bottom and self.down[a] == frozenset((self.bottom, a))
        )

    def __repr__(self):
        return f"Lattice({self.n} elements)"

    @classmethod
    def from_order(cls, names, leq_pairs, ortho_map, bottom, top) -> "Lattice":
        """Build tables from an order relation, or reject.

        ``leq_pairs`` is the full relation as (lower, higher) id pairs
        (reflexivity is added). Raises NotOrthomodular when some pair of
        elements has no unique greatest lower / least upper bound: the
        input is then simply not a lattice.
        """
        n = len(names)
        down = [set([i]) for i in range(n)]
        for lo, hi in leq_pairs:
            down[hi].add(lo)
        # transitive closure
        changed = True
        while changed:
            changed = False
            for a in range(n):
                extra = set()
                for b in down[a]:
                    if not down[b] <= down[a]:
                        extra |= down[b]
                if extra - down[a]:
                    down[a] |= extra
                    changed = True
        up = [set() for _ in range(n)]
        for a in range(n):
            for b in down[a]:
                up[b].add(a)
        down = [frozenset(d) for d in down]
        up = [frozenset(u) for u in up]

        def extreme(common, bound_sets, kind, a, b):
            best = None
            for c in common:
                if common <= bound_sets[c]:
                    best = c
                    break
            if best is None:
                raise NotOrthomodular(
                    f"not a lattice: elements {names[a]!r} and {names[b]!r} "
                    f"have no unique {kind}"
                )
            return best

        meet_t = [[0] * n for _ in range(n)]
        join_t = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = extreme(down[a] & down[b], down, "greatest lower bound", a, b)
                j = extreme(up[a] & up[b], up, "least upper bound", a, b)
                meet_t[a][b] = meet_t[b][a] = m
                join_t[a][b] = join_t[b][a] = j
        ortho_t = [ortho_map[i] for i in range(n)]
        return cls(names, down, meet_t, join_t, ortho_t, bottom, top)


@dataclass
class LawReport:
    """Outcome of the exhaustive law check on one lattice."""

    ok: bool
    violations: list = field(default_factory=list)
    truncated: bool = False


def verify_oml(lat: Lattice) -> LawReport:
    """Exhaustively check every bounded-ortholattice and OM law.

    The report lists each violated law with the elements that witness
    the failure (capped); an empty list means the structure is a genuine
    orthomodular lattice.
    """
    v = []
    n = lat.n

    def report(msg):
        if len(v) < MAX_VIOLATIONS:
            v.append(msg)

    nm = lat.names
    for a in range(n):
        if a not in lat.down[a]:
            report(f"order not reflexive at {nm[a]!r}")
        if lat.bottom not in lat.down[a]:
            report(f"bottom not below {nm[a]!r}")
        if a not in lat.down[lat.top]:
            report(f"{nm[a]!r} not below top")
    for a in range(n):
        for b in lat.down[a]:
            if b != a and a in lat.down[b]:
                report(f"order not antisymmetric on {nm[a]!r}, {nm[b]!r}")
            if not lat.down[b] <= lat.down[a]:
                report(f"order not transitive below {nm[a]!r} at {nm[b]!r}")
    for a in range(n):
        for b in range(a, n):
            common = lat.down[a] & lat.down[b]
            m = lat.meet_t[a][b]
            if m not in common or not common <= lat.down[m]:
                report(f"meet table wrong at ({nm[a]!r}, {nm[b]!r})")
            if lat.meet_t[b][a] != m:
                report(f"meet table not symmetric at ({nm[a]!r}, {nm[b]!r})")
            cover = lat.up[a] & lat.up[b]
            j = lat.join_t[a][b]
            if j not in cover or not cover <= lat.up[j]:
                report(f"join table wrong at ({nm[a]!r}, {nm[b]!r})")
            if lat.join_t[b][a] != j:
                report(f"join table not symmetric at ({nm[a]!r}, {nm[b]!r})")
    for a in range(n):
        o = lat.ortho_t[a]
        if lat.ortho_t[o] != a:
            report(f"orthocomplement not involutive at {nm[a]!r}")
        if lat.meet_t[a][o] != lat.bottom:
            report(f"{nm[a]!r} meets its orthocomplement above bottom")
        if lat.join_t[a][o] != lat.top:
            report(f"{nm[a]!r} joins its orthocomplement below top")
        for b in lat.down[a]:
            if lat.ortho_t[a] not in lat.down[lat.ortho_t[b]]:
                report(
                    f"orthocomplement not order-reversing on "
                    f"{nm[b]!r} <= {nm[a]!r}"
                )
    for b in range(n):
        for a in lat.down[b]:
            # orthomodular law: a <= b forces b = a v (a' ^ b)
            if lat.join_t[a][lat.meet_t[lat.ortho_t[a]][b]] != b:
                report(
                    f"orthomodular law fails on {nm[a]!r} <= {nm[b]!r}"
                )
    return LawReport(ok=not v, violations=v, truncated=len(v) >= MAX_VIOLATIONS)


def d_triple(lat: Lattice, a: int, b: int, c: int) -> bool:
    """(a v b) ^ c = (a ^ c) v (b ^ c)."""
    for x in (a, b, c):
        lat.check_element(x)
    return lat.meet(lat.join(a, b), c) == lat.join(lat.meet(a, c), lat.meet(b, c))


def dstar_triple(lat: Lattice, a: int, b: int, c: int) -> bool:
    """(a ^ b) v c = (a v c) ^ (b v c)."""
    for x in (a, b, c):
        lat.check_element(x)
    return lat.join(lat.meet(a, b), c) == lat.meet(lat.join(a, c), lat.join(b, c))


def t_triple(lat: Lattice, a: int, b: int, c: int) -> bool:
    """Both identities under all six orderings of (a, b, c)."""
    for x, y, z in itertools.permutations((a, b, c)):
        if not d_triple(lat, x, y, z) or not dstar_triple(lat, x, y, z):
            return False
    return True


def commutes(lat: Lattice, a: int, b: int) -> bool:
    """a = (a ^ b) v (a ^ b')."""
    return lat.join(lat.meet(a, b), lat.meet(a, lat.ortho(b))) == a


def center(lat: Lattice):
    """Elements forming a full triple with every pair, in id order.

    Commutation with everything is used as a fast necessary filter;
    survivors are confirmed by the defining exhaustive scan over pairs.
    """
    candidates = [
        z for z in range(lat.n)
        if all(commutes(lat, a, z) and commutes(lat, z, a) for a in range(lat.n))
    ]
    confirmed = []
    for z in candidates:
        if all(
            t_triple(lat, a, b, z)
            for a in range(lat.n)
            for b in range(a, lat.n)
        ):
            confirmed.append(z)
    return tuple(confirmed)


def is_boolean_subalgebra(lat: Lattice, subset) -> bool:
    """Closed under the operations, bounded, and distributive inside."""
    return not boolean_subalgebra_violations(lat, subset)


def boolean_subalgebra_violations(lat: Lattice, subset):
    subset = frozenset(subset)
    nm = lat.names
    v = []
    if lat.bottom not in subset or lat.top not in subset:
        v.append("missing bottom or top")
    for a in subset:
        if lat.ortho(a) not in subset:
            v.append(f"not closed under orthocomplement at {nm[a]!r}")
    for a in subset:
        for b in subset:
            if lat.meet(a, b) not in subset or lat.join(a, b) not in subset:
                v.append(f"not closed under meet/join at ({nm[a]!r}, {nm[b]!r})")
    if v:
        return v
    for a, b, c in itertools.product(subset, repeat=3):
        if not d_triple(lat, a, b, c):
            v.append(
                f"distributivity fails on ({nm[a]!r}, {nm[b]!r}, {nm[c]!r})"
            )
            break
    return v


def blocks(lat: Lattice):
    """All maximal Boolean sub-ortholattices, deterministically ordered.

    In a finite orthomodular lattice each one is generated by a maximal
    family of pairwise-orthogonal atoms, so the search enumerates
    maximal cliques of the atom orthogonality graph and closes each
    under joins.
    """
    atoms = lat.atoms()
    ortho_adj = {
        a: frozenset(
            b for b in atoms if b != a and lat.leq(a, lat.ortho(b))
        )
        for a in atoms
    }
    cliques = []

    # Bron-Kerbosch (no pivoting; atom counts stay small here)
    def bron_kerbosch(r, p, x):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        for a in sorted(p):
            bron_kerbosch(r | {a}, p & ortho_adj[a], x & ortho_adj[a])
            p = p - {a}
            x = x | {a}

    bron_kerbosch(frozenset(), frozenset(atoms), frozenset())
    result = []
    for clique in cliques:
        members = set()
        for subset_size in range(len(clique) + 1):
            for sub in itertools.combinations(clique, subset_size):
                e = lat.bottom
                for a in sub:
                    e = lat.join(e, a)
                members.add(e)
        result.append(frozenset(members))
    unique = sorted(
        set(result),
        key=lambda block: tuple(sorted(lat.names[i] for i in block)),
    )
    return tuple(unique)


def block_atoms(lat: Lattice, block):
    """The lattice atoms lying inside one block, in name order."""
    return tuple(
        sorted(
            (a for a in lat.atoms() if a in block),
            key=lambda a: lat.names[a],
        )
    )


def modularity_violations(lat: Lattice):
    """Diagnostic only: witnesses of a <= b with a v (x ^ b) != (a v x) ^ b."""
    out = []
    for b in range(lat.n):
        for a in lat.down[b]:
            for x in range(lat.n):
                if lat.join(a, lat.meet(x, b)) != lat.meet(lat.join(a, x), b):
                    out.append((a, x, b))
                    if len(out) >= MAX_VIOLATIONS:
                        return out
    return out


def sublattice_closure(lat: Lattice, seed):
    """Smallest subset containing ``seed`` closed under meet, join, ortho."""
    closed = set(seed)
    closed.add(lat.bottom)
    closed.add(lat.top)
    frontier = True
    while frontier:
        additions = set()
        members = tuple(closed)
        for a in members:
            o = lat.ortho(a)
            if o not in closed:
                additions.add(o)
        for a, b in itertools.combinations_with_replacement(members, 2):
            m = lat.meet(a, b)
            j = lat.join(a, b)
            if m not in closed:
                additions.add(m)
            if j not in closed:
                additions.add(j)
        frontier = bool(additions)
        closed |= additions
    return frozenset(closed)
