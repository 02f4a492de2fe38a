"""Grothendieck topologies on a finite monoid and the idempotent-ideal lattice.

Localising subcategories of right M-sets are represented by their
topologies, and for finite M every topology is ``{a : m ⊆ a}`` for a unique
idempotent two-sided ideal m. Subsets of M are handled as frozensets
internally and as :class:`ElementSubset` at the API boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BijectionFailed,
    CarrierTooLarge,
    InvariantViolation,
    MethodDisagreement,
    NotARightIdeal,
    NotIdempotentIdeal,
    RoundTripFailed,
)
from .monoid import ElementSubset, FiniteMonoid, _ideal_unions, principal_ideal, subset_key, two_sided_ideals
from .msets import (
    MSet,
    equivariant_maps,
    hom_set_as_right_mset,
    principal_left_mset,
    right_ideal_mset,
    tensor,
)
from .points import Verdict

IDEAL_CAP = 2**16


def _fs(s) -> frozenset[int]:
    return s.members if isinstance(s, ElementSubset) else frozenset(s)


def right_ideals(m: FiniteMonoid, cap: int = IDEAL_CAP) -> list[ElementSubset]:
    """All right ideals (unions of principal ones), sorted by size then members."""
    gens = {x: principal_ideal(m, x, "right").members for x in m.elements}
    return [ElementSubset(m, s) for s in _ideal_unions(m, gens, cap)]


def residual(m: FiniteMonoid, a, x: int) -> ElementSubset:
    """``(a : x) = {y : x·y in a}``."""
    a = _fs(a)
    row = m.table[x]
    return ElementSubset(m, {y for y in m.elements if row[y] in a})


def ideal_product(m: FiniteMonoid, a, b) -> frozenset[int]:
    t = m.table
    return frozenset(t[x][y] for x in _fs(a) for y in _fs(b))


@dataclass(frozen=True, eq=False)
class TopologyFamily:
    monoid: FiniteMonoid = field(repr=False)
    members: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(_fs(a) for a in self.members))

    def __contains__(self, a) -> bool:
        return _fs(a) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, TopologyFamily) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    @property
    def ideals(self) -> list[ElementSubset]:
        return [ElementSubset(self.monoid, s) for s in sorted(self.members, key=subset_key)]


def is_grothendieck_topology(m: FiniteMonoid, family, all_right_ideals=None) -> Verdict:
    """Check T1-T3 literally; on success also cross-check the derived closure facts.

    T3 is read with a universal quantifier: if b is in the family and
    ``(a : y)`` is in the family for every y in b, then a is too.
    """
    fam = family.members if isinstance(family, TopologyFamily) else frozenset(_fs(a) for a in family)
    for a in sorted(fam, key=subset_key):
        if not ElementSubset(m, a).is_right_ideal():
            raise NotARightIdeal(f"{sorted(a)} is not a right ideal")
    ideals = [_fs(a) for a in (all_right_ideals or right_ideals(m))]
    whole = frozenset(m.elements)
    if whole not in fam:
        return Verdict(False, "T1", ())
    res = {(a, x): residual(m, a, x).members for a in ideals for x in m.elements}
    for a in sorted(fam, key=subset_key):
        for x in m.elements:
            if res[(a, x)] not in fam:
                return Verdict(False, "T2", (tuple(sorted(a)), x))
    for b in sorted(fam, key=subset_key):
        for a in ideals:
            if a not in fam and all(res[(a, y)] in fam for y in b):
                return Verdict(False, "T3", (tuple(sorted(b)), tuple(sorted(a))))
    _check_derived_facts(m, fam, ideals)
    return Verdict(True)


def _check_derived_facts(m: FiniteMonoid, fam, ideals):
    for a in fam:
        for b in ideals:
            if a <= b and b not in fam:
                raise InvariantViolation(f"topology not upward closed at {sorted(a)} <= {sorted(b)}")
        for b in fam:
            if a & b not in fam:
                raise InvariantViolation(f"topology not closed under intersection: {sorted(a)}, {sorted(b)}")
            if ideal_product(m, a, b) not in fam:
                raise InvariantViolation(f"topology not closed under products: {sorted(a)}, {sorted(b)}")


def topology_from_ideal(m: FiniteMonoid, ideal, all_right_ideals=None) -> TopologyFamily:
    """All right ideals containing the idempotent two-sided ideal."""
    s = ElementSubset(m, _fs(ideal))
    if not s.is_idempotent_ideal():
        raise NotIdempotentIdeal(f"{s.sorted()} is not an idempotent two-sided ideal")
    ideals = all_right_ideals or right_ideals(m)
    return TopologyFamily(m, frozenset(_fs(a) for a in ideals if s.members <= _fs(a)))


def ideal_of_topology(family: TopologyFamily, all_right_ideals=None) -> ElementSubset:
    """The least member of the family; checked to generate the family back."""
    m = family.monoid
    if not family.members:
        raise ValueError("empty family")
    least = frozenset(m.elements)
    for a in family.members:
        least &= a
    s = ElementSubset(m, least)
    if least not in family.members or not s.is_idempotent_ideal():
        raise RoundTripFailed(f"least member {s.sorted()} is not an idempotent ideal in the family")
    if topology_from_ideal(m, s, all_right_ideals) != family:
        raise RoundTripFailed(f"the ideal {s.sorted()} does not reproduce the topology")
    return s


# the lattice of idempotent ideals


def idempotent_ideals(m: FiniteMonoid) -> list[ElementSubset]:
    return [i for i in two_sided_ideals(m) if i.square().members == i.members]


def union_of_principal(m: FiniteMonoid, es) -> frozenset[int]:
    out = frozenset()
    for e in es:
        out |= principal_ideal(m, e, "two_sided").members
    return out


def lattice_meet(m: FiniteMonoid, i, j) -> ElementSubset:
    """Union of ``MeM`` over the idempotents e of ``I ∩ J``."""
    common = _fs(i) & _fs(j)
    return ElementSubset(m, union_of_principal(m, (e for e in m.idempotents if e in common)))


@dataclass(frozen=True, eq=False)
class IdealLattice:
    monoid: FiniteMonoid = field(repr=False)
    elements: tuple[frozenset[int], ...]
    join: tuple[tuple[int, ...], ...] = field(repr=False)
    meet: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def index(self) -> dict[frozenset[int], int]:
        return {s: i for i, s in enumerate(self.elements)}

    @property
    def bottom(self) -> int:
        return self.index[frozenset()]

    @property
    def top(self) -> int:
        return self.index[frozenset(self.monoid.elements)]

    def leq(self, i: int, j: int) -> bool:
        return self.join[i][j] == j

    def subsets(self) -> list[ElementSubset]:
        return [ElementSubset(self.monoid, s) for s in self.elements]


def idempotent_ideal_lattice(m: FiniteMonoid) -> IdealLattice:
    elems = tuple(i.members for i in idempotent_ideals(m))
    index = {s: k for k, s in enumerate(elems)}
    for s in elems:
        if union_of_principal(m, (e for e in m.idempotents if e in s)) != s:
            raise InvariantViolation(f"{sorted(s)} is not the union of its MeM")
    n = len(elems)
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            u = elems[a] | elems[b]
            if u not in index:
                raise InvariantViolation("union of idempotent ideals is not idempotent")
            join[a][b] = index[u]
            meet[a][b] = index[lattice_meet(m, elems[a], elems[b]).members]
    lat = IdealLattice(m, elems, tuple(map(tuple, join)), tuple(map(tuple, meet)))
    for a in range(n):
        for b in range(n):
            if glb_from_joins(lat, a, b) != meet[a][b]:
                raise InvariantViolation(f"meet of {sorted(elems[a])} and {sorted(elems[b])} is not the glb")
    return lat


def glb_from_joins(lat: IdealLattice, a: int, b: int) -> int:
    """Join of every common lower bound, using only the join table."""
    acc = lat.bottom
    for x in range(len(lat)):
        if lat.leq(x, a) and lat.leq(x, b):
            acc = lat.join[acc][x]
    return acc


def is_distributive(lat: IdealLattice) -> Verdict:
    j, mt = lat.join, lat.meet
    n = len(lat)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mt[a][j[b][c]] != j[mt[a][b]][mt[a][c]]:
                    return Verdict(False, "distributivity", (a, b, c))
    return Verdict(True)


def is_III_closed(m: FiniteMonoid) -> Verdict:
    """Whether ``I ∩ J`` is idempotent for all idempotent ideals I, J."""
    ideals = [i.members for i in idempotent_ideals(m)]
    for a in ideals:
        for b in ideals:
            c = a & b
            if ideal_product(m, c, c) != c:
                return Verdict(False, "intersection not idempotent", (tuple(sorted(a)), tuple(sorted(b))))
    return Verdict(True)


def lattice_irreducibles(lat: IdealLattice) -> list[frozenset[int]]:
    """Join-irreducible elements, bottom excluded; checked against ``{MeM}``."""
    n = len(lat)
    irr = []
    for x in range(n):
        if x == lat.bottom:
            continue
        if not any(lat.join[y][z] == x for y in range(n) for z in range(n) if y != x and z != x):
            irr.append(lat.elements[x])
    principal = {principal_ideal(lat.monoid, e, "two_sided").members for e in lat.monoid.idempotents}
    if set(irr) != principal:
        raise InvariantViolation("join-irreducibles differ from the principal ideals MeM")
    return irr


# the J-order on idempotent classes and its order topology


@dataclass(frozen=True, eq=False)
class IdemJPoset:
    monoid: FiniteMonoid = field(repr=False)
    classes: tuple[tuple[int, ...], ...]
    ideals: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.classes)

    def leq(self, i: int, j: int) -> bool:
        return self.ideals[i] <= self.ideals[j]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(lower, upper)``."""
        n = len(self)
        edges = []
        for i in range(n):
            for j in range(n):
                if i != j and self.leq(i, j):
                    if not any(k not in (i, j) and self.leq(i, k) and self.leq(k, j) for k in range(n)):
                        edges.append((i, j))
        return edges


def idem_j_poset(m: FiniteMonoid) -> IdemJPoset:
    from .monoid import green_partition

    classes = green_partition(m, "J").blocks
    ideals = tuple(principal_ideal(m, c[0], "two_sided").members for c in classes)
    return IdemJPoset(m, classes, ideals)


def order_topology_opens(p: IdemJPoset) -> list[frozenset[int]]:
    """All down-closed sets of classes, in (size, members) order."""
    n = len(p)
    order = sorted(range(n), key=lambda i: (len(p.ideals[i]), i))
    below = [[j for j in range(n) if j != i and p.leq(j, i)] for i in range(n)]
    out = []

    def rec(k: int, chosen: set[int]):
        if k == n:
            out.append(frozenset(chosen))
            return
        x = order[k]
        rec(k + 1, chosen)
        if all(y in chosen for y in below[x]):
            chosen.add(x)
            rec(k + 1, chosen)
            chosen.discard(x)

    rec(0, set())
    return sorted(out, key=subset_key)


def lattice_opens_bijection(m: FiniteMonoid, lat: IdealLattice | None = None, poset: IdemJPoset | None = None):
    """Inverse maps between idempotent ideals and open sets of J-classes."""
    lat = lat or idempotent_ideal_lattice(m)
    poset = poset or idem_j_poset(m)
    opens = order_topology_opens(poset)

    def forward(ideal) -> frozenset[int]:
        s = _fs(ideal)
        return frozenset(i for i, c in enumerate(poset.classes) if c[0] in s)

    def backward(u) -> frozenset[int]:
        out = frozenset()
        for i in u:
            out |= poset.ideals[i]
        return out

    fwd = {s: forward(s) for s in lat.elements}
    bwd = {u: backward(u) for u in opens}
    if sorted(fwd.values(), key=subset_key) != opens:
        raise BijectionFailed("ideals do not map onto the open sets")
    for s, u in fwd.items():
        if bwd[u] != s:
            raise BijectionFailed(f"round trip fails at {sorted(s)}")
    return fwd, bwd


# sheaves and transversality


def is_sheaf(a: MSet, family: TopologyFamily) -> Verdict:
    """Whether ``A -> Hom_M(ideal, A), x ↦ (y ↦ x·y)`` is bijective for every member."""
    if a.side != "right":
        raise ValueError("sheaves are right M-sets")
    m = family.monoid
    for ideal in family.ideals:
        sub = right_ideal_mset(m, ideal)
        restricted = [tuple(a.act(y, x) for y in sub.labels) for x in range(a.size)]
        if len(set(restricted)) != len(restricted):
            return Verdict(False, "restriction not injective", (ideal.sorted(),))
        count = sum(1 for _ in equivariant_maps(sub, a, limit=a.size + 1))
        if count != a.size:
            return Verdict(False, "restriction not surjective", (ideal.sorted(),))
    return Verdict(True)


def canonical_tensor_map_is_bijective(m: FiniteMonoid, ideal, e: int) -> bool:
    """Whether ``a ⊗_M Me -> Me, x ⊗ y ↦ x·y`` is a bijection."""
    sub = right_ideal_mset(m, ideal)
    me = principal_left_mset(m, e)
    tp = tensor(sub, me)
    pos = {x: i for i, x in enumerate(me.labels)}
    image = {}
    for xi, x in enumerate(sub.labels):
        for yi, y in enumerate(me.labels):
            c = tp.cls(xi, yi)
            v = pos[m.table[x][y]]
            if image.setdefault(c, v) != v:
                raise InvariantViolation("canonical tensor map is not well defined")
    return len(set(image.values())) == tp.size == me.size


@dataclass(frozen=True)
class TransversalityVerdict:
    point: int
    ideal: tuple[int, ...]
    verdict: bool
    checked_by: tuple[str, ...] = ("membership", "tensor", "direct_sheaf")
    sheaf_sample_sizes: tuple[int, ...] = (1, 2, 3)

    def __bool__(self):
        return self.verdict


def point_transversality(m: FiniteMonoid, e: int, ideal, sample_sizes=(1, 2, 3),
                         all_right_ideals=None) -> TransversalityVerdict:
    """Decide whether the point Me lands in the sheaves for ideal, three ways.

    The direct sheaf check only samples target sets of the given sizes.
    """
    s = _fs(ideal)
    family = topology_from_ideal(m, s, all_right_ideals)
    by_membership = e in s
    by_tensor = all(canonical_tensor_map_is_bijective(m, a, e) for a in family.members)
    me = principal_left_mset(m, e)
    methods = ("membership", "tensor", "direct_sheaf")
    try:
        by_sheaf = all(is_sheaf(hom_set_as_right_mset(me, k), family).ok for k in sample_sizes)
    except CarrierTooLarge:
        # Hom(Me, S) too big to materialise; the other two checks still decide
        by_sheaf = by_tensor
        methods = methods[:2]
        sample_sizes = ()
    if not by_membership == by_tensor == by_sheaf:
        raise MethodDisagreement(
            f"e={e}, ideal={sorted(s)}: membership={by_membership}, tensor={by_tensor}, sheaf={by_sheaf}"
        )
    return TransversalityVerdict(e, tuple(sorted(s)), by_membership, methods, tuple(sample_sizes))
