"""Finite monoids given by Cayley tables.

Elements are the integers ``0..n-1``; the identity's index is stored
explicitly rather than forced to 0, so quotients and sub-tables keep their
natural numbering.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    ClosureTooLarge,
    IdentityLawFails,
    IndexOutOfRange,
    NotACongruence,
    NotAssociative,
    NotCommutative,
    ValidationError,
)
from .partition import SetPartition, UnionFind

CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(str(s) for s in self.names))

    def __hash__(self):
        return hash((self.table, self.identity))

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def name(self, i: int) -> str:
        return self.names[i] if self.names is not None else str(i)

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in self.elements for j in range(i))

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in self.elements if self.table[e][e] == e)

    def subset(self, members: Iterable[int]) -> ElementSubset:
        return ElementSubset(self, frozenset(members))

    def __repr__(self):
        return f"FiniteMonoid(size={self.size}, identity={self.identity})"


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a monoid's elements, with the usual role predicates."""

    parent: FiniteMonoid = field(repr=False)
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    def __hash__(self):
        return hash(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: ElementSubset) -> bool:
        return self.members <= _members(other)

    def __lt__(self, other: ElementSubset) -> bool:
        return self.members < _members(other)

    def __or__(self, other):
        return ElementSubset(self.parent, self.members | _members(other))

    def __and__(self, other):
        return ElementSubset(self.parent, self.members & _members(other))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def names(self) -> list[str]:
        return [self.parent.name(x) for x in self]

    def is_submonoid(self) -> bool:
        t = self.parent.table
        s = self.members
        return self.parent.identity in s and all(t[a][b] in s for a in s for b in s)

    def is_right_ideal(self) -> bool:
        t = self.parent.table
        return all(t[a][m] in self.members for a in self.members for m in self.parent.elements)

    def is_left_ideal(self) -> bool:
        t = self.parent.table
        return all(t[m][a] in self.members for a in self.members for m in self.parent.elements)

    def is_two_sided_ideal(self) -> bool:
        return self.is_left_ideal() and self.is_right_ideal()

    def square(self) -> ElementSubset:
        t = self.parent.table
        return ElementSubset(self.parent, {t[a][b] for a in self.members for b in self.members})

    def is_idempotent_ideal(self) -> bool:
        return self.is_two_sided_ideal() and self.square().members == self.members


def _members(s) -> frozenset[int]:
    return s.members if isinstance(s, ElementSubset) else frozenset(s)


@dataclass(frozen=True)
class MonoidCongruence:
    parent: FiniteMonoid = field(repr=False)
    partition: SetPartition

    def is_compatible(self) -> bool:
        return _congruence_violation(self.parent, self.partition) is None


@dataclass(frozen=True)
class MonoidHomomorphism:
    source: FiniteMonoid = field(repr=False)
    target: FiniteMonoid = field(repr=False)
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_valid(self) -> bool:
        s, t, f = self.source, self.target, self.map
        if len(f) != s.size or f[s.identity] != t.identity:
            return False
        return all(f[s.table[i][j]] == t.table[f[i]][f[j]] for i in s.elements for j in s.elements)

    def is_bijective(self) -> bool:
        return len(set(self.map)) == len(self.map) == self.target.size

    def inverse(self) -> MonoidHomomorphism:
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return MonoidHomomorphism(self.target, self.source, tuple(inv))

    def then(self, other: MonoidHomomorphism) -> MonoidHomomorphism:
        """The composite ``other ∘ self``."""
        return MonoidHomomorphism(self.source, other.target, tuple(other.map[y] for y in self.map))


def identity_hom(m: FiniteMonoid) -> MonoidHomomorphism:
    return MonoidHomomorphism(m, m, tuple(m.elements))


# construction and validation


def validate_monoid(table: Sequence[Sequence[int]], identity: int = 0, names=None) -> FiniteMonoid:
    """Check the table and return it as a FiniteMonoid.

    Raises the first violated law with its witness: the shape and ranges are
    checked first, then the identity laws, then associativity in
    lexicographic (i, j, k) order.
    """
    n = len(table)
    if n == 0:
        raise ValidationError("a monoid has at least one element")
    for i, row in enumerate(table):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} has length {len(row)}, expected {n}", (i,))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise IndexOutOfRange(f"entry ({i}, {j}) = {v!r} is not an index in [0, {n})", (i, j))
    if not (isinstance(identity, int) and 0 <= identity < n):
        raise IndexOutOfRange(f"identity {identity!r} is not an index in [0, {n})", (identity,))
    if names is not None and len(names) != n:
        raise ValidationError(f"expected {n} names, got {len(names)}")
    for i in range(n):
        if table[identity][i] != i or table[i][identity] != i:
            raise IdentityLawFails(i)
    for i in range(n):
        row = table[i]
        for j in range(n):
            ij = row[j]
            for k in range(n):
                lhs = table[ij][k]
                rhs = row[table[j][k]]
                if lhs != rhs:
                    raise NotAssociative(i, j, k, lhs, rhs)
    return FiniteMonoid(table, identity, names)


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, ("1",))


def from_transformations(degree: int, generators: Iterable[Sequence[int]], cap: int = CLOSURE_CAP) -> FiniteMonoid:
    """The monoid generated by the given maps on ``{0, ..., degree-1}``.

    Maps compose left to right: ``(f·g)(x) = g(f(x))``. Elements are
    numbered in breadth-first discovery order from the identity, expanding
    each element by the generators in the order given.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != degree or any(not 0 <= v < degree for v in g):
            raise ValueError(f"{list(g)} is not a total map on range({degree})")
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        f = queue.popleft()
        for g in gens:
            fg = tuple(g[v] for v in f)
            if fg not in index:
                if len(elems) >= cap:
                    raise ClosureTooLarge(f"closure exceeds {cap} elements")
                index[fg] = len(elems)
                elems.append(fg)
                queue.append(fg)
    table = [[index[tuple(g[v] for v in f)] for g in elems] for f in elems]
    sep = "" if degree <= 10 else ","
    names = [sep.join(map(str, f)) for f in elems]
    return FiniteMonoid(table, 0, names)


def full_transformation_monoid(degree: int) -> FiniteMonoid:
    return from_transformations(degree, product(range(degree), repeat=degree))


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    t = m.table
    return FiniteMonoid([[t[j][i] for j in m.elements] for i in m.elements], m.identity, m.names)


def direct_product(m: FiniteMonoid, n: FiniteMonoid) -> FiniteMonoid:
    pairs = [(a, b) for a in m.elements for b in n.elements]
    index = {p: i for i, p in enumerate(pairs)}
    table = [[index[(m.table[a][c], n.table[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    names = [f"({m.name(a)},{n.name(b)})" for a, b in pairs]
    return FiniteMonoid(table, index[(m.identity, n.identity)], names)


# basic structure


def idempotents(m: FiniteMonoid) -> list[int]:
    return list(m.idempotents)


def _left_closure(m: FiniteMonoid, xs) -> frozenset[int]:
    t = m.table
    return frozenset(t[y][x] for x in xs for y in m.elements)


def _right_closure(m: FiniteMonoid, xs) -> frozenset[int]:
    t = m.table
    return frozenset(t[x][y] for x in xs for y in m.elements)


def principal_ideal(m: FiniteMonoid, x: int, kind: str = "two_sided") -> ElementSubset:
    """``Mx``, ``xM`` or ``MxM`` according to kind (left, right, two_sided)."""
    if kind == "left":
        return ElementSubset(m, _left_closure(m, (x,)))
    if kind == "right":
        return ElementSubset(m, _right_closure(m, (x,)))
    if kind == "two_sided":
        return ElementSubset(m, _right_closure(m, _left_closure(m, (x,))))
    raise ValueError(f"unknown ideal kind {kind!r}")


def green_partition(m: FiniteMonoid, relation: str = "J", domain: Iterable[int] | None = None) -> SetPartition:
    """Partition ``domain`` (default: the idempotents) by Green's L, R or J."""
    kind = {"L": "left", "R": "right", "J": "two_sided"}[relation]
    dom = m.idempotents if domain is None else tuple(domain)
    groups: dict[frozenset[int], list[int]] = {}
    for e in dom:
        groups.setdefault(principal_ideal(m, e, kind).members, []).append(e)
    return SetPartition.from_blocks(groups.values())


def is_regular(m: FiniteMonoid) -> bool:
    t = m.table
    return all(any(t[t[x][y]][x] == x for y in m.elements) for x in m.elements)


def submonoid_generated(m: FiniteMonoid, gens: Iterable[int]) -> ElementSubset:
    t = m.table
    seen = {m.identity}
    frontier = [m.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                p = t[a][g]
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return ElementSubset(m, seen)


def _ideal_unions(m: FiniteMonoid, generators: dict[int, frozenset[int]], cap: int) -> list[frozenset[int]]:
    """All unions of the given principal ideals, including the empty one."""
    from .errors import TooManyIdeals

    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            for x in m.elements:
                if x in s:
                    continue
                u = s | generators[x]
                if u not in found:
                    found.add(u)
                    if len(found) > cap:
                        raise TooManyIdeals(f"more than {cap} ideals")
                    nxt.append(u)
        frontier = nxt
    return sorted(found, key=subset_key)


def subset_key(s) -> tuple[int, tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def two_sided_ideals(m: FiniteMonoid, cap: int = 2**16) -> list[ElementSubset]:
    gens = {x: principal_ideal(m, x, "two_sided").members for x in m.elements}
    return [ElementSubset(m, s) for s in _ideal_unions(m, gens, cap)]


# congruences and quotients


def _congruence_violation(m: FiniteMonoid, p: SetPartition):
    t = m.table
    lab = p.labels
    for block in p.blocks:
        a = block[0]
        for b in block[1:]:
            for x in m.elements:
                if lab[t[x][a]] != lab[t[x][b]]:
                    return ("left", x, a, b)
                if lab[t[a][x]] != lab[t[b][x]]:
                    return ("right", x, a, b)
    return None


def congruence_closure(m: FiniteMonoid, seed_pairs: Iterable[tuple[int, int]]) -> MonoidCongruence:
    """Smallest two-sided congruence containing the seed pairs."""
    t = m.table
    uf = UnionFind(m.size)
    work = deque()
    for a, b in seed_pairs:
        if uf.union(a, b):
            work.append((a, b))
    while work:
        a, b = work.popleft()
        for x in m.elements:
            for p, q in ((t[x][a], t[x][b]), (t[a][x], t[b][x])):
                if uf.union(p, q):
                    work.append((p, q))
    return MonoidCongruence(m, uf.partition())


def quotient_monoid(m: FiniteMonoid, c: MonoidCongruence | SetPartition):
    """Quotient table on the classes, plus the projection homomorphism.

    Classes are numbered by their least member, which also names them.
    """
    p = c.partition if isinstance(c, MonoidCongruence) else c
    bad = _congruence_violation(m, p)
    if bad is not None:
        side, x, a, b = bad
        raise NotACongruence(f"{a} ~ {b} but multiplying by {x} on the {side} separates them", (x, a, b))
    lab = p.labels
    reps = [b[0] for b in p.blocks]
    table = [[lab[m.table[a][b]] for b in reps] for a in reps]
    names = [m.name(r) for r in reps]
    q = FiniteMonoid(table, lab[m.identity], names)
    return q, MonoidHomomorphism(m, q, tuple(lab[x] for x in m.elements))


def commutative_quotient(m: FiniteMonoid):
    seeds = [(m.table[x][y], m.table[y][x]) for x in m.elements for y in m.elements]
    return quotient_monoid(m, congruence_closure(m, seeds))


def semilattice_quotient(m: FiniteMonoid):
    seeds = [(m.table[x][y], m.table[y][x]) for x in m.elements for y in m.elements]
    seeds += [(m.table[x][x], x) for x in m.elements]
    return quotient_monoid(m, congruence_closure(m, seeds))


def monoid_congruences(m: FiniteMonoid) -> list[MonoidCongruence]:
    """All two-sided congruences, by scanning every partition (small M only)."""
    from .partition import set_partitions

    return [MonoidCongruence(m, p) for p in set_partitions(m.size) if _congruence_violation(m, p) is None]


# commutative spectrum


def spec_prime_ideals(m: FiniteMonoid) -> list[ElementSubset]:
    """Proper prime ideals of a commutative monoid, the empty ideal included."""
    if not m.is_commutative():
        raise NotCommutative("Spec is only defined here for commutative monoids")
    t = m.table
    primes = []
    for ideal in two_sided_ideals(m):
        s = ideal.members
        if m.identity in s:
            continue
        if all(x in s or y in s for x in m.elements for y in m.elements if t[x][y] in s):
            primes.append(ideal)
    return primes


# isomorphism


def _element_profile(m: FiniteMonoid, x: int):
    t = m.table
    # index and period of the monogenic subsemigroup generated by x
    seen = {}
    p, k = x, 0
    while p not in seen:
        seen[p] = k
        p = t[p][x]
        k += 1
    index, period = seen[p], k - seen[p]
    return (
        x == m.identity,
        t[x][x] == x,
        index,
        period,
        len(principal_ideal(m, x, "left")),
        len(principal_ideal(m, x, "right")),
        len(principal_ideal(m, x, "two_sided")),
    )


def monoid_invariants(m: FiniteMonoid):
    """A cheap isomorphism invariant used to prune the search."""
    return (
        m.size,
        len(m.idempotents),
        tuple(sorted(_element_profile(m, x) for x in m.elements)),
        tuple(sorted(len(b) for b in green_partition(m, "J"))),
    )


def monoid_isomorphic(m: FiniteMonoid, n: FiniteMonoid) -> MonoidHomomorphism | None:
    """Return an isomorphism ``m -> n`` or None.

    Backtracking over profile-respecting assignments; every new assignment
    is closed under products of already-assigned elements before branching
    again, so generators effectively determine the rest.
    """
    if m.size != n.size or monoid_invariants(m) != monoid_invariants(n):
        return None
    prof_n: dict[tuple, list[int]] = {}
    for y in n.elements:
        prof_n.setdefault(_element_profile(n, y), []).append(y)
    cands = {x: prof_n[_element_profile(m, x)] for x in m.elements}
    tm, tn = m.table, n.table

    def propagate(f: dict[int, int], used: set[int], x: int, y: int) -> bool:
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if a in f:
                if f[a] != b:
                    return False
                continue
            if b in used or b not in cands[a]:
                return False
            f[a] = b
            used.add(b)
            for c in list(f):
                fc = f[c]
                stack.append((tm[a][c], tn[b][fc]))
                stack.append((tm[c][a], tn[fc][b]))
        return True

    def search(f: dict[int, int], used: set[int]):
        if len(f) == m.size:
            return f
        x = min((x for x in m.elements if x not in f), key=lambda x: (len(cands[x]), x))
        for y in cands[x]:
            if y in used:
                continue
            g, u = dict(f), set(used)
            if propagate(g, u, x, y):
                res = search(g, u)
                if res is not None:
                    return res
        return None

    f0: dict[int, int] = {}
    used0: set[int] = set()
    if not propagate(f0, used0, m.identity, n.identity):
        return None
    res = search(f0, used0)
    if res is None:
        return None
    return MonoidHomomorphism(m, n, tuple(res[x] for x in m.elements))


def canonical_table(m: FiniteMonoid) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabelled table with the identity at 0.

    Brute force over all relabellings; intended for order <= 6.
    """
    from itertools import permutations

    others = [x for x in m.elements if x != m.identity]
    best = None
    for perm in permutations(range(1, m.size)):
        relabel = {m.identity: 0}
        relabel.update(zip(others, perm))
        inv = sorted(relabel, key=relabel.get)
        cand = tuple(tuple(relabel[m.table[a][b]] for b in inv) for a in inv)
        if best is None or cand < best:
            best = cand
    return best
