"""Finite left and right M-sets.

An :class:`MSet` stores its action in the orientation of its side: for a
left M-set ``table[m][a] = m·a``, for a right M-set ``table[a][m] = a·m``.
Algorithms go through :attr:`MSet.rows`, which is always indexed
``[m][a]``, so most code is side-agnostic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import ActionNotAssociative, CarrierTooLarge, IdentityActionFails, IndexOutOfRange, ValidationError
from .monoid import ElementSubset, FiniteMonoid, MonoidHomomorphism
from .partition import SetPartition, UnionFind

HOM_SET_CAP = 10**6


@dataclass(frozen=True, eq=False)
class MSet:
    monoid: FiniteMonoid = field(repr=False)
    side: str
    size: int
    table: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {self.side!r}")
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        if self.side == "left":
            return self.table
        return tuple(tuple(self.table[a][m] for a in range(self.size)) for m in self.monoid.elements)

    def act(self, m: int, a: int) -> int:
        return self.rows[m][a]

    def orbit(self, a: int) -> frozenset[int]:
        return frozenset(r[a] for r in self.rows)

    def label(self, a: int):
        return self.labels[a] if self.labels is not None else a

    def __repr__(self):
        return f"MSet(side={self.side!r}, size={self.size})"


def mset_from_rows(monoid: FiniteMonoid, side: str, rows: Sequence[Sequence[int]], size: int, labels=None) -> MSet:
    """Build an MSet from an ``[m][a]``-indexed action."""
    if side == "left":
        table = rows
    else:
        table = [[rows[m][a] for m in monoid.elements] for a in range(size)]
    ms = MSet(monoid, side, size, table, labels)
    ms.__dict__["rows"] = tuple(tuple(r) for r in rows)
    return ms


@dataclass(frozen=True, eq=False)
class MSetCongruence:
    mset: MSet
    partition: SetPartition

    def is_compatible(self) -> bool:
        lab = self.partition.labels
        for block in self.partition.blocks:
            a = block[0]
            for b in block[1:]:
                for r in self.mset.rows:
                    if lab[r[a]] != lab[r[b]]:
                        return False
        return True


@dataclass(frozen=True, eq=False)
class EquivariantMap:
    source: MSet
    target: MSet
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_equivariant(self) -> bool:
        f = self.map
        return all(
            f[rs[a]] == rt[f[a]]
            for rs, rt in zip(self.source.rows, self.target.rows)
            for a in range(self.source.size)
        )


# construction


def validate_action(monoid: FiniteMonoid, table: Sequence[Sequence[int]], side: str = "left", labels=None) -> MSet:
    """Validate an action table laid out per ``side`` and wrap it.

    Left tables are ``[m][a]`` with ``k = len(table[0])``; right tables are
    ``[a][m]`` with ``k = len(table)``.
    """
    n = monoid.size
    if side == "left":
        if len(table) != n:
            raise IndexOutOfRange(f"left action needs {n} rows, got {len(table)}")
        k = len(table[0]) if n else 0
        rows = table
        if any(len(r) != k for r in rows):
            raise IndexOutOfRange("ragged action table")
    elif side == "right":
        k = len(table)
        if any(len(r) != n for r in table):
            raise IndexOutOfRange(f"each right-action row needs {n} entries")
        rows = [[table[a][m] for a in range(k)] for m in range(n)]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    for m in range(n):
        for a in range(k):
            v = rows[m][a]
            if not isinstance(v, int) or not 0 <= v < k:
                raise IndexOutOfRange(f"action value {v!r} out of range", (m, a))
    ident = rows[monoid.identity]
    for a in range(k):
        if ident[a] != a:
            raise IdentityActionFails(a)
    t = monoid.table
    for m in range(n):
        for p in range(n):
            mp = rows[t[m][p]]
            for a in range(k):
                composed = rows[m][rows[p][a]] if side == "left" else rows[p][rows[m][a]]
                if mp[a] != composed:
                    raise ActionNotAssociative(m, p, a)
    return MSet(monoid, side, k, table, labels)


def regular_mset(monoid: FiniteMonoid, side: str = "left") -> MSet:
    """M acting on itself by multiplication."""
    t = monoid.table
    rows = [list(t[m]) for m in monoid.elements] if side == "left" else [[t[a][m] for a in monoid.elements] for m in monoid.elements]
    return mset_from_rows(monoid, side, rows, monoid.size, labels=tuple(monoid.elements))


def sub_mset(monoid: FiniteMonoid, members: Iterable[int], side: str) -> MSet:
    """A union of orbits inside M (a left or right ideal) with the restricted action.

    Carrier indices follow the sorted member order; ``labels`` holds the
    monoid element each index stands for.
    """
    elems = sorted(members)
    pos = {x: i for i, x in enumerate(elems)}
    t = monoid.table
    try:
        if side == "left":
            rows = [[pos[t[m][x]] for x in elems] for m in monoid.elements]
        else:
            rows = [[pos[t[x][m]] for x in elems] for m in monoid.elements]
    except KeyError:
        raise ValidationError(f"subset is not closed under the {side} action") from None
    return mset_from_rows(monoid, side, rows, len(elems), labels=tuple(elems))


def principal_left_mset(monoid: FiniteMonoid, e: int) -> MSet:
    """The left ideal ``Me`` as a left M-set."""
    return sub_mset(monoid, {monoid.table[m][e] for m in monoid.elements}, "left")


def right_ideal_mset(monoid: FiniteMonoid, ideal) -> MSet:
    members = ideal.members if isinstance(ideal, ElementSubset) else ideal
    return sub_mset(monoid, members, "right")


def singleton_mset(monoid: FiniteMonoid, side: str = "left") -> MSet:
    return mset_from_rows(monoid, side, [[0] for _ in monoid.elements], 1)


def empty_mset(monoid: FiniteMonoid, side: str = "left") -> MSet:
    return mset_from_rows(monoid, side, [[] for _ in monoid.elements], 0)


def disjoint_union(a: MSet, b: MSet) -> MSet:
    if a.side != b.side:
        raise ValueError("sides differ")
    rows = [list(ra) + [x + a.size for x in rb] for ra, rb in zip(a.rows, b.rows)]
    labels = [("L", a.label(x)) for x in range(a.size)] + [("R", b.label(x)) for x in range(b.size)]
    return mset_from_rows(a.monoid, a.side, rows, a.size + b.size, labels)


def quotient_mset(c: MSetCongruence) -> tuple[MSet, tuple[int, ...]]:
    if not c.is_compatible():
        raise ValidationError("partition is not compatible with the action")
    p, a = c.partition, c.mset
    lab = p.labels
    reps = [b[0] for b in p.blocks]
    rows = [[lab[r[x]] for x in reps] for r in a.rows]
    q = mset_from_rows(a.monoid, a.side, rows, len(reps), labels=tuple(a.label(x) for x in reps))
    return q, tuple(lab[x] for x in range(a.size))


def cyclic_from_congruence(c: MSetCongruence) -> tuple[MSet, tuple[int, ...], int]:
    """Quotient ``M/ρ`` of M acting on itself; also returns the class of 1."""
    q, proj = quotient_mset(c)
    return q, proj, proj[c.mset.monoid.identity]


def k_rho(c: MSetCongruence, a: int) -> ElementSubset:
    """The submonoid ``{x : x·a ~ a}``."""
    lab = c.partition.labels
    m = c.mset.monoid
    k = ElementSubset(m, {x for x in m.elements if lab[c.mset.act(x, a)] == lab[a]})
    if not k.is_submonoid():
        from .errors import InvariantViolation

        raise InvariantViolation(f"stabiliser of the class of {a} is not a submonoid")
    return k


# homomorphisms


def _generators(a: MSet) -> list[int]:
    gens, covered = [], set()
    for x in range(a.size):
        if x not in covered:
            gens.append(x)
            covered |= a.orbit(x)
    return gens


def equivariant_maps(a: MSet, b: MSet, injective: bool = False, limit: int | None = None):
    """Yield equivariant maps ``a -> b`` as tuples.

    Only images of a generating set are chosen; everything else is forced
    by ``f(m·g) = m·f(g)``, and clashes prune the branch.
    """
    if a.monoid is not b.monoid and a.monoid != b.monoid:
        raise ValueError("M-sets over different monoids")
    if a.side != b.side:
        raise ValueError("M-sets on different sides")
    gens = _generators(a)
    ra, rb = a.rows, b.rows
    nm = len(ra)
    f = [-1] * a.size
    used = [0] * b.size
    count = 0

    def rec(i: int):
        nonlocal count
        if i == len(gens):
            count += 1
            yield tuple(f)
            return
        g = gens[i]
        for y in range(b.size):
            assigned = []
            ok = True
            for m in range(nm):
                x, v = ra[m][g], rb[m][y]
                if f[x] == -1:
                    if injective and used[v]:
                        ok = False
                        break
                    f[x] = v
                    used[v] += 1
                    assigned.append(x)
                elif f[x] != v:
                    ok = False
                    break
            if ok:
                yield from rec(i + 1)
            for x in assigned:
                used[f[x]] -= 1
                f[x] = -1
            if limit is not None and count >= limit:
                return

    yield from rec(0)


def mset_hom_set(a: MSet, b: MSet) -> list[EquivariantMap]:
    return [EquivariantMap(a, b, f) for f in equivariant_maps(a, b)]


def mset_hom_set_bruteforce(a: MSet, b: MSet) -> list[EquivariantMap]:
    """All equivariant maps by filtering every set map (reference only)."""
    out = []
    for f in product(range(b.size), repeat=a.size):
        if all(f[ra[x]] == rb[f[x]] for ra, rb in zip(a.rows, b.rows) for x in range(a.size)):
            out.append(EquivariantMap(a, b, f))
    return out


def mset_isomorphic(a: MSet, b: MSet) -> EquivariantMap | None:
    if a.size != b.size or a.side != b.side:
        return None
    if sorted(len(a.orbit(x)) for x in range(a.size)) != sorted(len(b.orbit(y)) for y in range(b.size)):
        return None
    for f in equivariant_maps(a, b, injective=True, limit=1):
        return EquivariantMap(a, b, f)
    return None


# tensor products


@dataclass(frozen=True)
class TensorProduct:
    """``X ⊗_M A`` with classes named by their least ``(x, a)`` pair."""

    left_size: int
    right_size: int
    classes: tuple[tuple[int, int], ...]
    projection: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def cls(self, x: int, a: int) -> int:
        return self.projection[x * self.right_size + a]


def tensor(x: MSet, a: MSet) -> TensorProduct:
    """Quotient of ``X × A`` by ``(x·m, a) ≈ (x, m·a)``."""
    if x.side != "right" or a.side != "left":
        raise ValueError("tensor needs a right M-set and a left M-set")
    nx, na = x.size, a.size
    uf = UnionFind(nx * na)
    for rx, ra in zip(x.rows, a.rows):
        for xi in range(nx):
            xm = rx[xi] * na
            base = xi * na
            for ai in range(na):
                uf.union(xm + ai, base + ra[ai])
    roots: dict[int, int] = {}
    classes = []
    projection = [0] * (nx * na)
    # pairs are visited in lexicographic order, so the first hit is the least
    for p in range(nx * na):
        r = uf.find(p)
        if r not in roots:
            roots[r] = len(classes)
            classes.append(divmod(p, na))
        projection[p] = roots[r]
    return TensorProduct(nx, na, tuple(classes), tuple(projection))


def right_mset_via_hom(f: MonoidHomomorphism) -> MSet:
    """``M'`` as a right M-set: ``m'·m = m' f(m)``."""
    src, tgt = f.source, f.target
    rows = [[tgt.table[y][f.map[m]] for y in tgt.elements] for m in src.elements]
    return mset_from_rows(src, "right", rows, tgt.size, labels=tuple(tgt.elements))


def tensor_along_hom(f: MonoidHomomorphism, a: MSet) -> MSet:
    """The induced left ``M'``-set ``M' ⊗_M A``."""
    if a.side != "left" or a.monoid != f.source:
        raise ValueError("need a left M-set over the source of f")
    tp = tensor(right_mset_via_hom(f), a)
    tgt = f.target
    rows = [[tp.cls(tgt.table[m][y], ai) for (y, ai) in tp.classes] for m in tgt.elements]
    return mset_from_rows(tgt, "left", rows, tp.size, labels=tp.classes)


def hom_set_as_right_mset(a: MSet, target_size: int, cap: int = HOM_SET_CAP) -> MSet:
    """``Hom_Sets(A, Y)`` as a right M-set, ``(α·m)(x) = α(m·x)``.

    Carrier elements are the maps as tuples in lexicographic order.
    """
    if a.side != "left":
        raise ValueError("direct image needs a left M-set")
    total = target_size ** a.size
    if total > cap:
        raise CarrierTooLarge(f"{target_size}^{a.size} = {total} maps exceeds the cap {cap}")
    maps = list(product(range(target_size), repeat=a.size))
    weights = [target_size ** (a.size - 1 - i) for i in range(a.size)]

    def index(alpha) -> int:
        return sum(w * v for w, v in zip(weights, alpha))

    rows = [[index([alpha[r[x]] for x in range(a.size)]) for alpha in maps] for r in a.rows]
    return mset_from_rows(a.monoid, "right", rows, total, labels=tuple(maps))
