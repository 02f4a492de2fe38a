"""Points of the topos of right M-sets for a finite monoid M.

Points correspond to filtered left M-sets, and every one of those is
isomorphic to ``Me`` for an idempotent ``e``; two idempotents give the same
point exactly when they are J-equivalent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ClassificationFailed, InvariantViolation, NotAnFMonoid, NotASubmonoid
from .monoid import (
    ElementSubset,
    FiniteMonoid,
    MonoidHomomorphism,
    green_partition,
    submonoid_generated,
)
from .msets import (
    MSet,
    MSetCongruence,
    mset_isomorphic,
    principal_left_mset,
    quotient_mset,
    regular_mset,
    tensor_along_hom,
)
from .partition import SetPartition, UnionFind


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FilterednessReport:
    verdict: bool
    failing_condition: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.verdict


def is_filtered(a: MSet) -> FilterednessReport:
    """Check the three filteredness conditions F1-F3 on a left M-set.

    F2 is scanned over ``(m1, m2, a)`` in lexicographic order and F3 over
    pairs ``(a1, a2)``; only the first failure is reported.
    """
    if a.side != "left":
        raise ValueError("filteredness is a property of left M-sets")
    if a.size == 0:
        return FilterednessReport(False, "F1", ())
    m = a.monoid
    t = m.table
    rows = a.rows
    images = [set(r) for r in rows]
    producers = [[x for x in m.elements if p in images[x]] for p in range(a.size)]
    for m1 in m.elements:
        r1 = rows[m1]
        for m2 in range(m1 + 1, m.size):
            r2 = rows[m2]
            for p in range(a.size):
                if r1[p] == r2[p] and not any(t[m1][x] == t[m2][x] for x in producers[p]):
                    return FilterednessReport(False, "F2", (m1, m2, p))
    orbits = [a.orbit(p) for p in range(a.size)]
    for a1 in range(a.size):
        for a2 in range(a1 + 1, a.size):
            if not any(a1 in o and a2 in o for o in orbits):
                return FilterednessReport(False, "F3", (a1, a2))
    return FilterednessReport(True)


def common_generator(a: MSet, elements: Sequence[int]) -> tuple[list[int], int]:
    """Find ``m_i`` and ``c`` with ``elements[i] = m_i·c`` in a filtered M-set.

    Folds the pairwise condition F3 over the list. With ``b = n'·c`` from
    the pairwise step, earlier coefficients become ``n_i·n'``.
    """
    m = a.monoid
    t = m.table
    rows = a.rows
    if not elements:
        raise ValueError("need at least one element")

    def pair(a1: int, a2: int):
        for c in range(a.size):
            m1 = next((x for x in m.elements if rows[x][c] == a1), None)
            if m1 is None:
                continue
            m2 = next((x for x in m.elements if rows[x][c] == a2), None)
            if m2 is not None:
                return m1, m2, c
        raise InvariantViolation(f"F3 fails for ({a1}, {a2}); the M-set is not filtered")

    coeffs = [m.identity]
    b = elements[0]
    for ak in elements[1:]:
        n1, mk, c = pair(b, ak)
        coeffs = [t[ni][n1] for ni in coeffs] + [mk]
        b = c
    return coeffs, b


# F-monoids


def _require_submonoid(k: ElementSubset):
    if not k.is_submonoid():
        raise NotASubmonoid(f"{k.sorted()} is not a submonoid")


def is_F_monoid(k: ElementSubset) -> Verdict:
    """Every ``m, n`` in K admit ``x`` in K with ``m·x = n·x``."""
    _require_submonoid(k)
    t = k.parent.table
    members = k.sorted()
    for mi in members:
        for ni in members:
            if ni > mi and not any(t[mi][x] == t[ni][x] for x in members):
                return Verdict(False, "no right equaliser", (mi, ni))
    return Verdict(True)


def right_zero(k: ElementSubset) -> int | None:
    t = k.parent.table
    for r in k.sorted():
        if all(t[x][r] == r for x in k.members):
            return r
    return None


def _equaliser(k: ElementSubset, m: int, n: int) -> int:
    t = k.parent.table
    for x in k.sorted():
        if t[m][x] == t[n][x]:
            return x
    raise NotAnFMonoid(f"{m} and {n} have no right equaliser in the submonoid")


def common_right_fixer(k: ElementSubset, ms: Sequence[int]) -> int:
    """An ``x`` in K with ``m·x = x`` for every m in ms, built inductively."""
    _require_submonoid(k)
    m = k.parent
    t = m.table
    for x in ms:
        if x not in k:
            raise ValueError(f"{x} is not in the submonoid")
    if not ms:
        return m.identity

    def single(mi: int) -> int:
        return _equaliser(k, mi, m.identity)

    def two(m1: int, m2: int) -> int:
        y1, y2 = single(m1), single(m2)
        z = _equaliser(k, y1, y2)
        return t[y1][z]

    x = single(ms[0])
    for mk in ms[1:]:
        # x fixes everything so far; find w fixed by x and by mk, then x·w = w
        x = two(x, mk)
    for mi in ms:
        if t[mi][x] != x:
            raise InvariantViolation(f"constructed fixer {x} is not fixed by {mi}")
    return x


def saturation(m: FiniteMonoid, k: ElementSubset) -> ElementSubset:
    """Smallest saturated submonoid containing K.

    Alternates closing under products and adding every ``y`` with
    ``y·x = x`` for some current ``x``, until nothing changes.
    """
    _require_submonoid(k)
    t = m.table
    cur = frozenset(k.members)
    while True:
        nxt = submonoid_generated(m, cur).members
        nxt = nxt | {y for y in m.elements for x in nxt if t[y][x] == x}
        if nxt == cur:
            return ElementSubset(m, cur)
        cur = nxt


def one_step_saturation(m: FiniteMonoid, k: ElementSubset) -> ElementSubset:
    """``{y : y·x = x for some x in K}``; equals the saturation for F-submonoids."""
    t = m.table
    return ElementSubset(m, {y for y in m.elements for x in k.members if t[y][x] == x})


def is_saturated(m: FiniteMonoid, k: ElementSubset) -> bool:
    return k.is_submonoid() and one_step_saturation(m, k).members <= k.members


def submonoids(m: FiniteMonoid, cap: int = 10**5) -> list[ElementSubset]:
    """All submonoids, found by repeatedly adjoining one generator."""
    from .errors import TooLarge

    start = submonoid_generated(m, ()).members
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for x in m.elements:
                if x in s:
                    continue
                u = submonoid_generated(m, s | {x}).members
                if u not in found:
                    found.add(u)
                    if len(found) > cap:
                        raise TooLarge(f"more than {cap} submonoids")
                    nxt.append(u)
        frontier = nxt
    return [ElementSubset(m, s) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


def quotient_by_F_submonoid(m: FiniteMonoid, k: ElementSubset, check_filtered: bool = True) -> tuple[MSet, tuple[int, ...]]:
    """``M/K`` for an F-submonoid K, where ``a ~ b`` iff ``a·x = b·x`` for some x in K.

    Transitivity of the relation is checked rather than assumed.
    """
    verdict = is_F_monoid(k)
    if not verdict:
        raise NotAnFMonoid(f"{k.sorted()} is not an F-monoid; witness {verdict.witness}")
    t = m.table
    kk = k.sorted()
    cols = [tuple(t[a][x] for x in kk) for a in m.elements]
    orbit = [set(c) for c in cols]
    uf = UnionFind(m.size)
    for a in m.elements:
        for b in range(a + 1, m.size):
            related = any(p == q for p, q in zip(cols[a], cols[b]))
            if related != (not orbit[a].isdisjoint(orbit[b])):
                raise InvariantViolation(f"the two descriptions of ~_K disagree at ({a}, {b})")
            if related:
                uf.union(a, b)
    part = uf.partition()
    for a in m.elements:
        for b in range(a + 1, m.size):
            if part.same(a, b) and not any(p == q for p, q in zip(cols[a], cols[b])):
                raise InvariantViolation(f"~_K is not transitive: {a} and {b} are linked but unrelated")
    q, proj = quotient_mset(MSetCongruence(regular_mset(m, "left"), part))
    if check_filtered:
        report = is_filtered(q)
        if not report:
            raise InvariantViolation(f"M/K is not filtered ({report.failing_condition})")
    return q, proj


# classification


@dataclass(frozen=True, eq=False)
class CategoryI:
    """Objects are idempotents; arrows ``e -> f`` are the elements of ``fMe``."""

    monoid: FiniteMonoid = field(repr=False)
    objects: tuple[int, ...]

    def hom(self, e: int, f: int) -> ElementSubset:
        t = self.monoid.table
        return ElementSubset(self.monoid, {t[t[f][x]][e] for x in self.monoid.elements})

    def identity(self, e: int) -> int:
        return e

    def compose(self, second: int, first: int, e: int | None = None, f: int | None = None, g: int | None = None) -> int:
        """Composite of ``first: e -> f`` then ``second: f -> g``."""
        if e is not None and f is not None and first not in self.hom(e, f):
            raise ValueError(f"{first} is not an arrow {e} -> {f}")
        if f is not None and g is not None and second not in self.hom(f, g):
            raise ValueError(f"{second} is not an arrow {f} -> {g}")
        return self.monoid.table[second][first]

    def is_iso_pair(self, e: int, f: int) -> tuple[int, int] | None:
        """``(a, b)`` with a in eMf, b in fMe, ``ab = e`` and ``ba = f``."""
        t = self.monoid.table
        hom_fe = self.hom(f, e).sorted()
        hom_ef = self.hom(e, f).sorted()
        for a in hom_fe:
            for b in hom_ef:
                if t[a][b] == e and t[b][a] == f:
                    return a, b
        return None

    def hom_size_matrix(self) -> list[list[int]]:
        return [[len(self.hom(e, f)) for f in self.objects] for e in self.objects]


def category_I(m: FiniteMonoid) -> CategoryI:
    return CategoryI(m, m.idempotents)


@dataclass(frozen=True, eq=False)
class PointsClassification:
    monoid: FiniteMonoid = field(repr=False)
    representatives: tuple[int, ...]
    j_classes: SetPartition
    category: CategoryI = field(repr=False)

    def __len__(self):
        return len(self.representatives)

    def representative_of(self, e: int) -> int:
        return self.j_classes.block_of(e)[0]

    def point_mset(self, e: int) -> MSet:
        return principal_left_mset(self.monoid, e)


def classify_points(m: FiniteMonoid, check: bool = True) -> PointsClassification:
    """One point per J-class of idempotents, represented by its least index."""
    classes = green_partition(m, "J")
    reps = tuple(b[0] for b in classes.blocks)
    if check:
        for e in reps:
            report = is_filtered(principal_left_mset(m, e))
            if not report:
                raise InvariantViolation(f"M{e} is not filtered ({report.failing_condition})")
    return PointsClassification(m, reps, classes, category_I(m))


def endomorphism_monoid_of_point(m: FiniteMonoid, e: int) -> FiniteMonoid:
    """``(eMe)^op`` on the sorted elements of eMe, identity e."""
    t = m.table
    if t[e][e] != e:
        raise ValueError(f"{e} is not idempotent")
    elems = sorted({t[t[e][x]][e] for x in m.elements})
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[t[y][x]] for y in elems] for x in elems]
    return FiniteMonoid(table, pos[e], [m.name(x) for x in elems])


def induced_point_map(f: MonoidHomomorphism, source: PointsClassification | None = None,
                      target: PointsClassification | None = None) -> dict[int, int]:
    """Send each source representative e to the target representative of ``M' ⊗_M Me``."""
    src = source or classify_points(f.source)
    tgt = target or classify_points(f.target)
    tgt_msets = [(r, principal_left_mset(f.target, r)) for r in tgt.representatives]
    out = {}
    for e in src.representatives:
        induced = tensor_along_hom(f, principal_left_mset(f.source, e))
        match = next((r for r, me in tgt_msets if mset_isomorphic(induced, me) is not None), None)
        if match is None:
            raise ClassificationFailed(f"M' ⊗ M{e} is isomorphic to no M'e'")
        out[e] = match
    return out

