"""Brute-force reference enumerations and the small-monoid corpus.

Everything here deliberately avoids the structural shortcuts used by the
main modules: congruences come from scanning every partition, topologies
from solving the axioms directly, monoids from exhaustive table search.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product

from .errors import CarrierTooLarge, OrderTooLarge, TooManyIdeals, ValidationError
from .fixtures import FIXTURES
from .monoid import FiniteMonoid, canonical_table, monoid_isomorphic, monoid_invariants, validate_monoid
from .msets import MSet, MSetCongruence, mset_isomorphic, quotient_mset, regular_mset
from .partition import BELL, set_partitions
from .points import is_filtered
from .topologies import TopologyFamily, is_grothendieck_topology, residual, right_ideals

log = logging.getLogger(__name__)

MAX_CONGRUENCE_CARRIER = 7
MAX_TOPOLOGY_IDEALS = 20
MAX_ENUMERATION_ORDER = 4


def enumerate_mset_congruences(a: MSet, max_carrier: int = MAX_CONGRUENCE_CARRIER) -> list[MSetCongruence]:
    """Every action-compatible partition of the carrier."""
    if a.size > max_carrier:
        raise CarrierTooLarge(f"carrier of size {a.size} needs Bell({a.size}) partitions; limit is {max_carrier}")
    out = []
    for p in set_partitions(a.size):
        c = MSetCongruence(a, p)
        if c.is_compatible():
            out.append(c)
    return out


def enumerate_filtered_cyclic(m: FiniteMonoid, max_carrier: int = MAX_CONGRUENCE_CARRIER) -> list[MSet]:
    """Filtered quotients of M acting on itself, one per isomorphism class."""
    found: list[MSet] = []
    for c in enumerate_mset_congruences(regular_mset(m, "left"), max_carrier):
        q, _ = quotient_mset(c)
        if is_filtered(q) and not any(mset_isomorphic(q, other) for other in found):
            found.append(q)
    return found


def enumerate_topologies(m: FiniteMonoid, max_ideals: int = MAX_TOPOLOGY_IDEALS) -> list[TopologyFamily]:
    """All families of right ideals satisfying T1-T3.

    The axioms are Horn clauses in the membership variables (T1 a fact, T2
    ``a -> (a:x)``, T3 ``b ∧ ⋀(a:y) -> a``), so the models are exactly the
    closed sets of forward chaining; each one is reached once by deciding
    ideals in a fixed order and closing after every positive decision.
    """
    ideals = [r.members for r in right_ideals(m)]
    k = len(ideals)
    if k > max_ideals:
        raise TooManyIdeals(f"{k} right ideals; exhaustive topology search is limited to {max_ideals}")
    idx = {s: i for i, s in enumerate(ideals)}
    res = {(i, x): idx[residual(m, ideals[i], x).members] for i in range(k) for x in m.elements}
    clauses: list[tuple[frozenset[int], int]] = []
    for i in range(k):
        for x in m.elements:
            clauses.append((frozenset([i]), res[(i, x)]))
    for b in range(k):
        for a in range(k):
            body = frozenset([b]) | {res[(a, y)] for y in ideals[b]}
            clauses.append((body, a))
    whole = idx[frozenset(m.elements)]

    def close(s: set[int]) -> set[int]:
        s = set(s)
        changed = True
        while changed:
            changed = False
            for body, head in clauses:
                if head not in s and body <= s:
                    s.add(head)
                    changed = True
        return s

    models: list[frozenset[int]] = []

    def rec(i: int, true: set[int], false: set[int]):
        if i == k:
            models.append(frozenset(true))
            return
        if i in true:
            rec(i + 1, true, false)
            return
        false.add(i)
        rec(i + 1, true, false)
        false.discard(i)
        closed = close(true | {i})
        if not closed & false:
            rec(i + 1, closed, false)

    rec(0, close({whole}), set())
    out = []
    for model in models:
        fam = TopologyFamily(m, frozenset(ideals[i] for i in model))
        if not is_grothendieck_topology(m, fam):
            raise AssertionError("Horn model failed the axiom check")
        out.append(fam)
    return out


# monoid enumeration


def enumerate_monoids_of_order(n: int) -> list[FiniteMonoid]:
    """All monoids of order n up to isomorphism, identity at 0.

    Backtracking over the ``(n-1)²`` free cells with associativity checked
    as soon as a triple's entries are known; dedup by canonical relabelling.
    """
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}")
    if n < 1:
        return []
    table = [[-1] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = table[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    seen: dict = {}

    def consistent() -> bool:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab < 0:
                    continue
                for c in range(n):
                    bc = table[b][c]
                    if bc < 0:
                        continue
                    lhs, rhs = table[ab][c], table[a][bc]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
        return True

    def rec(k: int):
        if k == len(cells):
            mon = FiniteMonoid(table, 0)
            key = canonical_table(mon)
            seen.setdefault(key, FiniteMonoid(key, 0))
            return
        i, j = cells[k]
        for v in range(n):
            table[i][j] = v
            if consistent():
                rec(k + 1)
        table[i][j] = -1

    rec(0)
    return [seen[key] for key in sorted(seen)]


def enumerate_monoids_bruteforce(n: int) -> list[FiniteMonoid]:
    """Same as :func:`enumerate_monoids_of_order` by scanning every table.

    Independent second algorithm: every filling of the free cells is
    validated, survivors are deduplicated with pairwise isomorphism search.
    """
    reps: list[FiniteMonoid] = []
    free = (n - 1) ** 2
    for values in product(range(n), repeat=free):
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            table[0][i] = table[i][0] = i
        it = iter(values)
        for i in range(1, n):
            for j in range(1, n):
                table[i][j] = next(it)
        try:
            mon = validate_monoid(table, 0)
        except ValidationError:
            continue
        if not any(monoid_isomorphic(mon, r) for r in reps):
            reps.append(mon)
    return reps


@dataclass
class CorpusEntry:
    name: str
    monoid: FiniteMonoid = field(repr=False)
    provenance: tuple[str, ...]


@dataclass
class Corpus:
    entries: list[CorpusEntry]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def monoids(self) -> list[FiniteMonoid]:
        return [e.monoid for e in self.entries]

    def get(self, name: str) -> CorpusEntry:
        return next(e for e in self.entries if e.name == name)


def enumerate_monoids(max_order: int) -> Corpus:
    if max_order > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"order {max_order} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}")
    entries = []
    for n in range(1, max_order + 1):
        for k, mon in enumerate(enumerate_monoids_of_order(n)):
            entries.append(CorpusEntry(f"order{n}_{k}", mon, ("enumerated",)))
    return Corpus(entries)


def build_corpus(max_order: int = 4, fixtures: bool = True, fixture_names=None) -> Corpus:
    """Enumerated monoids plus named fixtures, pairwise non-isomorphic.

    A fixture isomorphic to an enumerated monoid renames that entry rather
    than being added twice.
    """
    corpus = enumerate_monoids(max_order) if max_order > 0 else Corpus([])
    if not fixtures:
        return corpus
    names = FIXTURES if fixture_names is None else fixture_names
    for name in names:
        mon = FIXTURES[name]()
        inv = monoid_invariants(mon)
        dup = next(
            (e for e in corpus.entries
             if e.monoid.size == mon.size and monoid_invariants(e.monoid) == inv and monoid_isomorphic(e.monoid, mon)),
            None,
        )
        tag = "transformation" if name in ("t2", "t3") else "named example"
        if dup is None:
            corpus.entries.append(CorpusEntry(name, mon, (tag,)))
        elif dup.provenance == ("enumerated",):
            dup.name = name
            dup.monoid = mon
            dup.provenance = ("enumerated", tag)
    return corpus


def bell_guard_allows(m: FiniteMonoid) -> bool:
    return m.size <= MAX_CONGRUENCE_CARRIER and BELL[m.size] <= BELL[MAX_CONGRUENCE_CARRIER]


def run_theorem_suite(corpus: Corpus, checks=None):
    """See :mod:`monoidpoints.suite`; re-exported here next to the corpus builders."""
    from .suite import run_theorem_suite as run

    return run(corpus, checks)
