from itertools import product

import pytest

from monoidpoints.errors import CarrierTooLarge, OrderTooLarge, TooManyIdeals
from monoidpoints.fixtures import fixture, t_n
from monoidpoints.monoid import canonical_table, monoid_isomorphic
from monoidpoints.msets import regular_mset, singleton_mset
from monoidpoints.oracle import (
    build_corpus,
    enumerate_filtered_cyclic,
    enumerate_monoids,
    enumerate_monoids_bruteforce,
    enumerate_monoids_of_order,
    enumerate_mset_congruences,
    enumerate_topologies,
)
from monoidpoints.points import classify_points
from monoidpoints.topologies import idempotent_ideal_lattice

# generated by enumerate_monoids_of_order, recounted by the brute-force scan
GOLDEN_MONOID_COUNTS = {1: 1, 2: 2, 3: 7, 4: 35}


def _congruences_by_labelling(a):
    """Independent recount: every labelling of the carrier, deduplicated."""
    found = set()
    for labels in product(range(a.size), repeat=a.size):
        ok = all(
            labels[r[x]] == labels[r[y]]
            for r in a.rows
            for x in range(a.size)
            for y in range(a.size)
            if labels[x] == labels[y]
        )
        if ok:
            blocks = {}
            for x, lab in enumerate(labels):
                blocks.setdefault(lab, []).append(x)
            found.add(frozenset(frozenset(b) for b in blocks.values()))
    return found


def test_congruence_counts(two, m5):
    assert len(enumerate_mset_congruences(singleton_mset(m5))) == 1
    assert len(enumerate_mset_congruences(regular_mset(two))) == 2
    got = enumerate_mset_congruences(regular_mset(m5))
    brute = _congruences_by_labelling(regular_mset(m5))
    assert {frozenset(map(frozenset, c.partition.blocks)) for c in got} == brute
    assert len(got) == len(brute)


def test_congruence_guard(t3):
    with pytest.raises(CarrierTooLarge):
        enumerate_mset_congruences(regular_mset(t3))


def test_filtered_cyclic_counts(trivial, two, m5):
    assert len(enumerate_filtered_cyclic(trivial)) == 1
    assert len(enumerate_filtered_cyclic(two)) == 2
    assert len(enumerate_filtered_cyclic(m5)) == 4


def test_topology_counts(trivial, two, m5):
    assert len(enumerate_topologies(trivial)) == 2
    assert len(enumerate_topologies(two)) == 3
    assert len(enumerate_topologies(m5)) == 6


def _topologies_by_subset_scan(m):
    from monoidpoints.topologies import is_grothendieck_topology, right_ideals

    ideals = [r.members for r in right_ideals(m)]
    out = set()
    for bits in range(2 ** len(ideals)):
        fam = frozenset(s for i, s in enumerate(ideals) if bits >> i & 1)
        if frozenset(m.elements) in fam and is_grothendieck_topology(m, fam):
            out.add(fam)
    return out


@pytest.mark.parametrize("name", ["m5", "brandt", "square", "c3", "t2"])
def test_topology_search_matches_subset_scan(name):
    m = fixture(name)
    assert {f.members for f in enumerate_topologies(m)} == _topologies_by_subset_scan(m)


def test_topology_guard():
    with pytest.raises(TooManyIdeals):
        enumerate_topologies(fixture("m5"), max_ideals=3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_monoid_counts(n):
    assert len(enumerate_monoids_of_order(n)) == GOLDEN_MONOID_COUNTS[n]


@pytest.mark.parametrize("n", [2, 3])
def test_dual_algorithm_agreement(n):
    fast = enumerate_monoids_of_order(n)
    slow = enumerate_monoids_bruteforce(n)
    assert len(fast) == len(slow)
    assert {canonical_table(m) for m in fast} == {canonical_table(m) for m in slow}


def test_order_two_monoids():
    tables = {m.table for m in enumerate_monoids_of_order(2)}
    assert tables == {((0, 1), (1, 0)), ((0, 1), (1, 1))}


def test_order_guard():
    with pytest.raises(OrderTooLarge):
        enumerate_monoids(5)
    with pytest.raises(OrderTooLarge):
        enumerate_monoids_of_order(9)


def test_corpus():
    corpus = build_corpus(4)
    names = {e.name for e in corpus}
    assert {"trivial", "two", "m5", "t2", "t3", "c2", "c3", "c4", "square"} <= names
    monoids = corpus.monoids
    for i, a in enumerate(monoids):
        for b in monoids[i + 1:]:
            assert a.size != b.size or monoid_isomorphic(a, b) is None
    assert corpus.get("t3").provenance == ("transformation",)
    assert corpus.get("m5").provenance == ("named example",)
    assert "enumerated" in corpus.get("two").provenance
    assert sum(1 for e in corpus if "enumerated" in e.provenance) == sum(GOLDEN_MONOID_COUNTS.values())


def test_corpus_without_fixtures():
    assert len(build_corpus(3, fixtures=False)) == 10


def test_oracle_agrees_with_classification():
    for m in enumerate_monoids(3).monoids:
        assert len(enumerate_filtered_cyclic(m)) == len(classify_points(m))
        assert len(enumerate_topologies(m)) == len(idempotent_ideal_lattice(m))
