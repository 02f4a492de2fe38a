import pytest

from conftest import el, els
from monoidpoints.errors import ActionNotAssociative, IdentityActionFails
from monoidpoints.fixtures import fixture
from monoidpoints.monoid import MonoidHomomorphism, identity_hom, semilattice_quotient
from monoidpoints.msets import (
    MSetCongruence,
    cyclic_from_congruence,
    disjoint_union,
    empty_mset,
    equivariant_maps,
    hom_set_as_right_mset,
    k_rho,
    mset_hom_set,
    mset_hom_set_bruteforce,
    mset_isomorphic,
    principal_left_mset,
    regular_mset,
    right_ideal_mset,
    singleton_mset,
    tensor,
    tensor_along_hom,
    validate_action,
)
from monoidpoints.partition import SetPartition
from monoidpoints.points import is_filtered, quotient_by_F_submonoid


def test_validate_regular_and_singleton(m5):
    validate_action(m5, [list(r) for r in m5.table], "left")
    validate_action(m5, [[0]] * 5, "left")


def test_validate_identity_action_fails(two):
    with pytest.raises(IdentityActionFails):
        validate_action(two, [[1, 0], [1, 1]], "left")


def test_validate_action_associativity(two):
    # t acts as the swap, but t·t = t so t·(t·a) must equal t·a
    with pytest.raises(ActionNotAssociative):
        validate_action(two, [[0, 1], [1, 0]], "left")


def test_validate_right_layout(two):
    # right table is [a][m]; {t} as a one-element right ideal
    a = validate_action(two, [[0, 0]], "right")
    assert a.size == 1 and a.act(1, 0) == 0


def test_cyclic_discrete_and_total(m5):
    reg = regular_mset(m5)
    q, proj, one = cyclic_from_congruence(MSetCongruence(reg, SetPartition.discrete(5)))
    assert mset_isomorphic(q, reg) is not None and one == proj[m5.identity]
    q, _, _ = cyclic_from_congruence(MSetCongruence(reg, SetPartition.total(5)))
    assert q.size == 1


def test_cyclic_three_classes(m5):
    p = SetPartition.from_blocks([els(m5, "1", "b"), els(m5, "a", "ab"), els(m5, "0")])
    c = MSetCongruence(regular_mset(m5), p)
    assert c.is_compatible()
    q, _, _ = cyclic_from_congruence(c)
    assert q.size == 3


def test_k_rho(m5):
    reg = regular_mset(m5)
    one = m5.identity
    assert k_rho(MSetCongruence(reg, SetPartition.discrete(5)), one).members == {one}
    assert k_rho(MSetCongruence(reg, SetPartition.total(5)), 2).members == frozenset(m5.elements)
    p = SetPartition.from_blocks([els(m5, "1", "b"), els(m5, "a", "ab"), els(m5, "0")])
    k = k_rho(MSetCongruence(reg, p), one)
    brute = {x for x in m5.elements if p.same(m5.mul(x, one), one)}
    assert k.members == brute == els(m5, "1", "b")


def test_hom_from_regular_is_carrier(m5):
    x = principal_left_mset(m5, el(m5, "b"))
    homs = mset_hom_set(regular_mset(m5), x)
    assert sorted(h.map[m5.identity] for h in homs) == list(range(x.size))


def test_hom_Ma_Mb(m5):
    a, b = el(m5, "a"), el(m5, "b")
    ma, mb = principal_left_mset(m5, a), principal_left_mset(m5, b)
    fast = {h.map for h in mset_hom_set(ma, mb)}
    slow = {h.map for h in mset_hom_set_bruteforce(ma, mb)}
    amb = {m5.mul(m5.mul(a, x), b) for x in m5.elements}
    assert fast == slow and len(fast) == len(amb)


def test_hom_singletons(m5):
    s = singleton_mset(m5)
    assert len(mset_hom_set(s, s)) == 1


def test_hom_general_source_matches_bruteforce(m5):
    # non-cyclic source
    u = disjoint_union(principal_left_mset(m5, el(m5, "a")), principal_left_mset(m5, el(m5, "b")))
    for target in (u, singleton_mset(m5), regular_mset(m5)):
        assert {h.map for h in mset_hom_set(u, target)} == {h.map for h in mset_hom_set_bruteforce(u, target)}


def test_isomorphic(m5):
    a = principal_left_mset(m5, el(m5, "a"))
    assert mset_isomorphic(a, a).map == tuple(range(a.size))
    assert mset_isomorphic(a, principal_left_mset(m5, el(m5, "b"))) is None
    mk, _ = quotient_by_F_submonoid(m5, m5.subset(els(m5, "1", "b")))
    iso = mset_isomorphic(mk, principal_left_mset(m5, el(m5, "b")))
    assert iso is not None and iso.is_equivariant()
    # oracle: brute-force bijection search
    target = principal_left_mset(m5, el(m5, "b"))
    assert any(len(set(h.map)) == 3 for h in mset_hom_set_bruteforce(mk, target))


def test_tensor_unit(m5):
    x = right_ideal_mset(m5, els(m5, "0", "a", "ab"))
    tp = tensor(x, regular_mset(m5))
    assert tp.size == x.size
    assert len({tp.cls(i, m5.identity) for i in range(x.size)}) == x.size


def test_tensor_with_empty(m5):
    assert tensor(empty_mset(m5, "right"), regular_mset(m5)).size == 0


def test_tensor_canonical_map(m5):
    from monoidpoints.topologies import canonical_tensor_map_is_bijective

    b = el(m5, "b")
    assert canonical_tensor_map_is_bijective(m5, els(m5, "0", "b", "ab"), b)
    assert canonical_tensor_map_is_bijective(m5, frozenset(m5.elements), b)


def test_tensor_classes_are_least_pairs(m5):
    x = right_ideal_mset(m5, els(m5, "0", "b", "ab"))
    tp = tensor(x, principal_left_mset(m5, el(m5, "a")))
    for c in tp.classes:
        assert tp.cls(*c) == tp.classes.index(c)
    assert list(tp.classes) == sorted(tp.classes)


def test_tensor_along_identity(m5):
    a = principal_left_mset(m5, el(m5, "a"))
    assert mset_isomorphic(tensor_along_hom(identity_hom(m5), a), a) is not None


def test_tensor_along_unit_map(m5, two):
    a = el(m5, "a")
    eta = MonoidHomomorphism(two, m5, (m5.identity, a))
    assert eta.is_valid()
    out = tensor_along_hom(eta, singleton_mset(two))
    assert mset_isomorphic(out, principal_left_mset(m5, a)) is not None


def test_tensor_along_semilattice_quotient(m5):
    sl, q = semilattice_quotient(m5)
    out = tensor_along_hom(q, principal_left_mset(m5, el(m5, "a")))
    assert is_filtered(out)


def test_hom_set_single_point(m5):
    h = hom_set_as_right_mset(singleton_mset(m5), 3)
    assert h.size == 3
    assert all(h.act(m, y) == y for m in m5.elements for y in range(3))


def test_hom_set_two_element(two):
    h = hom_set_as_right_mset(regular_mset(two), 2)
    assert h.size == 4
    t = 1
    for alpha_index, alpha in enumerate(h.labels):
        image = h.labels[h.act(t, alpha_index)]
        assert image == tuple(alpha[two.mul(t, x)] for x in two.elements)


def test_hom_set_action_laws(m5):
    h = hom_set_as_right_mset(principal_left_mset(m5, el(m5, "a")), 2)
    validate_action(m5, [[h.act(m, x) for m in m5.elements] for x in range(h.size)], "right")


def test_equivariant_maps_limit(m5):
    reg = regular_mset(m5)
    assert len(list(equivariant_maps(reg, reg, limit=2))) == 2
