"""The theorem suite: every structural property, checked over a corpus.

Each check takes a monoid and returns ``None`` on success or a JSON-able
witness describing the first failure. Checks that only make sense (or are
only affordable) for some monoids declare a guard; guarded-out pairs are
reported as skipped rather than passed.
"""
from __future__ import annotations

import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable

from .errors import MonoidPointsError, ValidationError
from .monoid import (
    FiniteMonoid,
    commutative_quotient,
    green_partition,
    is_regular,
    monoid_isomorphic,
    opposite,
    principal_ideal,
    semilattice_quotient,
    spec_prime_ideals,
    validate_monoid,
)
from .msets import (
    MSetCongruence,
    hom_set_as_right_mset,
    right_ideal_mset,
    tensor,
    validate_action,
    k_rho,
    mset_hom_set,
    mset_isomorphic,
    principal_left_mset,
    quotient_mset,
    regular_mset,
    singleton_mset,
)
from .oracle import (
    MAX_TOPOLOGY_IDEALS,
    Corpus,
    bell_guard_allows,
    enumerate_filtered_cyclic,
    enumerate_mset_congruences,
    enumerate_topologies,
)
from .points import (
    classify_points,
    common_generator,
    endomorphism_monoid_of_point,
    induced_point_map,
    is_F_monoid,
    is_filtered,
    is_saturated,
    one_step_saturation,
    quotient_by_F_submonoid,
    right_zero,
    saturation,
    submonoids,
)
from .topologies import (
    ideal_of_topology,
    idem_j_poset,
    idempotent_ideal_lattice,
    is_distributive,
    is_grothendieck_topology,
    is_III_closed,
    lattice_irreducibles,
    lattice_opens_bijection,
    order_topology_opens,
    point_transversality,
    right_ideals,
    topology_from_ideal,
)

log = logging.getLogger(__name__)


def _sorted(s) -> list[int]:
    return sorted(s)


# monoid core


def check_validate(m: FiniteMonoid):
    try:
        validate_monoid(m.table, m.identity, m.names)
    except ValidationError as exc:
        return {"law": exc.law, "witness": list(exc.witness), "message": str(exc)}
    return None


def check_principal_ideals(m: FiniteMonoid):
    t = m.table
    if m.identity not in m.idempotents:
        return {"missing_identity": m.identity}
    for x in m.elements:
        left = {t[y][x] for y in m.elements}
        right = {t[x][y] for y in m.elements}
        both = {t[t[y][x]][z] for y in m.elements for z in m.elements}
        if principal_ideal(m, x, "left").members != left:
            return {"element": x, "kind": "left"}
        if principal_ideal(m, x, "right").members != right:
            return {"element": x, "kind": "right"}
        if principal_ideal(m, x, "two_sided").members != both:
            return {"element": x, "kind": "two_sided"}
    return None


def check_quotients(m: FiniteMonoid):
    for label, (q, proj) in (("semilattice", semilattice_quotient(m)), ("commutative", commutative_quotient(m))):
        bad = check_validate(q)
        if bad:
            return {"quotient": label, **bad}
        if not proj.is_valid():
            return {"quotient": label, "projection": "not a homomorphism"}
        if not q.is_commutative():
            return {"quotient": label, "law": "commutativity"}
        if label == "semilattice" and len(q.idempotents) != q.size:
            return {"quotient": label, "law": "idempotency"}
    if m.is_commutative() and commutative_quotient(m)[0].size != m.size:
        return {"quotient": "commutative", "law": "commutative monoid should be its own quotient"}
    return None


def check_spec_count(m: FiniteMonoid):
    sl, _ = semilattice_quotient(m)
    spec_m, spec_sl = len(spec_prime_ideals(m)), len(spec_prime_ideals(sl))
    if not spec_m == spec_sl == sl.size:
        return {"spec": spec_m, "spec_sl": spec_sl, "sl_size": sl.size}
    return None


def check_isomorphism_self(m: FiniteMonoid):
    f = monoid_isomorphic(m, m)
    if f is None or not f.is_valid():
        return {"reflexive": False}
    g = monoid_isomorphic(m, opposite(opposite(m)))
    if g is None:
        return {"double_opposite": False}
    return None


# points


def check_points_filtered(m: FiniteMonoid):
    for e in m.idempotents:
        report = is_filtered(principal_left_mset(m, e))
        if not report:
            return {"idempotent": e, "condition": report.failing_condition, "witness": report.witness}
    return None


def check_classification_oracle(m: FiniteMonoid):
    """Filtered quotients of M, found by brute force, are exactly the Me."""
    cls = classify_points(m)
    reps = [(e, principal_left_mset(m, e)) for e in cls.representatives]
    survivors = enumerate_filtered_cyclic(m)
    hit = set()
    for a in survivors:
        matches = [e for e, me in reps if mset_isomorphic(a, me) is not None]
        if len(matches) != 1:
            return {"filtered_quotient_size": a.size, "matching_representatives": matches}
        hit.add(matches[0])
        if a.size > m.size:
            return {"filtered_larger_than_monoid": a.size}
    if hit != set(cls.representatives):
        return {"unmatched_representatives": sorted(set(cls.representatives) - hit)}
    if len(survivors) != len(cls):
        return {"oracle": len(survivors), "classification": len(cls)}
    ident = m.identity
    for c in enumerate_mset_congruences(regular_mset(m, "left")):
        q, _ = quotient_mset(c)
        if not is_filtered(q):
            continue
        k = k_rho(c, ident)
        if not (is_F_monoid(k) and is_saturated(m, k)):
            return {"k_rho_not_saturated_F": k.sorted(), "partition": c.partition.blocks}
        mk, _ = quotient_by_F_submonoid(m, k)
        if mset_isomorphic(q, mk) is None:
            return {"quotient_not_M_mod_K": k.sorted()}
    return None


def check_opposite_points(m: FiniteMonoid):
    a, b = len(classify_points(m)), len(classify_points(opposite(m)))
    return None if a == b else {"points": a, "points_op": b}


def check_endomorphisms(m: FiniteMonoid):
    end1 = endomorphism_monoid_of_point(m, m.identity)
    if monoid_isomorphic(end1, opposite(m)) is None:
        return {"end_of_canonical_point_not_M_op": True}
    for e in classify_points(m).representatives:
        bad = check_validate(endomorphism_monoid_of_point(m, e))
        if bad:
            return {"idempotent": e, **bad}
    return None


def check_terminal_point(m: FiniteMonoid):
    terminal = bool(is_filtered(singleton_mset(m)))
    fmon = bool(is_F_monoid(m.subset(m.elements)))
    return None if terminal == fmon else {"terminal_filtered": terminal, "F_monoid": fmon}


def check_common_generator(m: FiniteMonoid):
    for e in classify_points(m).representatives:
        a = principal_left_mset(m, e)
        elements = list(range(a.size))
        coeffs, c = common_generator(a, elements)
        if any(a.act(mi, c) != x for mi, x in zip(coeffs, elements)):
            return {"idempotent": e}
    return None


def check_hom_eMf(m: FiniteMonoid):
    t = m.table
    for e in m.idempotents:
        me = principal_left_mset(m, e)
        for f in m.idempotents:
            efm = {t[t[e][x]][f] for x in m.elements}
            homs = mset_hom_set(me, principal_left_mset(m, f))
            if len(homs) != len(efm):
                return {"e": e, "f": f, "homs": len(homs), "eMf": len(efm)}
    return None


def check_yoneda_idempotent(m: FiniteMonoid, max_size: int = 5):
    """e·X is in bijection with Hom(Me, X) through ``ex ↦ (me ↦ m·e·x)``."""
    t = m.table
    targets = [principal_left_mset(m, f) for f in m.idempotents]
    targets.append(singleton_mset(m))
    if m.size <= max_size:
        targets.append(regular_mset(m))
    for e in m.idempotents:
        me = principal_left_mset(m, e)
        for x in targets:
            if x.size > max_size:
                continue
            ex = sorted({x.act(e, a) for a in range(x.size)})
            built = set()
            for a in ex:
                # me.labels[i] = m·e for some m; m·e·a = (m·e)·a
                built.add(tuple(x.act(lab, a) for lab in me.labels))
            homs = {h.map for h in mset_hom_set(me, x)}
            if len(built) != len(ex) or built != homs:
                return {"e": e, "target_size": x.size}
    return None


def _small_right_msets(m: FiniteMonoid, max_size: int):
    out = [singleton_mset(m, "right")]
    t = m.table
    for e in m.idempotents:
        em = {t[e][x] for x in m.elements}
        if len(em) <= max_size:
            out.append(right_ideal_mset(m, em))
    if m.size <= max_size:
        out.append(regular_mset(m, "right"))
    small = [principal_left_mset(m, e) for e in m.idempotents]
    for me in small:
        if 2 ** me.size <= max_size:
            out.append(hom_set_as_right_mset(me, 2))
    return out


def check_tensor_unit(m: FiniteMonoid, max_size: int = 4):
    """``X ⊗_M M ≅ X`` through ``x ↦ x ⊗ 1``."""
    regular = regular_mset(m, "left")
    for x in _small_right_msets(m, max_size):
        tp = tensor(x, regular)
        image = {tp.cls(a, m.identity) for a in range(x.size)}
        if tp.size != x.size or len(image) != x.size:
            return {"right_mset_size": x.size, "tensor_size": tp.size}
    return None


def check_hom_set_action(m: FiniteMonoid, max_carrier: int = 4096):
    for e in m.idempotents:
        me = principal_left_mset(m, e)
        for k in (1, 2, 3):
            if k ** me.size > max_carrier:
                continue
            h = hom_set_as_right_mset(me, k)
            right_table = [[h.act(mm, alpha) for mm in m.elements] for alpha in range(h.size)]
            try:
                validate_action(m, right_table, "right")
            except ValidationError as exc:
                return {"e": e, "target_size": k, "law": exc.law, "witness": list(exc.witness)}
    return None


def check_saturation(m: FiniteMonoid):
    subs = submonoids(m)
    sat = {k.members: saturation(m, k).members for k in subs}
    for k in subs:
        s = sat[k.members]
        if not k.members <= s or sat.get(s, saturation(m, m.subset(s)).members) != s:
            return {"not_closure": k.sorted()}
        if not is_saturated(m, m.subset(s)):
            return {"saturation_not_saturated": k.sorted()}
    for k in subs:
        for l in subs:
            if k.members < l.members and not sat[k.members] <= sat[l.members]:
                return {"not_monotone": [k.sorted(), l.sorted()]}
    return None


def check_F_submonoids(m: FiniteMonoid):
    subs = submonoids(m)
    filtered_cache: dict = {}
    relation_of: dict = {}
    for k in subs:
        f_mon = bool(is_F_monoid(k))
        if f_mon != (right_zero(k) is not None):
            return {"F_monoid_vs_right_zero": k.sorted(), "F": f_mon}
        if not f_mon:
            continue
        s = saturation(m, k)
        if one_step_saturation(m, k).members != s.members:
            return {"one_step_saturation": k.sorted()}
        q, proj = quotient_by_F_submonoid(m, k, check_filtered=False)
        qs, proj_s = quotient_by_F_submonoid(m, s, check_filtered=False)
        if q.table not in filtered_cache:
            filtered_cache[q.table] = bool(is_filtered(q))
        if not filtered_cache[q.table]:
            return {"M_mod_K_not_filtered": k.sorted()}
        if proj != proj_s or mset_isomorphic(q, qs) is None:
            return {"M_mod_K_vs_saturation": k.sorted()}
        relation_of.setdefault(proj, set()).add(s.members)
    # ~_K depends on K only through its saturation, and determines it
    for proj, sats in relation_of.items():
        if len(sats) != 1:
            return {"one_relation_many_saturations": sorted(_sorted(x) for x in sats)}
    return None


# topologies and lattice


def check_topology_roundtrip(m: FiniteMonoid):
    ideals = right_ideals(m)
    lat = idempotent_ideal_lattice(m)
    for s in lat.elements:
        fam = topology_from_ideal(m, s, ideals)
        verdict = is_grothendieck_topology(m, fam, ideals)
        if not verdict:
            return {"ideal": _sorted(s), "axiom": verdict.reason, "witness": verdict.witness}
        if ideal_of_topology(fam, ideals).members != s:
            return {"roundtrip": _sorted(s)}
    return None


def check_topology_completeness(m: FiniteMonoid):
    ideals = right_ideals(m)
    lat = idempotent_ideal_lattice(m)
    expected = {topology_from_ideal(m, s, ideals) for s in lat.elements}
    found = enumerate_topologies(m)
    if len(found) != len(set(found)) or set(found) != expected:
        return {"enumerated": len(found), "from_ideals": len(expected)}
    return None


def check_lattice(m: FiniteMonoid):
    # construction itself cross-checks the meet formula and the decomposition
    lat = idempotent_ideal_lattice(m)
    d = is_distributive(lat)
    if not d:
        return {"distributivity": [_sorted(lat.elements[i]) for i in d.witness]}
    irr = lattice_irreducibles(lat)
    principal = {principal_ideal(m, e, "two_sided").members for e in m.idempotents}
    if set(irr) != principal:
        return {"irreducibles": [_sorted(s) for s in irr]}
    return None


def check_opens(m: FiniteMonoid):
    lat = idempotent_ideal_lattice(m)
    opens = order_topology_opens(idem_j_poset(m))
    lattice_opens_bijection(m, lat)
    return None if len(opens) == len(lat) else {"opens": len(opens), "ideals": len(lat)}


def check_iii_closed(m: FiniteMonoid):
    if (is_regular(m) or m.is_commutative()) and not is_III_closed(m):
        return {"regular": is_regular(m), "commutative": m.is_commutative(), "witness": is_III_closed(m).witness}
    return None


def check_bijection_counts(m: FiniteMonoid):
    cls = classify_points(m)
    j = len(green_partition(m, "J"))
    lat = idempotent_ideal_lattice(m)
    irr = len(lattice_irreducibles(lat))
    op = opposite(m)
    cls_op = len(classify_points(op))
    opens = len(order_topology_opens(idem_j_poset(m)))
    lat_op = len(idempotent_ideal_lattice(op))
    counts = {"points": len(cls), "j_classes": j, "irreducibles": irr, "points_op": cls_op,
              "ideals": len(lat), "opens": opens, "ideals_op": lat_op}
    if not len(cls) == j == irr == cls_op or not len(lat) == opens == lat_op:
        return counts
    sl, q = semilattice_quotient(m)
    image = set(induced_point_map(q).values())
    sl_points = classify_points(sl)
    if image != set(sl_points.representatives):
        return {"F_q_not_surjective": sorted(set(sl_points.representatives) - image)}
    if m.is_commutative():
        spec = len(spec_prime_ideals(m))
        if not len(cls) == sl.size == spec:
            return {"points": len(cls), "sl_size": sl.size, "spec": spec}
    return None


def check_transversality(m: FiniteMonoid):
    ideals = right_ideals(m)
    lat = idempotent_ideal_lattice(m)
    for e in m.idempotents:
        for s in lat.elements:
            v = point_transversality(m, e, s, all_right_ideals=ideals)
            if v.verdict != (e in s):
                return {"e": e, "ideal": _sorted(s)}
    return None


# registry


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    run: Callable[[FiniteMonoid], object]
    guard: Callable[[FiniteMonoid], bool] = lambda m: True
    description: str = ""


def _few_right_ideals(m: FiniteMonoid) -> bool:
    try:
        return len(right_ideals(m, cap=MAX_TOPOLOGY_IDEALS)) <= MAX_TOPOLOGY_IDEALS
    except MonoidPointsError:
        return False


CHECKS: list[TheoremCheck] = [
    TheoremCheck("validate", check_validate, description="table is an associative unital operation"),
    TheoremCheck("principal_ideals", check_principal_ideals),
    TheoremCheck("quotients", check_quotients),
    TheoremCheck("spec_count", check_spec_count, lambda m: m.is_commutative()),
    TheoremCheck("isomorphism_reflexive", check_isomorphism_self),
    TheoremCheck("points_filtered", check_points_filtered),
    TheoremCheck("classification_oracle", check_classification_oracle, bell_guard_allows),
    TheoremCheck("opposite_points", check_opposite_points),
    TheoremCheck("endomorphisms", check_endomorphisms),
    TheoremCheck("terminal_point", check_terminal_point),
    TheoremCheck("common_generator", check_common_generator),
    TheoremCheck("hom_eMf", check_hom_eMf),
    TheoremCheck("yoneda_idempotent", check_yoneda_idempotent),
    TheoremCheck("tensor_unit", check_tensor_unit),
    TheoremCheck("hom_set_action", check_hom_set_action),
    TheoremCheck("saturation", check_saturation),
    TheoremCheck("F_submonoids", check_F_submonoids),
    TheoremCheck("topology_roundtrip", check_topology_roundtrip),
    TheoremCheck("topology_completeness", check_topology_completeness, _few_right_ideals),
    TheoremCheck("lattice", check_lattice),
    TheoremCheck("opens", check_opens),
    TheoremCheck("iii_closed", check_iii_closed),
    TheoremCheck("bijection_counts", check_bijection_counts),
    TheoremCheck("transversality", check_transversality, lambda m: m.size <= 5),
]

CHECKS_BY_NAME = {c.name: c for c in CHECKS}


def corpus_pairwise_distinct(corpus: Corpus):
    entries = list(corpus)
    for i, a in enumerate(entries):
        for b in entries[i + 1:]:
            if a.monoid.size == b.monoid.size and monoid_isomorphic(a.monoid, b.monoid) is not None:
                return {"isomorphic": [a.name, b.name]}
    return None


def corpus_isomorphism_equivalence(corpus: Corpus, limit: int = 12):
    """Symmetry and transitivity of the isomorphism witnesses.

    Each monoid is compared with a relabelled copy of itself, and the
    witnesses are inverted and composed.
    """
    for entry in list(corpus)[:limit]:
        m = entry.monoid
        n = m.size
        perm = [m.identity] + [x for x in reversed(m.elements) if x != m.identity]
        pos = {x: i for i, x in enumerate(perm)}
        copy = FiniteMonoid([[pos[m.table[perm[i]][perm[j]]] for j in range(n)] for i in range(n)], 0)
        f = monoid_isomorphic(m, copy)
        if f is None:
            return {"monoid": entry.name, "relabelled_copy_not_isomorphic": True}
        g = monoid_isomorphic(copy, opposite(opposite(copy)))
        inv = f.inverse()
        if not (inv.is_valid() and f.then(g).is_valid() and f.then(inv).map == tuple(m.elements)):
            return {"monoid": entry.name, "witness_algebra": False}
    return None


CORPUS_CHECKS = {
    "corpus_pairwise_distinct": corpus_pairwise_distinct,
    "corpus_isomorphism_equivalence": corpus_isomorphism_equivalence,
}


@dataclass
class CheckResult:
    check: str
    monoid: str
    passed: bool
    skipped: bool = False
    witness: object = None
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        d = {"check": self.check, "monoid": self.monoid, "passed": self.passed, "skipped": self.skipped}
        if self.witness is not None:
            d["witness"] = self.witness
        if timing:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.results:
            row = out.setdefault(r.check, {"passed": 0, "failed": 0, "skipped": 0})
            row["skipped" if r.skipped else "passed" if r.passed else "failed"] += 1
        return out

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "ok": self.ok,
            "summary": self.summary(),
            "results": [r.to_dict(timing) for r in self.results],
            "warnings": list(self.warnings),
        }


def run_check(check: TheoremCheck, name: str, m: FiniteMonoid) -> CheckResult:
    if not check.guard(m):
        return CheckResult(check.name, name, True, skipped=True)
    start = time.perf_counter()
    try:
        witness = check.run(m)
    except Exception as exc:  # a crashing check is a failed check
        witness = {"error": type(exc).__name__, "message": str(exc)}
    return CheckResult(check.name, name, witness is None, witness=witness, seconds=time.perf_counter() - start)


def run_theorem_suite(corpus: Corpus, checks=None) -> SuiteReport:
    """Run every check on every corpus monoid.

    A monoid whose table fails validation gets only that failure recorded;
    the remaining checks would be meaningless on it.
    """
    selected = [CHECKS_BY_NAME[c] if isinstance(c, str) else c for c in (checks or CHECKS)]
    report = SuiteReport()
    if not len(corpus):
        msg = "empty corpus: the suite passes vacuously"
        warnings.warn(msg)
        report.warnings.append(msg)
        return report
    for entry in corpus:
        first = run_check(CHECKS_BY_NAME["validate"], entry.name, entry.monoid)
        report.results.append(first)
        if not first.passed:
            log.warning("%s: invalid table %s", entry.name, first.witness)
            continue
        for check in selected:
            if check.name == "validate":
                continue
            result = run_check(check, entry.name, entry.monoid)
            if not result.passed:
                log.warning("%s failed on %s: %s", check.name, entry.name, result.witness)
            report.results.append(result)
    if checks is None:
        for name, fn in CORPUS_CHECKS.items():
            start = time.perf_counter()
            try:
                witness = fn(corpus)
            except Exception as exc:
                witness = {"error": type(exc).__name__, "message": str(exc)}
            report.results.append(CheckResult(name, "<corpus>", witness is None, witness=witness,
                                              seconds=time.perf_counter() - start))
    return report
