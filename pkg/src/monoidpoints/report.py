"""The full analysis of one monoid as a JSON-able dict.

Every number is taken from the library functions; the only work done here
is arranging them and asserting that the counts line up.
"""
from __future__ import annotations

from .errors import InvariantViolation
from .monoid import FiniteMonoid, is_regular, semilattice_quotient
from .points import classify_points, endomorphism_monoid_of_point, induced_point_map, is_F_monoid, right_zero
from .topologies import (
    idem_j_poset,
    idempotent_ideal_lattice,
    is_distributive,
    is_III_closed,
    lattice_irreducibles,
    order_topology_opens,
    right_ideals,
    topology_from_ideal,
)


def _names(m: FiniteMonoid, s) -> list[str]:
    return [m.name(x) for x in sorted(s)]


def analyze(m: FiniteMonoid) -> dict:
    whole = m.subset(m.elements)
    rz = right_zero(whole)
    monoid = {
        "size": m.size,
        "identity": m.identity,
        "names": [m.name(x) for x in m.elements],
        "idempotents": list(m.idempotents),
        "idempotent_count": len(m.idempotents),
        "regular": is_regular(m),
        "commutative": m.is_commutative(),
        "F_monoid": bool(is_F_monoid(whole)),
        "right_zero": rz,
    }

    cls = classify_points(m)
    cat = cls.category
    reps = []
    for e in cls.representatives:
        end = endomorphism_monoid_of_point(m, e)
        reps.append({
            "idempotent": e,
            "name": m.name(e),
            "point_size": cls.point_mset(e).size,
            "endomorphisms": {"size": end.size, "names": list(end.names), "table": [list(r) for r in end.table]},
        })
    points = {
        "count": len(cls),
        "j_classes": [list(c) for c in cls.j_classes],
        "representatives": reps,
        "hom_objects": list(cat.objects),
        "hom_sizes": cat.hom_size_matrix(),
    }

    lat = idempotent_ideal_lattice(m)
    irr = lattice_irreducibles(lat)
    lattice = {
        "ideals": [sorted(s) for s in lat.elements],
        "ideal_names": [_names(m, s) for s in lat.elements],
        "count": len(lat),
        "join": [list(r) for r in lat.join],
        "meet": [list(r) for r in lat.meet],
        "irreducibles": [sorted(s) for s in irr],
        "distributive": bool(is_distributive(lat)),
        "III_closed": bool(is_III_closed(m)),
    }

    all_right = right_ideals(m)
    topologies = {
        "right_ideal_count": len(all_right),
        "family_sizes": [len(topology_from_ideal(m, s, all_right)) for s in lat.elements],
    }

    poset = idem_j_poset(m)
    opens = order_topology_opens(poset)
    poset_section = {
        "classes": [list(c) for c in poset.classes],
        "hasse_edges": [list(e) for e in poset.hasse_edges()],
        "opens": [sorted(u) for u in opens],
        "opens_count": len(opens),
    }

    sl, q = semilattice_quotient(m)
    sl_points = classify_points(sl)
    induced = induced_point_map(q, cls, sl_points)
    semilattice = {
        "size": sl.size,
        "projection": list(q.map),
        "induced_point_map": [[e, induced[e]] for e in sorted(induced)],
        "surjective": set(induced.values()) == set(sl_points.representatives),
    }

    if not len(cls) == len(cls.j_classes) == len(irr):
        raise InvariantViolation(f"points {len(cls)}, J-classes {len(cls.j_classes)}, irreducibles {len(irr)}")
    if len(opens) != len(lat):
        raise InvariantViolation(f"opens {len(opens)} != ideals {len(lat)}")

    return {
        "monoid": monoid,
        "points": points,
        "lattice": lattice,
        "topologies": topologies,
        "poset": poset_section,
        "semilattice": semilattice,
    }
