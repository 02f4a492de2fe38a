from monoidpoints.dot import lattice_covers, lattice_dot, poset_dot
from monoidpoints.fixtures import fixture
from monoidpoints.report import analyze
from monoidpoints.topologies import idem_j_poset, idempotent_ideal_lattice


def test_analyze_m5(m5):
    r = analyze(m5)
    assert r["points"]["count"] == 4
    assert sorted(p["point_size"] for p in r["points"]["representatives"]) == [1, 2, 3, 5]
    assert r["lattice"]["count"] == 6 and r["lattice"]["III_closed"] is False
    assert r["monoid"]["F_monoid"] and r["monoid"]["right_zero"] == 1
    assert r["poset"]["opens_count"] == 6
    assert r["topologies"]["family_sizes"][0] == r["topologies"]["right_ideal_count"]
    assert r["semilattice"]["surjective"]


def test_analyze_trivial(trivial):
    r = analyze(trivial)
    assert r["points"]["count"] == 1 and r["lattice"]["count"] == 2


def test_analyze_t3(t3):
    r = analyze(t3)
    assert (r["monoid"]["size"], r["monoid"]["idempotent_count"], r["points"]["count"], r["lattice"]["count"]) == (27, 10, 3, 4)
    assert r["monoid"]["regular"] and r["lattice"]["III_closed"]


def test_end_tables(m5):
    r = analyze(m5)
    sizes = {p["name"]: p["endomorphisms"]["size"] for p in r["points"]["representatives"]}
    assert sizes["1"] == 5 and sizes["0"] == 1


def test_lattice_dot(m5):
    lat = idempotent_ideal_lattice(m5)
    text = lattice_dot(lat)
    assert text.startswith("digraph ideals {") and text.endswith("}\n")
    assert text.count("->") == len(lattice_covers(lat)) == 6
    assert '"∅"' in text and '"{0,a,ab}"' in text


def test_poset_dot(t3):
    text = poset_dot(idem_j_poset(t3))
    assert text.count("->") == 2
    assert text == poset_dot(idem_j_poset(fixture("t3")))
