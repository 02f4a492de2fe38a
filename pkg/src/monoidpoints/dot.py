"""Graphviz output for the ideal lattice and the poset of idempotent J-classes.

Both emitters draw covering edges only, bottom to top, and list nodes in
index order so the text is stable.
"""
from __future__ import annotations

from .topologies import IdealLattice, IdemJPoset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _subset_label(m, s) -> str:
    if not s:
        return "∅"
    return "{" + ",".join(m.name(x) for x in sorted(s)) + "}"


def lattice_covers(lat: IdealLattice) -> list[tuple[int, int]]:
    n = len(lat)
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or not lat.leq(i, j):
                continue
            if not any(k not in (i, j) and lat.leq(i, k) and lat.leq(k, j) for k in range(n)):
                out.append((i, j))
    return out


def _graph(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str]]) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for ident, label in nodes:
        lines.append(f"  {ident} [label={_quote(label)}];")
    for a, b in edges:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(lat: IdealLattice) -> str:
    m = lat.monoid
    nodes = [(f"i{k}", _subset_label(m, s)) for k, s in enumerate(lat.elements)]
    edges = [(f"i{a}", f"i{b}") for a, b in lattice_covers(lat)]
    return _graph("ideals", nodes, edges)


def poset_dot(p: IdemJPoset) -> str:
    m = p.monoid
    nodes = [(f"j{k}", m.name(c[0])) for k, c in enumerate(p.classes)]
    edges = [(f"j{a}", f"j{b}") for a, b in p.hasse_edges()]
    return _graph("idempotent_classes", nodes, edges)
