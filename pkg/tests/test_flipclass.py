import networkx as nx
import pytest
import sympy

from toricposets import (
    Graph,
    Orientation,
    acyclic_orientations,
    all_flip_classes,
    count_flip_classes,
    flip_class,
    flip_sink,
    flip_source,
    is_acyclic,
    preposet_flip_class,
    torically_equivalent,
)
from toricposets import examples as ex
from toricposets.config import limits
from toricposets.errors import CapExceeded, GraphMismatch, NotAcyclic, NotASource

import propcheck


def test_flip_source_and_sink_are_inverse():
    w = ex.c4_omega()
    f = flip_source(w, "1")
    assert f.is_sink(f.graph.idx("1"))
    assert flip_sink(f, "1") == w


def test_flip_rejects_non_source():
    with pytest.raises(NotASource):
        flip_source(ex.c4_omega(), "2")


def test_k3_classes():
    classes = all_flip_classes(ex.k3())
    assert sorted(len(c) for c in classes) == [3, 3]
    assert sum(len(c) for c in classes) == 6


def test_c4_class_sizes():
    assert len(flip_class(ex.c4_omega())) == 4
    assert len(flip_class(ex.c4_omega_prime())) == 6
    assert count_flip_classes(ex.c4()) == 3


def test_members_closed_under_flips():
    fc = flip_class(ex.c4_omega_prime())
    for o in fc.members:
        for v in o.sources():
            assert flip_source(o, v) in fc
        for v in o.sinks():
            assert flip_sink(o, v) in fc


def test_flip_graph_edges_are_flips():
    fc = flip_class(ex.c4_omega())
    for i, j, v in fc.flips:
        assert flip_source(fc.members[i], v) == fc.members[j]


def test_canonical_is_least():
    fc = flip_class(ex.c4_omega_prime())
    assert fc.canonical == min(fc.members, key=lambda o: o.codes)
    assert all(flip_class(m).canonical == fc.canonical for m in fc.members)


def test_equivalence_requires_same_graph():
    with pytest.raises(GraphMismatch):
        torically_equivalent(ex.c4_omega(), ex.k3_omegas()[0])


def test_flip_class_rejects_cycles():
    cyc = Orientation.from_arcs(ex.c4(), [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])
    with pytest.raises(NotAcyclic):
        flip_class(cyc)


def test_cap_is_enforced():
    with limits(max_vertices=4), pytest.raises(CapExceeded):
        all_flip_classes(Graph.cycle(5))


def test_preposet_without_ties_matches_flip_class():
    w = ex.c4_omega_prime()
    assert preposet_flip_class(w) == list(flip_class(w).members)


def test_preposet_k3_pair():
    tied = Orientation.from_arcs(ex.k3(), [("1", "2"), ("1", "3")], ties=[("2", "3")])
    members = preposet_flip_class(tied)
    assert len(members) == 2
    assert all(m.ties == [("2", "3")] for m in members)


def test_acyclic_orientation_count_matches_chromatic_polynomial():
    x = sympy.symbols("x")
    for g in propcheck.connected_graphs(5)[::2] + propcheck.random_graphs()[:2]:
        G = nx.Graph(list(g.edge_labels))
        G.add_nodes_from(g.vertices)
        chi = nx.chromatic_polynomial(G)
        expected = abs(int(chi.subs(x, -1)))
        found = acyclic_orientations(g)
        assert len(found) == expected
        assert all(is_acyclic(o) for o in found)


@pytest.mark.parametrize("g", propcheck.graph_suite(), ids=lambda g: f"n{g.n}m{g.m}")
def test_classes_partition_orientations(g):
    classes = all_flip_classes(g)
    seen = [m for c in classes for m in c.members]
    assert len(seen) == len(set(seen)) == len(acyclic_orientations(g))
    assert not propcheck.check_tutte(g)
