"""Acceptance criteria, one test each; conftest prints a PASS/FAIL line per criterion."""

import networkx as nx
import sympy

from toricposets import (
    Graph,
    Orientation,
    SetPartition,
    ToricPoset,
    acyclic_orientations,
    all_flip_classes,
    closed_face_partition_lattice,
    closure_partition,
    count_flip_classes,
    flip_class,
    hasse_graph,
    interval,
    poset_from_orientation,
    toric_chains,
    toric_closure,
    toric_filters,
    toric_hasse,
    toric_interval,
    toric_transitive_closure,
    torically_equivalent,
    total_toric_extensions,
    transitive_closure_graph,
    tutte_10,
)
from toricposets import examples as ex
from toricposets.coxeter import conjugacy_class_elements, coxeter_conjugate, initial_segments
from toricposets.poset import face_partition_flags

import propcheck


def _nx_tutte_10(g):
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edge_labels)
    x, y = sympy.symbols("x y")
    return int(nx.tutte_polynomial(G).subs({x: 1, y: 0}))


def _edges(g):
    return set(g.edge_labels)


def _names(sets):
    return {"".join(sorted(s)) for s in sets}


def test_criterion_01():
    """criterion 1: K3 has 6 acyclic orientations in 2 flip classes of size 3, count = T(1,0) = 2"""
    g = ex.k3()
    assert len(acyclic_orientations(g)) == 6
    assert sorted(len(c) for c in all_flip_classes(g)) == [3, 3]
    assert count_flip_classes(g) == tutte_10(g) == _nx_tutte_10(g) == 2


def test_criterion_02():
    """criterion 2: C4 classes of w and w' have sizes 4 and 6, count = T(1,0) = 3"""
    assert len(flip_class(ex.c4_omega())) == 4
    assert len(flip_class(ex.c4_omega_prime())) == 6
    assert not torically_equivalent(ex.c4_omega(), ex.c4_omega_prime())
    assert count_flip_classes(ex.c4()) == tutte_10(ex.c4()) == _nx_tutte_10(ex.c4()) == 3


def test_criterion_03():
    """criterion 3: C4 toric Hasse and toric closure graphs for w and w'"""
    w, wp = ex.c4_omega(), ex.c4_omega_prime()
    C4, K4 = _edges(ex.c4()), _edges(Graph.complete(4))
    assert _edges(toric_hasse(w)) == C4
    assert _edges(toric_transitive_closure(w)) == K4
    assert _edges(hasse_graph(poset_from_orientation(w))) == _edges(Graph.path(4))
    assert _edges(toric_hasse(wp)) == _edges(toric_transitive_closure(wp)) == C4
    # the remark about {1,3} concerns the member of [w'] with source 1 and sink 3
    w13 = Orientation.from_arcs(ex.c4(), [("1", "2"), ("2", "3"), ("1", "4"), ("4", "3")])
    assert w13 in flip_class(wp)
    assert ("1", "3") in _edges(transitive_closure_graph(poset_from_orientation(w13)))
    assert not _edges(toric_transitive_closure(wp)) >= {("1", "3")}


def test_criterion_04():
    """criterion 4: total toric extensions of the two C4 classes"""
    assert [str(c) for c in total_toric_extensions(ex.c4_omega())] == ["[(1,2,3,4)]"]
    assert {str(c) for c in total_toric_extensions(ex.c4_omega_prime())} == {
        "[(1,2,4,3)]", "[(1,3,2,4)]", "[(1,3,4,2)]", "[(1,4,2,3)]"
    }


def test_criterion_05():
    """criterion 5: J_tor of C4 w has 14 elements, graded, not a lattice; J_tor of w' is Boolean"""
    fp = toric_filters(ex.c4_omega())
    assert _names(fp.elements) == {"", "1", "2", "3", "4", "12", "23", "34", "14",
                                   "123", "234", "134", "124", "1234"}
    assert fp.is_graded() and not fp.is_lattice()
    witness = next(f for f in fp.lattice_failures() if f["kind"] == "join" and _names(f["pair"]) == {"1", "3"})
    assert _names(witness["bounds"]) == {"123", "134"}
    fp2 = toric_filters(ex.c4_omega_prime())
    assert len(fp2) == 16 and fp2.is_lattice() and fp2.is_graded()


def test_criterion_06():
    """criterion 6: diamond closed face partitions, closures of 124/3 and 14/23, flags of 1/23/4"""
    d = ex.diamond()
    assert {str(p) for p in closed_face_partition_lattice(d)} == {
        "1234", "123/4", "12/34", "13/24", "1/234", "12/3/4", "13/2/4", "1/24/3", "1/2/34", "1/2/3/4"
    }
    assert str(closure_partition(d, SetPartition.parse("124/3"))) == "1234"
    assert str(closure_partition(d, SetPartition.parse("14/23"))) == "1234"
    assert face_partition_flags(d, SetPartition.parse("1/23/4")) == {"compatible": True, "connected": False}


def test_criterion_07():
    """criterion 7: K3 toric closure of 1/23 is 1/23 while the ordinary closure is 123"""
    w3 = ex.k3_omegas()[2]
    pi = SetPartition.parse("1/23")
    assert str(toric_closure(ToricPoset(w3), pi)) == "1/23"
    assert str(closure_partition(w3, pi)) == "123"


def test_criterion_08():
    """criterion 8: path 1->2->3 has interval [1,3] = 123 but empty toric interval"""
    p3 = ex.path3()
    assert interval(poset_from_orientation(p3), "1", "3") == {"1", "2", "3"}
    assert toric_interval(p3, "1", "3") == frozenset()


def test_criterion_09():
    """criterion 9: the two C5 classes are inequivalent with identical toric chains"""
    a, b = ex.c5_pair()
    assert not torically_equivalent(a, b)
    assert dict(toric_chains(a)) == dict(toric_chains(b))


def test_criterion_10():
    """criterion 10: affine A3 conjugacy classes and initial segments"""
    cs = ex.a3_tilde()
    c, c2 = ("s1", "s2", "s3", "s4"), ("s1", "s3", "s2", "s4")
    shifts = {c[k:] + c[:k] for k in range(4)}
    assert {w for _, ws in conjugacy_class_elements(cs, c) for w in ws} == shifts
    assert len(conjugacy_class_elements(cs, c2)) == 6
    assert all(coxeter_conjugate(cs, c, s) for s in shifts)
    assert not coxeter_conjugate(cs, c, c2)
    assert not coxeter_conjugate(cs, c, tuple(reversed(c)))
    rename = {f"s{k}": str(k) for k in range(1, 5)}
    for word, o in ((c, ex.c4_omega()), (c2, ex.c4_omega_prime())):
        segs = initial_segments(cs, word)
        assert {frozenset(rename[s] for s in J) for J in segs.elements} == set(toric_filters(o).elements)
        assert segs.is_lattice() == toric_filters(o).is_lattice()


def test_criterion_11():
    """criterion 11: property suites over connected graphs on at most 5 vertices and random 6-vertex graphs"""
    violations = {}
    for label, check in propcheck.ALL_CHECKS.items():
        for g in propcheck.graph_suite():
            bad = check(g)
            if bad:
                violations.setdefault(label, []).extend(bad)
    for g in propcheck.graph_suite():
        assert count_flip_classes(g) == _nx_tutte_10(g)
    assert violations == {}
