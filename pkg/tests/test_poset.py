import itertools
from functools import reduce

import networkx as nx
import pytest

from toricposets import (
    Poset,
    SetPartition,
    antichains,
    chains,
    closed_face_partition_lattice,
    closure_partition,
    hasse_graph,
    interval,
    is_closed_face_partition,
    is_filter,
    is_ideal,
    linear_extensions,
    order_ideals,
    poset_from_orientation,
    transitive_closure_graph,
)
from toricposets import examples as ex
from toricposets.errors import NotAcyclic, UnknownVertex, ValidationError
from toricposets.graph import Orientation, all_partitions
from toricposets.poset import face_partition_flags, is_compatible, partition_covers

import propcheck

SUITE = propcheck.graph_suite()


def _members(g):
    return [o for P in propcheck.classes(g) for o in P.members]


def _digraph(o):
    D = nx.DiGraph()
    D.add_nodes_from(o.graph.vertices)
    D.add_edges_from(o.arcs)
    return D


def _sample_orientations():
    for g in SUITE:
        yield from _members(g)[::3]


def test_poset_validates_relation():
    with pytest.raises(ValidationError):
        Poset(["1", "2"], [("1", "2"), ("2", "1")])
    with pytest.raises(ValidationError):
        Poset(["1", "2", "3"], [("1", "2"), ("2", "3")])
    with pytest.raises(UnknownVertex):
        Poset(["1"], [("1", "9")])


def test_cyclic_orientation_is_not_a_poset():
    cyc = Orientation.from_arcs(ex.c4(), [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])
    with pytest.raises(NotAcyclic):
        poset_from_orientation(cyc)


def test_diamond_relations():
    p = poset_from_orientation(ex.diamond())
    assert sorted(p.less) == [("1", "2"), ("1", "3"), ("1", "4"), ("2", "4"), ("3", "4")]


def test_c4_omega_hasse_and_closure():
    p = poset_from_orientation(ex.c4_omega())
    assert hasse_graph(p).edge_labels == (("1", "2"), ("2", "3"), ("3", "4"))
    assert len(transitive_closure_graph(p).edge_labels) == 6


def test_closure_and_reduction_match_networkx():
    for o in _sample_orientations():
        p = poset_from_orientation(o)
        D = _digraph(o)
        tc = {tuple(sorted(e, key=o.graph.index.get)) for e in nx.transitive_closure_dag(D).edges}
        tr = {tuple(sorted(e, key=o.graph.index.get)) for e in nx.transitive_reduction(D).edges}
        assert set(transitive_closure_graph(p).edge_labels) == tc
        assert set(hasse_graph(p).edge_labels) == tr


def test_linear_extensions_match_networkx():
    for o in _sample_orientations():
        p = poset_from_orientation(o)
        ours = linear_extensions(p)
        assert ours == sorted(ours, key=lambda w: [o.graph.index[v] for v in w])
        assert set(ours) == {tuple(t) for t in nx.all_topological_sorts(_digraph(o))}


def test_antichains_and_ideals():
    for o in _sample_orientations():
        p = poset_from_orientation(o)
        D = nx.transitive_closure_dag(_digraph(o))
        ref = {frozenset(a) for a in nx.antichains(D)}
        assert {frozenset(a) for a in antichains(p)} == ref
        ideals = order_ideals(p)
        assert len(ideals) == len(ref)  # ideals correspond to their maximal antichains
        assert all(is_ideal(p, I) for I in ideals)
        V = set(p.ground)
        assert all(is_filter(p, V - set(I)) for I in ideals)


def test_chains_are_totally_ordered():
    p = poset_from_orientation(ex.diamond())
    assert {frozenset(c) for c in chains(p)} >= {frozenset("124"), frozenset("134")}
    assert frozenset("23") not in {frozenset(c) for c in chains(p)}


def test_interval_examples():
    p = poset_from_orientation(ex.path3())
    assert interval(p, "1", "3") == {"1", "2", "3"}
    assert interval(p, "3", "1") == frozenset()
    assert interval(p, "2", "2") == {"2"}


def test_interval_is_hasse_edge_criterion():
    # i < j covers iff [i, j] = {i, j}
    for g in SUITE:
        for o in _members(g):
            p = poset_from_orientation(o)
            hs = set(hasse_graph(p).edge_labels)
            for i, j in itertools.combinations(g.vertices, 2):
                crit = interval(p, i, j) == {i, j} or interval(p, j, i) == {i, j}
                assert crit == ((i, j) in hs)


def _brute_closure(o, pi):
    """Meet of every compatible coarsening of pi."""
    ups = [s for s in all_partitions(o.graph.vertices) if pi.leq(s) and is_compatible(o, s)]
    return reduce(lambda a, b: a.meet(b), ups)


def test_closure_against_coarsening_oracle():
    for g in propcheck.connected_graphs(4):
        for o in _members(g):
            for pi in propcheck.partitions(g):
                assert closure_partition(o, pi) == _brute_closure(o, pi)


def test_diamond_closures_and_flags():
    d = ex.diamond()
    assert str(closure_partition(d, SetPartition.parse("124/3"))) == "1234"
    assert str(closure_partition(d, SetPartition.parse("14/23"))) == "1234"
    assert face_partition_flags(d, SetPartition.parse("1/23/4")) == {"compatible": True, "connected": False}


def test_diamond_face_lattice():
    parts = closed_face_partition_lattice(ex.diamond())
    assert sorted(map(str, parts)) == sorted(
        ["1234", "123/4", "12/34", "13/24", "1/234", "12/3/4", "13/2/4", "1/24/3", "1/2/34", "1/2/3/4"]
    )
    assert str(parts[0]) == "1234" and str(parts[-1]) == "1/2/3/4"
    covers = partition_covers(parts)
    # graded by block count
    assert all(len(a) == len(b) + 1 for a, b in covers)


def test_face_lattice_matches_brute_filter():
    for g in propcheck.connected_graphs(4):
        for o in _members(g):
            brute = [pi for pi in propcheck.partitions(g) if is_closed_face_partition(o, pi)]
            assert set(closed_face_partition_lattice(o)) == set(brute)
            assert all(closure_partition(o, pi) == pi for pi in brute)


@pytest.mark.parametrize("g", SUITE, ids=lambda g: f"n{g.n}m{g.m}")
def test_ordinary_closure_axioms(g):
    assert propcheck.check_ordinary_closure(g) == []
