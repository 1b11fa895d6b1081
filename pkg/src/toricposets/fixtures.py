"""Worked-example regression fixtures run by ``toricposets verify-paper``.

Each fixture recomputes one published example and compares it with the
frozen expected value.
"""

from dataclasses import dataclass
from typing import Any, Callable

from . import examples as ex
from .coxeter import conjugacy_class_elements, coxeter_conjugate, initial_segments, orientation_of
from .filters import characteristic_vector, is_toric_filter, toric_filters
from .flipclass import all_flip_classes, count_flip_classes, flip_class, flip_source, preposet_flip_class, torically_equivalent
from .geom import in_order_polytope, reconcile_chamber_bijection
from .graph import Graph, Orientation, SetPartition, is_acyclic, quotient, strongly_connected_components, tutte_10
from .morph import toric_quotient
from .poset import (
    closed_face_partition_lattice,
    closure_partition,
    face_partition_flags,
    hasse_graph,
    interval,
    is_closed_face_partition,
    poset_from_orientation,
    transitive_closure_graph,
)
from .toric import (
    ToricPoset,
    is_closed_toric_partition,
    is_geometric_toric_antichain,
    is_toric_chain,
    toric_chains,
    toric_closure,
    toric_hasse,
    toric_interval,
    toric_transitive_closure,
    total_toric_extensions,
)


@dataclass
class Fixture:
    name: str
    group: str
    anchor: str
    compute: Callable[[], Any]
    expected: Any


def _edges(g):
    return sorted("".join(e) for e in g.edge_labels)


def _words(ws):
    return sorted("".join(w) for w in ws)


def _sets(family):
    return sorted("".join(sorted(s)) for s in family)


def _parts(parts):
    return sorted(str(p) for p in parts)


def _k4_edges():
    return _edges(Graph.complete(4))


def _c4_edges():
    return _edges(ex.c4())


def _fp(o):
    fp = toric_filters(o)
    return {"elements": _sets(fp.elements), "graded": fp.is_graded(), "lattice": fp.is_lattice()}


C4_OMEGA_FILTERS = sorted(["", "1", "2", "3", "4", "12", "23", "34", "14", "123", "234", "134", "124", "1234"])
ALL_16 = _sets(
    frozenset(str(v) for v in range(1, 5) if m >> (v - 1) & 1) for m in range(16)
)


def _build():
    F = []

    def add(name, group, anchor, compute, expected):
        F.append(Fixture(name, group, anchor, compute, expected))

    w, wp = ex.c4_omega(), ex.c4_omega_prime()
    w1, w2, w3 = ex.k3_omegas()
    pi = SetPartition.parse("1/23")

    # graph ---------------------------------------------------------------------------
    add("c4-omega-acyclic", "graph", "C4 orientation figure", lambda: is_acyclic(w), True)
    k3_tied = Orientation.from_arcs(ex.k3(), [("1", "2"), ("1", "3")], ties=[("2", "3")])
    add("k3-tied-scc", "graph", "K3 contraction figure", lambda: str(strongly_connected_components(k3_tied)), "1/23")
    add("k3-quotient-w1", "graph", "K3 contraction figure, first orientation",
        lambda: quotient(w1, pi).arcs, [("B1", "B2")])
    add("k3-quotient-w3-cyclic", "graph", "K3 contraction figure, third orientation",
        lambda: is_acyclic(quotient(w3, pi)), False)
    add("tutte-forest", "graph", "forest count remark", lambda: tutte_10(Graph.path(6)), 1)
    add("tutte-k3", "graph", "K3 class count", lambda: tutte_10(ex.k3()), 2)

    # flipclass -----------------------------------------------------------------------
    add("c4-flip-at-1", "flipclass", "C4 class figure, second frame",
        lambda: sorted(flip_source(w, "1").arcs), sorted([("2", "1"), ("2", "3"), ("3", "4"), ("4", "1")]))
    add("c4-omega-class", "flipclass", "four equivalent orientations of C4", lambda: len(flip_class(w)), 4)
    add("c4-omega-prime-class", "flipclass", "six equivalent orientations of C4", lambda: len(flip_class(wp)), 6)
    add("k3-classes", "flipclass", "K3 splits into two classes",
        lambda: sorted(len(fc) for fc in all_flip_classes(ex.k3())), [3, 3])
    add("k3-omegas-equivalent", "flipclass", "K3 class figure",
        lambda: [torically_equivalent(w1, w2), torically_equivalent(w1, w3)], [True, True])
    add("k3-preposet-pair", "flipclass", "K3 preposets on the block {2,3}",
        lambda: len(preposet_flip_class(k3_tied)), 2)
    add("count-k3", "flipclass", "K3 class count", lambda: count_flip_classes(ex.k3()), 2)
    add("count-tree", "flipclass", "forest count remark", lambda: count_flip_classes(Graph.path(5)), 1)

    # poset ---------------------------------------------------------------------------
    d = ex.diamond()
    add("diamond-relations", "poset", "diamond poset figure",
        lambda: sorted(poset_from_orientation(d).less),
        [("1", "2"), ("1", "3"), ("1", "4"), ("2", "4"), ("3", "4")])
    add("c4-omega-hasse", "poset", "C4 Hasse diagram is a path",
        lambda: _edges(hasse_graph(poset_from_orientation(w))), ["12", "23", "34"])
    add("c4-omega-closure", "poset", "C4 transitive closure is K4",
        lambda: _edges(transitive_closure_graph(poset_from_orientation(w))), _k4_edges())
    add("chain-interval", "poset", "interval [1,3] of the 3-chain",
        lambda: sorted(interval(poset_from_orientation(ex.path3()), "1", "3")), ["1", "2", "3"])
    add("diamond-closures", "poset", "two partitions with the same closure",
        lambda: [str(closure_partition(d, SetPartition.parse(s))) for s in ("124/3", "14/23")], ["1234", "1234"])
    add("diamond-sigma-flags", "poset", "closed but not connected partition",
        lambda: face_partition_flags(d, SetPartition.parse("1/23/4")), {"compatible": True, "connected": False})
    add("diamond-123-4", "poset", "closed face partition lattice figure",
        lambda: is_closed_face_partition(d, SetPartition.parse("123/4")), True)
    add("diamond-lattice", "poset", "closed face partition lattice figure",
        lambda: _parts(closed_face_partition_lattice(d)),
        sorted(["1234", "123/4", "12/34", "13/24", "1/234", "12/3/4", "13/2/4", "1/24/3", "1/2/34", "1/2/3/4"]))
    add("k3-w3-closure", "poset", "K3 closure under the third orientation",
        lambda: str(closure_partition(w3, pi)), "123")

    # toric ---------------------------------------------------------------------------
    add("c4-omega-full-chain", "toric", "V is a toric chain of size 4",
        lambda: is_toric_chain(w, ["1", "2", "3", "4"]), True)
    add("c4-omega-prime-chains", "toric", "only vertices and edges are toric chains",
        lambda: _sets(s for s, _ in toric_chains(wp)), sorted(["", "1", "2", "3", "4", "12", "23", "34", "14"]))
    c5a, c5b = ex.c5_pair()
    add("c5-same-chains", "toric", "C5 pair with equal toric chains",
        lambda: [not torically_equivalent(c5a, c5b),
                 {(s, c) for s, c in toric_chains(c5a)} == {(s, c) for s, c in toric_chains(c5b)},
                 len(toric_chains(c5a))],
        [True, True, 11])
    add("c4-omega-toric-closure", "toric", "toric closure of the C4 chain class",
        lambda: _edges(toric_transitive_closure(w)), _k4_edges())
    add("c4-omega-prime-toric-closure", "toric", "toric closure of the other C4 class",
        lambda: _edges(toric_transitive_closure(wp)), _c4_edges())
    add("c4-omega-toric-hasse", "toric", "toric Hasse diagram is C4",
        lambda: _edges(toric_hasse(w)), _c4_edges())
    add("c4-omega-prime-toric-hasse", "toric", "toric Hasse diagram is C4",
        lambda: _edges(toric_hasse(wp)), _c4_edges())
    add("path-toric-interval", "toric", "toric interval [1,3] on a path is empty",
        lambda: sorted(toric_interval(ex.path3(), "1", "3")), [])
    add("toric-interval-diagonal", "toric", "[i,i] is {i}",
        lambda: sorted(toric_interval(w, "2", "2")), ["2"])
    add("c4-omega-not-antichain", "toric", "a toric chain is no antichain",
        lambda: is_geometric_toric_antichain(w, ["1", "2", "3", "4"]), False)
    add("k3-closed-torically", "toric", "1/23 closed for the class, not for the third orientation",
        lambda: [is_closed_toric_partition(w3, pi), is_acyclic(quotient(w3, pi))], [True, False])
    add("k3-toric-closure", "toric", "toric closure strictly below ordinary closure",
        lambda: [str(toric_closure(w3, pi)), str(closure_partition(w3, pi))], ["1/23", "123"])
    add("c4-omega-ltor", "toric", "the only total toric extension",
        lambda: [str(x) for x in total_toric_extensions(w)], ["[(1,2,3,4)]"])
    add("c4-omega-prime-ltor", "toric", "four total toric extensions figure",
        lambda: [str(x) for x in total_toric_extensions(wp)],
        ["[(1,2,4,3)]", "[(1,3,2,4)]", "[(1,3,4,2)]", "[(1,4,2,3)]"])
    add("k3-ltor-count", "toric", "(n-1)! total toric orders",
        lambda: sum(len(total_toric_extensions(fc)) for fc in all_flip_classes(ex.k3())), 2)

    # filters -------------------------------------------------------------------------
    add("c4-omega-13-not-filter", "filters", "filter poset of the C4 chain class",
        lambda: is_toric_filter(w, ["1", "3"]), False)
    add("c4-omega-filters", "filters", "filters form a graded non-lattice",
        lambda: _fp(w), {"elements": C4_OMEGA_FILTERS, "graded": True, "lattice": False})
    add("c4-omega-prime-filters", "filters", "Boolean lattice of filters",
        lambda: _fp(wp), {"elements": ALL_16, "graded": True, "lattice": True})

    # morph ---------------------------------------------------------------------------
    add("k3-quotient", "morph", "K3 contraction yields an edge",
        lambda: [toric_quotient(w1, pi).graph.edge_labels, len(toric_quotient(w1, pi).members)],
        [(("B1", "B2"),), 2])
    add("contract-interval", "morph", "contracting a toric interval is a morphism",
        lambda: len(toric_quotient(w, SetPartition.collapsing(toric_interval(w, "1", "3"), w.graph.vertices)).members) > 0,
        True)
    add("contract-antichain", "morph", "contracting a geometric toric antichain is a morphism",
        lambda: len(toric_quotient(wp, SetPartition.collapsing(["1", "3"], wp.graph.vertices)).members) > 0,
        True)

    # coxeter -------------------------------------------------------------------------
    cs = ex.a3_tilde()
    add("a3-omega-c", "coxeter", "orientation of s1s2s3s4",
        lambda: sorted(orientation_of(cs, "s1,s2,s3,s4").arcs),
        sorted([("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("s1", "s4")]))
    add("a3-omega-c-prime", "coxeter", "orientation of s1s3s2s4",
        lambda: sorted(orientation_of(cs, "s1,s3,s2,s4").arcs),
        sorted([("s1", "s2"), ("s3", "s2"), ("s3", "s4"), ("s1", "s4")]))
    add("a3-shift-conjugate", "coxeter", "cyclic shifts are conjugate",
        lambda: coxeter_conjugate(cs, "s1,s2,s3,s4", "s2,s3,s4,s1"), True)
    add("a3-not-conjugate", "coxeter", "the two worked Coxeter elements",
        lambda: coxeter_conjugate(cs, "s1,s2,s3,s4", "s1,s3,s2,s4"), False)
    add("a3-conjugates-c", "coxeter", "four conjugates of s1s2s3s4",
        lambda: sorted(w for _, ws in conjugacy_class_elements(cs, "s1,s2,s3,s4") for w in _words(ws)),
        sorted(["s1s2s3s4", "s2s3s4s1", "s3s4s1s2", "s4s1s2s3"]))
    add("a3-conjugates-c-prime", "coxeter", "six conjugates of s1s3s2s4 with their reduced words",
        lambda: sorted(_words(ws) for _, ws in conjugacy_class_elements(cs, "s1,s3,s2,s4")),
        sorted([
            ["s1s2s4s3", "s1s4s2s3"],
            ["s1s3s2s4", "s1s3s4s2", "s3s1s2s4", "s3s1s4s2"],
            ["s4s1s3s2", "s4s3s1s2"],
            ["s2s1s3s4", "s2s3s1s4"],
            ["s2s4s1s3", "s2s4s3s1", "s4s2s1s3", "s4s2s3s1"],
            ["s3s2s4s1", "s3s4s2s1"],
        ]))
    add("a3-segments-c", "coxeter", "initial segments replay the C4 filter poset",
        lambda: [len(initial_segments(cs, "s1,s2,s3,s4")), initial_segments(cs, "s1,s2,s3,s4").is_lattice()],
        [14, False])
    add("a3-segments-c-prime", "coxeter", "initial segments form a Boolean lattice",
        lambda: [len(initial_segments(cs, "s1,s3,s2,s4")), initial_segments(cs, "s1,s3,s2,s4").is_lattice()],
        [16, True])

    # geom ----------------------------------------------------------------------------
    add("geom-k3", "geom", "K3 splits into two chambers",
        lambda: reconcile_chamber_bijection(ex.k3())["cell_sizes"], [3, 3])
    add("geom-tree", "geom", "forests have one toric chamber",
        lambda: reconcile_chamber_bijection(Graph.path(4))["cells"], 1)
    add("geom-filter-vertices", "geom", "characteristic vectors of filters are order-polytope vertices",
        lambda: all(
            any(in_order_polytope(o, characteristic_vector(J, w.graph.vertices)) for o in flip_class(w).members)
            for J in toric_filters(w).elements
        ), True)
    return F


FIXTURES = _build()


def run_fixtures(group=None):
    """(fixture, actual, passed) triples; exceptions count as failures."""
    out = []
    for fx in FIXTURES:
        if group and fx.group != group and group not in fx.name:
            continue
        try:
            actual = fx.compute()
        except Exception as e:  # report, never abort the suite
            actual = f"{type(e).__name__}: {e}"
        out.append((fx, actual, actual == fx.expected))
    return out
