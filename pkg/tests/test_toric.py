import itertools
import math

import pytest

from toricposets import (
    CyclicWord,
    Graph,
    SetPartition,
    ToricPoset,
    all_flip_classes,
    closure_partition,
    interval,
    is_closed_toric_face_partition,
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
from toricposets import examples as ex
from toricposets.errors import AmbiguousClosure, UnknownVertex, ValidationError
from toricposets.graph import is_acyclic, quotient
from toricposets.poset import is_antichain, poset_from_orientation
from toricposets.toric import (
    chain_order_from_extensions,
    check_interval,
    closed_toric_face_partitions,
    closure_orientation,
    geometric_toric_antichains,
    hasse_class,
    toric_closure_max_scc,
    toric_interval_via_paths,
)

import propcheck

SUITE = propcheck.graph_suite()
SMALL = propcheck.connected_graphs(5)


def _ids(g):
    return f"n{g.n}m{g.m}"


def _edges(g):
    return set(g.edge_labels)


# cyclic words ----------------------------------------------------------------------


def test_cyclic_word_rotation_invariance():
    assert CyclicWord("3412") == CyclicWord("1234")
    assert str(CyclicWord(["2", "10", "1"])) == "[(1,2,10)]"
    assert CyclicWord.parse("[(2,3,1)]") == CyclicWord("123")
    assert CyclicWord("1234").restrict({"1", "3", "4"}) == CyclicWord("134")
    assert len(CyclicWord("123").rotations()) == 3


def test_cyclic_word_rejects_repeats():
    with pytest.raises(ValidationError):
        CyclicWord("121")


# chains ----------------------------------------------------------------------------


def _brute_chains(P):
    """Subsets that every member orders totally, with one common cyclic order."""
    V = P.vertices
    out = {}
    for r in range(len(V) + 1):
        for C in itertools.combinations(V, r):
            words = set()
            for p in P.member_posets:
                if any(not (p.lt(a, b) or p.lt(b, a)) for a, b in itertools.combinations(C, 2)):
                    break
                words.add(CyclicWord(sorted(C, key=lambda v: sum(p.lt(u, v) for u in C))))
            else:
                if len(words) <= 1:
                    out[frozenset(C)] = words.pop() if words else CyclicWord(C)
    return out


@pytest.mark.parametrize("g", SMALL, ids=_ids)
def test_toric_chains_match_brute_force(g):
    for P in propcheck.classes(g):
        assert dict(toric_chains(P)) == _brute_chains(P)


def test_chain_examples():
    assert is_toric_chain(ex.c4_omega(), "1234")
    assert is_toric_chain(ex.c4_omega(), "2341")
    assert not is_toric_chain(ex.c4_omega(), "1243")
    for order in itertools.permutations("123"):
        assert not is_toric_chain(ex.c4_omega_prime(), order)
    sizes = sorted(len(s) for s, _ in toric_chains(ex.c4_omega_prime()))
    assert sizes == [0, 1, 1, 1, 1, 2, 2, 2, 2]


@pytest.mark.parametrize("g", SMALL, ids=_ids)
def test_chain_order_read_from_extensions(g):
    for P in propcheck.classes(g):
        chains = dict(toric_chains(P))
        for r in (0, 1, *range(3, g.n + 1)):
            for C in map(frozenset, itertools.combinations(g.vertices, r)):
                assert chain_order_from_extensions(P, C) == chains.get(C)


def test_c5_pair_share_chains():
    a, b = ex.c5_pair()
    assert ToricPoset(a).flipclass != ToricPoset(b).flipclass
    assert set(toric_chains(a)) == set(toric_chains(b))


# closure and Hasse -----------------------------------------------------------------


def test_c4_examples():
    K4 = _edges(Graph.complete(4))
    C4 = _edges(ex.c4())
    w, wp = ex.c4_omega(), ex.c4_omega_prime()
    assert _edges(toric_transitive_closure(w)) == K4
    assert _edges(toric_hasse(w)) == C4
    assert _edges(toric_transitive_closure(wp)) == _edges(toric_hasse(wp)) == C4


def test_path_chain_closure_is_the_path():
    assert _edges(toric_transitive_closure(ex.path3())) == {("1", "2"), ("2", "3")}
    assert _edges(toric_hasse(ex.path3())) == {("1", "2"), ("2", "3")}


def _orders(P):
    return {frozenset(p.less) for p in P.member_posets}


def _brute_hasse(P):
    """Closure edges whose removal changes the set of member partial orders."""
    gbar = P.closure_graph
    obar = closure_orientation(P, gbar)
    ref = _orders(ToricPoset(obar))
    keep = set()
    for e in gbar.edge_labels:
        Q = ToricPoset(obar.restricted(gbar.without_edges([e])))
        if _orders(Q) != ref:
            keep.add(e)
    return keep


@pytest.mark.parametrize("g", SMALL, ids=_ids)
def test_toric_hasse_against_extension_oracle(g):
    for P in propcheck.classes(g):
        assert _edges(toric_hasse(P)) == _brute_hasse(P)
        assert _orders(hasse_class(P)) == _orders(P)
        assert set(hasse_class(P).extensions) == set(P.extensions)


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_sandwich(g):
    assert propcheck.check_sandwich(g) == []


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_chain_subset_closure(g):
    assert propcheck.check_chain_subsets(g) == []


# intervals -------------------------------------------------------------------------


def test_path_interval_converse_fails():
    p = poset_from_orientation(ex.path3())
    assert interval(p, "1", "3") == {"1", "2", "3"}
    assert toric_interval(ex.path3(), "1", "3") == frozenset()


def test_interval_unknown_vertex():
    with pytest.raises(UnknownVertex):
        toric_interval(ex.c4_omega(), "1", "9")


def test_c4_omega_intervals():
    w = ex.c4_omega()
    assert toric_interval(w, "1", "3") == {"1", "2", "3"}
    assert toric_interval(w, "3", "1") == {"3", "4", "1"}
    assert toric_interval(w, "1", "2") == {"1", "2"}


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_interval_characterisations_agree(g):
    for P in propcheck.classes(g):
        for i, j in itertools.product(g.vertices, repeat=2):
            a = check_interval(P, i, j)
            assert a == toric_interval_via_paths(P, i, j) or not a
            if a and i != j:
                # a nonempty toric interval is an ordinary interval of some member
                assert any(interval(p, i, j) == a for p in P.member_posets)


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_toric_hasse_edge_criterion(g):
    # toric analogue of: {i,j} is a cover iff the interval is {i,j}
    for P in propcheck.classes(g):
        hs = _edges(toric_hasse(P))
        for i, j in itertools.combinations(g.vertices, 2):
            crit = {i, j} in (toric_interval(P, i, j), toric_interval(P, j, i))
            assert crit == ((i, j) in hs)


# antichains ------------------------------------------------------------------------


def test_antichain_examples():
    assert not is_geometric_toric_antichain(ex.c4_omega(), "1234")
    assert not is_geometric_toric_antichain(ex.c4_omega(), "13")  # V is a toric chain
    assert is_geometric_toric_antichain(ex.c4_omega_prime(), "13")
    assert not is_geometric_toric_antichain(ex.c4_omega_prime(), "12")


@pytest.mark.parametrize("g", SMALL, ids=_ids)
def test_antichains_are_member_antichains(g):
    for P in propcheck.classes(g):
        found = {frozenset(a) for a in geometric_toric_antichains(P)}
        for r in range(g.n + 1):
            for A in itertools.combinations(g.vertices, r):
                brute = any(is_antichain(p, A) for p in P.member_posets)
                assert (frozenset(A) in found) == brute == is_geometric_toric_antichain(P, A)


# partitions and closure ------------------------------------------------------------


def test_k3_closed_partition():
    w1, w2, w3 = ex.k3_omegas()
    pi = SetPartition.parse("1/23")
    assert is_closed_toric_partition(w3, pi)
    assert not is_acyclic(quotient(w3, pi))
    assert str(toric_closure(w3, pi)) == "1/23"
    assert str(closure_partition(w3, pi)) == "123"


def test_max_scc_rule_on_k3_and_its_ambiguity():
    _, _, w3 = ex.k3_omegas()
    assert str(toric_closure_max_scc(w3, SetPartition.parse("1/23"))) == "1/23"
    # two maximizing members of the C4 chain class close 13/2/4 differently
    with pytest.raises(AmbiguousClosure):
        toric_closure_max_scc(ex.c4_omega(), SetPartition.parse("13/2/4"))
    assert str(toric_closure(ex.c4_omega(), SetPartition.parse("13/2/4"))) == "13/2/4"


def test_closure_dominated_by_diamond_class():
    P = ToricPoset(ex.diamond())
    c = toric_closure(P, SetPartition.parse("124/3"))
    assert c.leq(SetPartition.parse("1234"))
    assert all(c.leq(closure_partition(o, SetPartition.parse("124/3"))) for o in P.members)


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_toric_closure_axioms(g):
    assert propcheck.check_toric_closure(g) == []


@pytest.mark.parametrize("g", SMALL, ids=_ids)
def test_toric_closure_matches_chamber_samples(g):
    assert propcheck.check_toric_closure_geometric(g) == []


def test_face_partitions_need_one_member_for_both_conditions():
    for g in propcheck.connected_graphs(4):
        for P in propcheck.classes(g):
            faces = set(closed_toric_face_partitions(P))
            for pi in propcheck.partitions(g):
                assert (pi in faces) == is_closed_toric_face_partition(P, pi)
                if pi in faces:
                    assert is_closed_toric_partition(P, pi)


# total toric extensions ------------------------------------------------------------


def test_c4_extensions():
    assert [str(w) for w in total_toric_extensions(ex.c4_omega())] == ["[(1,2,3,4)]"]
    assert [str(w) for w in total_toric_extensions(ex.c4_omega_prime())] == [
        "[(1,2,4,3)]", "[(1,3,2,4)]", "[(1,3,4,2)]", "[(1,4,2,3)]"
    ]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complete_graph_total_orders(n):
    classes = all_flip_classes(Graph.complete(n))
    assert len(classes) == math.factorial(n - 1)
    assert all(len(total_toric_extensions(c)) == 1 for c in classes)


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_extensions_partition_cyclic_words(g):
    # every cyclic order of V lies in exactly one class's L_tor
    seen = [w for P in propcheck.classes(g) for w in total_toric_extensions(P)]
    assert len(seen) == len(set(seen)) == math.factorial(g.n - 1)


@pytest.mark.parametrize("g", SUITE, ids=_ids)
def test_representative_invariance(g):
    assert propcheck.check_representative_invariance(g) == []
