"""Small named graphs and orientations used by the regression suite, tests and CLI demos."""

from .coxeter import CoxeterSystem
from .graph import Graph, Orientation


def c4():
    return Graph.cycle(4)


def c4_omega():
    """The 4-cycle oriented as a cyclic chain 1->2->3->4 closed by 1->4."""
    return Orientation.from_arcs(c4(), [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])


def c4_omega_prime():
    """The 4-cycle with sources 1, 3 and sinks 2, 4."""
    return Orientation.from_arcs(c4(), [("1", "2"), ("3", "2"), ("3", "4"), ("1", "4")])


def k3():
    return Graph.complete(3)


def k3_omegas():
    """Three mutually flip-equivalent orientations of K3."""
    g = k3()
    w1 = Orientation.from_arcs(g, [("1", "2"), ("2", "3"), ("1", "3")])
    w2 = Orientation.from_arcs(g, [("2", "3"), ("3", "1"), ("2", "1")])
    w3 = Orientation.from_arcs(g, [("3", "2"), ("3", "1"), ("1", "2")])
    return w1, w2, w3


def diamond():
    g = Graph(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])
    return Orientation.from_arcs(g, [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])


def path3():
    return Orientation.from_arcs(Graph.path(3), [("1", "2"), ("2", "3")])


def c5_pair():
    """Two orientations of C5 that are not flip-equivalent but share their toric chains."""
    g = Graph.cycle(5)
    w = Orientation.from_arcs(g, [("1", "2"), ("2", "3"), ("3", "4"), ("1", "5"), ("5", "4")])
    w2 = Orientation.from_arcs(g, [("1", "2"), ("2", "3"), ("4", "3"), ("5", "4"), ("1", "5")])
    return w, w2


def a3_tilde():
    """Affine type A with four generators; its Coxeter graph is the 4-cycle."""
    return CoxeterSystem.affine_a(4)
