"""Toric morphisms: quotients by partitions, inclusions, extensions, isomorphisms."""

from collections import Counter

from .errors import CapExceeded, IllDefinedQuotient, LabelCollision, NotAQuotientPartition, VertexSetMismatch
from .flipclass import flip_class
from .graph import Graph, Orientation, is_acyclic, popcount, quotient, sort_labels
from .toric import ToricPoset, closure_class, toric_chains

ISO_MAX_VERTICES = 8


def _toric(P):
    return P if isinstance(P, ToricPoset) else ToricPoset(P)


def toric_quotient(P, pi, naming="index"):
    """The toric poset over G/~pi obtained by collapsing the blocks of pi.

    Every member with an acyclic quotient is used, and they must all land
    in one flip class.
    """
    P = _toric(P)
    found = None
    for o in P.members:
        q = quotient(o, pi, naming)
        if not is_acyclic(q):
            continue
        fc = flip_class(q)
        if found is None:
            found = fc
        elif fc != found:
            raise IllDefinedQuotient(f"members give inequivalent quotients by {pi}")
    if found is None:
        raise NotAQuotientPartition(f"no member has an acyclic quotient by {pi}")
    return ToricPoset(found)


def is_toric_extension(P, P2):
    """True iff the chamber of P2 lies inside the chamber of P.

    Generic points are compared through total toric extensions
    (L_tor(P2) inside L_tor(P)).  That alone misses points on hyperplanes:
    two trees on the same vertices share every cyclic word.  So every
    hyperplane avoiding c(P) must also avoid c(P2), i.e. the toric closure
    of P is a subgraph of that of P2.
    """
    P, P2 = _toric(P), _toric(P2)
    if set(P.vertices) != set(P2.vertices):
        raise VertexSetMismatch("extensions compare toric posets over one vertex set")
    if not set(P.closure_graph.edge_labels) <= set(P2.closure_graph.edge_labels):
        return False
    return set(P2.extensions) <= set(P.extensions)


def toric_hasse_included(P, P2):
    """Edge-set inclusion of toric Hasse diagrams (compared against is_toric_extension in tests)."""
    P, P2 = _toric(P), _toric(P2)
    return set(P.hasse.edge_labels) <= set(P2.hasse.edge_labels)


def include(P, extra):
    """Add isolated vertices; edges and directions are unchanged."""
    P = _toric(P)
    extra = [str(v) for v in extra]
    clash = set(extra) & set(P.vertices)
    if clash:
        raise LabelCollision(f"labels already present: {sort_labels(clash)}")
    if len(set(extra)) != len(extra):
        raise LabelCollision("repeated new labels")
    if not extra:
        return P
    g = Graph(list(P.vertices) + extra, P.graph.edge_labels)
    return ToricPoset(Orientation.from_arcs(g, P.canonical.arcs))


def factor_surjection(P, pi, target, naming="index"):
    """Split a surjective morphism P -> target into quotient-by-pi then extension.

    Returns the intermediate quotient, or None when target does not extend it.
    """
    Q = toric_quotient(P, pi, naming)
    target = _toric(target)
    return Q if is_toric_extension(Q, target) else None


def _invariants(P):
    C = closure_class(P)
    degs = Counter(popcount(a) for a in C.graph.adjacency)
    profile = Counter(len(s) for s, _ in toric_chains(P))
    return (P.graph.n, len(C.members), sorted(degs.items()), sorted(profile.items()))


def toric_isomorphic(P, P2):
    """Lexicographically least bijection V -> V2 carrying one toric poset to the other, or None."""
    P, P2 = _toric(P), _toric(P2)
    n = P.graph.n
    if max(n, P2.graph.n) > ISO_MAX_VERTICES:
        raise CapExceeded(f"isomorphism search: {max(n, P2.graph.n)} vertices exceeds cap {ISO_MAX_VERTICES}")
    if _invariants(P) != _invariants(P2):
        return None
    C, C2 = closure_class(P), closure_class(P2)
    g, g2 = C.graph, C2.graph
    adj, adj2 = g.adjacency, g2.adjacency
    targets = C2.flipclass
    image = [None] * n
    used = [False] * n

    def rec(v):
        if v == n:
            mapped = Orientation.from_arcs(
                g2, [(g2.vertices[image[g.idx(a)]], g2.vertices[image[g.idx(b)]]) for a, b in C.canonical.arcs]
            )
            return mapped in targets
        for t in range(n):
            if used[t] or popcount(adj[v]) != popcount(adj2[t]):
                continue
            if any((adj[v] >> u & 1) != (adj2[t] >> image[u] & 1) for u in range(v)):
                continue
            image[v], used[t] = t, True
            if rec(v + 1):
                return True
            image[v], used[t] = None, False
        return False

    if not rec(0):
        return None
    return {g.vertices[v]: g2.vertices[image[v]] for v in range(n)}


__all__ = [
    "toric_quotient",
    "is_toric_extension",
    "toric_hasse_included",
    "include",
    "factor_surjection",
    "toric_isomorphic",
    "ISO_MAX_VERTICES",
]
