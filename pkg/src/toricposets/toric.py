"""Toric analogues of the ordinary poset notions.

Everything here quantifies over the members of a materialised flip class
("for every member" / "for some member").  Where a second characterization
exists it is exposed as a separate function so tests can compare the two.
"""

from functools import cached_property

from .config import check_cap
from .errors import AmbiguousClosure, ConsistencyError, ValidationError
from .flipclass import FlipClass, flip_class
from .graph import Graph, Orientation, all_partitions, bits, label_key, popcount
from .poset import (
    antichain_masks,
    closure_partition,
    hasse_graph,
    is_compatible,
    is_connected_partition,
    linear_extensions,
    poset_from_orientation,
    sccs_of_quotient,
)


class CyclicWord:
    """A cyclic order of distinct labels, stored rotated so the least label leads."""

    __slots__ = ("order",)

    def __init__(self, order):
        order = tuple(str(v) for v in order)
        if len(set(order)) != len(order):
            raise ValidationError(f"cyclic word has repeated entries: {order}")
        if order:
            k = min(range(len(order)), key=lambda t: label_key(order[t]))
            order = order[k:] + order[:k]
        self.order = order

    @classmethod
    def parse(cls, text):
        text = text.strip().strip("[]()")
        if "," in text:
            return cls(x.strip() for x in text.split(",") if x.strip())
        return cls(text)

    def restrict(self, subset):
        subset = {str(v) for v in subset}
        return CyclicWord(v for v in self.order if v in subset)

    def rotations(self):
        w = self.order
        return [w[k:] + w[:k] for k in range(len(w))] or [()]

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.order == other.order

    def __hash__(self):
        return hash(("cyc", self.order))

    def __lt__(self, other):
        return [label_key(v) for v in self.order] < [label_key(v) for v in other.order]

    def __str__(self):
        return "[(" + ",".join(self.order) + ")]"

    def __repr__(self):
        return f"CyclicWord({','.join(self.order)})"


def _as_cyclic(order):
    return order if isinstance(order, CyclicWord) else CyclicWord(order)


class ToricPoset:
    """The toric poset of a flip class, with lazily filled caches.

    Accepts a FlipClass or any acyclic member orientation.
    """

    def __init__(self, source):
        fc = source if isinstance(source, FlipClass) else flip_class(source)
        self.flipclass = fc

    @property
    def graph(self):
        return self.flipclass.graph

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def members(self):
        return self.flipclass.members

    @property
    def canonical(self):
        return self.flipclass.canonical

    @cached_property
    def member_posets(self):
        return tuple(poset_from_orientation(o) for o in self.members)

    @cached_property
    def closure_graph(self):
        return toric_transitive_closure(self)

    @cached_property
    def hasse(self):
        return toric_hasse(self)

    @cached_property
    def extensions(self):
        return total_toric_extensions(self)

    def mask(self, labels):
        return self.graph.mask(labels)

    def __eq__(self, other):
        return isinstance(other, ToricPoset) and self.flipclass == other.flipclass

    def __hash__(self):
        return hash(self.flipclass)

    def __repr__(self):
        return f"ToricPoset({self.canonical!r}, members={len(self.members)})"


def _toric(P):
    return P if isinstance(P, ToricPoset) else ToricPoset(P)


# chains --------------------------------------------------------------------------


def _member_chain_word(poset, m):
    """The order of subset m (a bitmask) in one member poset, or None."""
    comp = poset.comparable
    for v in bits(m):
        if m & ~(comp[v] | (1 << v)):
            return None
    down = poset.down
    return tuple(sorted(bits(m), key=lambda v: popcount(down[v] & m)))


def chain_order(P, subset):
    """P|_C as a CyclicWord when C is a toric chain, else None."""
    P = _toric(P)
    m = P.mask(subset)
    return _chain_order_mask(P, m)


def _chain_order_mask(P, m):
    V = P.vertices
    if popcount(m) <= 1:
        return CyclicWord(V[v] for v in bits(m))
    word = None
    for poset in P.member_posets:
        seq = _member_chain_word(poset, m)
        if seq is None:
            return None
        w = CyclicWord(V[v] for v in seq)
        if word is None:
            word = w
        elif w != word:
            return None
    return word


def is_toric_chain(P, order):
    """True iff every member orders the entries as a chain along a cyclic shift of ``order``."""
    P = _toric(P)
    order = _as_cyclic(order)
    found = _chain_order_mask(P, P.mask(order))
    return found is not None and found == order


def toric_chains(P):
    """Every toric chain with its cyclic order, by size then vertex order.

    Candidates of size k are only those whose (k-1)-subsets are all chains.
    """
    P = _toric(P)
    check_cap(P.graph.n)
    n = P.graph.n
    found = {0: CyclicWord(())}
    for v in range(n):
        found[1 << v] = CyclicWord([P.vertices[v]])
    level = [1 << v for v in range(n)]
    while level:
        nxt = set()
        for m in level:
            top = m.bit_length()
            for v in range(top, n):
                c = m | (1 << v)
                if c in nxt:
                    continue
                if all((c & ~(1 << u)) in found for u in bits(c)):
                    nxt.add(c)
        level = []
        for c in sorted(nxt, key=bits):
            w = _chain_order_mask(P, c)
            if w is not None:
                found[c] = w
                level.append(c)
    out = [(frozenset(P.vertices[v] for v in bits(m)), w) for m, w in found.items()]
    out.sort(key=lambda t: (len(t[0]), sorted(P.graph.index[x] for x in t[0])))
    return out


def chain_order_from_extensions(P, subset):
    """P|_C read off L_tor: the common restriction of every total toric extension.

    Only meaningful for |C| != 2, where every restriction is trivially the same.
    """
    P = _toric(P)
    restrictions = {w.restrict(subset) for w in P.extensions}
    return restrictions.pop() if len(restrictions) == 1 else None


# closure and Hasse ---------------------------------------------------------------


def toric_transitive_closure(P):
    """Intersection of the comparability graphs of all members."""
    P = _toric(P)
    n = P.graph.n
    common = [(1 << n) - 1] * n
    for poset in P.member_posets:
        for v in range(n):
            common[v] &= poset.comparable[v]
    V = P.vertices
    return Graph(V, [(V[i], V[j]) for i in range(n) for j in bits(common[i]) if i < j])


def closure_orientation(P, graph=None):
    """A member's order read on a supergraph (by default the toric closure)."""
    P = _toric(P)
    g = graph if graph is not None else P.closure_graph
    return Orientation.from_relation(g, P.member_posets[0].less)


def closure_class(P):
    """The flip class of the closure orientation; same toric poset, maximal graph."""
    P = _toric(P)
    return ToricPoset(closure_orientation(P))


def toric_hasse(P):
    """Drop each closure edge that the remaining closure edges already force."""
    P = _toric(P)
    gbar = P.closure_graph
    obar = closure_orientation(P, gbar)
    keep = []
    for e in gbar.edge_labels:
        g_minus = gbar.without_edges([e])
        Q = ToricPoset(obar.restricted(g_minus))
        if not _comparable_everywhere(Q, e):
            keep.append(e)
    return Graph(P.vertices, keep)


def _comparable_everywhere(P, e):
    i, j = P.graph.idx(e[0]), P.graph.idx(e[1])
    return all(poset.comparable[i] >> j & 1 for poset in P.member_posets)


def hasse_class(P):
    """The toric poset presented on its toric Hasse diagram."""
    P = _toric(P)
    return ToricPoset(closure_orientation(P, P.hasse))


# intervals -----------------------------------------------------------------------


def toric_interval(P, i, j):
    """[i, j]^tor: {i} if i == j, empty if {i, j} is not a toric chain,
    otherwise i, j and every k with P|_{i,j,k} = [(i,k,j)]."""
    P = _toric(P)
    g = P.graph
    a, b = g.idx(i), g.idx(j)
    V = g.vertices
    if a == b:
        return frozenset([V[a]])
    pair = (1 << a) | (1 << b)
    if _chain_order_mask(P, pair) is None:
        return frozenset()
    out = {V[a], V[b]}
    for k in range(g.n):
        if k in (a, b):
            continue
        w = _chain_order_mask(P, pair | (1 << k))
        if w is not None and w == CyclicWord([V[a], V[k], V[b]]):
            out.add(V[k])
    return frozenset(out)


def toric_interval_via_paths(P, i, j):
    """Cross-check for toric_interval: k qualifies iff it lies on a toric
    directed path from i to j in some member of the closure class."""
    P = _toric(P)
    g = P.graph
    a, b = g.idx(i), g.idx(j)
    V = g.vertices
    if a == b:
        return frozenset([V[a]])
    C = closure_class(P)
    out = set()
    for o in C.members:
        if not o.succ[a] >> b & 1:
            continue  # no closing edge i -> j in this member
        r = o.reach
        for k in range(g.n):
            if k in (a, b) or (r[a] >> k & 1 and r[k] >> b & 1):
                out.add(V[k])
    return frozenset(out)


def all_toric_intervals(P):
    P = _toric(P)
    V = P.vertices
    return {(x, y): toric_interval(P, x, y) for x in V for y in V}


# antichains and partitions -------------------------------------------------------


def is_geometric_toric_antichain(P, A):
    """A is an antichain of some member poset."""
    P = _toric(P)
    m = P.mask(A)
    return any(all(poset.comparable[v] & m == 0 for v in bits(m)) for poset in P.member_posets)


def geometric_toric_antichains(P):
    P = _toric(P)
    masks = set()
    for poset in P.member_posets:
        masks.update(antichain_masks(poset))
    return [P.graph.labels_of(m) for m in sorted(masks, key=lambda m: (popcount(m), bits(m)))]


def is_closed_toric_partition(P, pi):
    """Some member has an acyclic quotient by pi."""
    P = _toric(P)
    return any(is_compatible(o, pi) for o in P.members)


def is_closed_toric_face_partition(P, pi):
    """Some single member is both compatible with pi and connected on it."""
    P = _toric(P)
    return any(
        is_compatible(o, pi) and is_connected_partition(poset, pi)
        for o, poset in zip(P.members, P.member_posets)
    )


def closed_toric_face_partitions(P):
    P = _toric(P)
    check_cap(P.graph.n, "partition lattice", "max_partition_vertices")
    hasses = [hasse_graph(p) for p in P.member_posets]
    out = []
    for pi in all_partitions(P.vertices):
        for o, h in zip(P.members, hasses):
            if all(len(h.components(h.mask(b))) == 1 for b in pi.blocks) and is_compatible(o, pi):
                out.append(pi)
                break
    return out


def toric_closure(P, pi):
    """cl^tor(pi): the coarsest coarsening of pi whose flat still contains
    every piece of the closed chamber cut by pi.

    Each member contributes the piece cut out by its own closure of pi, so
    the answer is the meet of the members' ordinary closures.
    """
    P = _toric(P)
    out = None
    for o in P.members:
        cl = closure_partition(o, pi)
        out = cl if out is None else out.meet(cl)
    return out


def toric_closure_max_scc(P, pi):
    """Ordinary closure under a member whose quotient by pi has the most
    strongly connected components; raises AmbiguousClosure when maximizing
    members disagree.  Kept for comparison with :func:`toric_closure`."""
    P = _toric(P)
    counts = [sccs_of_quotient(o, pi) for o in P.members]
    best = max(counts)
    result = None
    for o, c in zip(P.members, counts):
        if c != best:
            continue
        cl = closure_partition(o, pi)
        if result is None:
            result = cl
        elif cl != result:
            raise AmbiguousClosure(f"maximizing members close {pi} to both {result} and {cl}")
    return result


# total toric extensions ----------------------------------------------------------


def total_toric_extensions(P):
    """L_tor(P): cyclic classes of all linear extensions of all members."""
    P = _toric(P)
    check_cap(P.graph.n)
    words = set()
    for poset in P.member_posets:
        for w in linear_extensions(poset):
            words.add(CyclicWord(w))
    return sorted(words)


def check_interval(P, i, j):
    """toric_interval, verified against the toric-directed-path characterization."""
    a = toric_interval(P, i, j)
    b = toric_interval_via_paths(P, i, j)
    if a and a != b:
        raise ConsistencyError(f"[{i},{j}]^tor: triple test gives {sorted(a)}, path test gives {sorted(b)}")
    return a


__all__ = [
    "CyclicWord",
    "ToricPoset",
    "chain_order",
    "is_toric_chain",
    "toric_chains",
    "chain_order_from_extensions",
    "toric_transitive_closure",
    "closure_orientation",
    "closure_class",
    "toric_hasse",
    "hasse_class",
    "toric_interval",
    "toric_interval_via_paths",
    "all_toric_intervals",
    "check_interval",
    "is_geometric_toric_antichain",
    "geometric_toric_antichains",
    "is_closed_toric_partition",
    "is_closed_toric_face_partition",
    "closed_toric_face_partitions",
    "toric_closure",
    "toric_closure_max_scc",
    "total_toric_extensions",
]
