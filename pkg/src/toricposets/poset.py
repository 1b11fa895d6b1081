"""Ordinary finite posets of acyclic orientations.

These are results in their own right and also serve as the per-member
oracles that the toric characterizations quantify over.
"""

from functools import cached_property

from .config import check_cap
from .errors import NotAcyclic, UnknownVertex, ValidationError
from .graph import (
    Graph,
    SetPartition,
    all_partitions,
    bits,
    is_acyclic,
    quotient_arcs,
    quotient_is_acyclic,
    scc_masks,
    sort_labels,
)


class Poset:
    """Strict partial order on ``ground``; ``less`` is transitively closed."""

    def __init__(self, ground, less):
        self.ground = sort_labels(str(v) for v in ground)
        self.index = {v: i for i, v in enumerate(self.ground)}
        n = len(self.ground)
        up = [0] * n
        for a, b in less:
            try:
                up[self.index[str(a)]] |= 1 << self.index[str(b)]
            except KeyError as e:
                raise UnknownVertex(str(e)) from None
        for i in range(n):
            if up[i] >> i & 1:
                raise ValidationError("order relation is not irreflexive")
        for i in range(n):
            for j in bits(up[i]):
                if up[j] >> i & 1:
                    raise ValidationError("order relation is not antisymmetric")
                if up[j] & ~up[i]:
                    raise ValidationError("order relation is not transitive")
        self.up = tuple(up)

    @classmethod
    def _from_masks(cls, ground, up):
        p = cls.__new__(cls)
        p.ground = tuple(ground)
        p.index = {v: i for i, v in enumerate(p.ground)}
        p.up = tuple(up)
        return p

    @cached_property
    def down(self):
        d = [0] * len(self.ground)
        for i, u in enumerate(self.up):
            for j in bits(u):
                d[j] |= 1 << i
        return tuple(d)

    @cached_property
    def comparable(self):
        return tuple(u | d for u, d in zip(self.up, self.down))

    @property
    def less(self):
        V = self.ground
        return frozenset((V[i], V[j]) for i, u in enumerate(self.up) for j in bits(u))

    @property
    def n(self):
        return len(self.ground)

    def idx(self, v):
        try:
            return self.index[str(v)]
        except KeyError:
            raise UnknownVertex(f"unknown element {v!r}") from None

    def lt(self, a, b):
        return bool(self.up[self.idx(a)] >> self.idx(b) & 1)

    def mask(self, labels):
        m = 0
        for v in labels:
            m |= 1 << self.idx(v)
        return m

    def labels_of(self, mask):
        return frozenset(self.ground[i] for i in bits(mask))

    @cached_property
    def cover_masks(self):
        """covers[i]: bitmask of elements covering i."""
        out = []
        for i, u in enumerate(self.up):
            c = u
            for j in bits(u):
                c &= ~self.up[j]
            out.append(c)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.ground == other.ground and self.up == other.up

    def __hash__(self):
        return hash((self.ground, self.up))

    def __repr__(self):
        rel = " ".join(f"{a}<{b}" for a, b in sorted(self.less))
        return f"Poset({rel})"


def poset_from_orientation(o):
    if o.has_ties or not is_acyclic(o):
        raise NotAcyclic("posets come from acyclic orientations")
    return Poset._from_masks(o.graph.vertices, o.reach)


def transitive_closure_graph(p):
    V = p.ground
    return Graph(V, [(V[i], V[j]) for i, u in enumerate(p.up) for j in bits(u)])


def hasse_graph(p):
    V = p.ground
    return Graph(V, [(V[i], V[j]) for i, c in enumerate(p.cover_masks) for j in bits(c)])


def hasse_orientation(p):
    from .graph import Orientation

    return Orientation.from_relation(hasse_graph(p), p.less)


def _chain_masks(p, pick_compatible):
    n = p.n
    out = []

    def rec(start, current, allowed):
        out.append(current)
        for v in range(start, n):
            if allowed >> v & 1:
                rec(v + 1, current | (1 << v), allowed & pick_compatible(v))

    rec(0, 0, (1 << n) - 1)
    return out


def chain_masks(p):
    return _chain_masks(p, lambda v: p.comparable[v])


def antichain_masks(p):
    full = (1 << p.n) - 1
    return _chain_masks(p, lambda v: full & ~p.comparable[v] & ~(1 << v))


def _sorted_sets(p, masks):
    return sorted((p.labels_of(m) for m in masks), key=lambda s: (len(s), sorted(p.idx(x) for x in s)))


def chains(p):
    """All totally ordered subsets, including the empty set."""
    return _sorted_sets(p, chain_masks(p))


def antichains(p):
    """All pairwise-incomparable subsets, including the empty set."""
    return _sorted_sets(p, antichain_masks(p))


def is_chain(p, subset):
    m = p.mask(subset)
    return all(m & ~(p.comparable[v] | (1 << v)) == 0 for v in bits(m))


def is_antichain(p, subset):
    m = p.mask(subset)
    return all(p.comparable[v] & m == 0 for v in bits(m))


def interval(p, i, j):
    """[i, j] = {k : i <= k <= j}; empty unless i <= j."""
    a, b = p.idx(i), p.idx(j)
    if a == b:
        return frozenset([p.ground[a]])
    if not p.up[a] >> b & 1:
        return frozenset()
    return p.labels_of((p.up[a] & p.down[b]) | (1 << a) | (1 << b))


def linear_extensions(p):
    """All linear extensions, lexicographic in the canonical element order."""
    check_cap(p.n)
    n = p.n
    down = p.down
    out = []
    word = []

    def rec(placed):
        if len(word) == n:
            out.append(tuple(p.ground[i] for i in word))
            return
        for v in range(n):
            if not placed >> v & 1 and down[v] & ~placed == 0:
                word.append(v)
                rec(placed | (1 << v))
                word.pop()

    rec(0)
    return out


def ideal_masks(p):
    """Downward-closed subsets, grown one minimal element at a time."""
    n = p.n
    down = p.down
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for I in frontier:
            for v in range(n):
                if not I >> v & 1 and down[v] & ~I == 0:
                    J = I | (1 << v)
                    if J not in seen:
                        seen.add(J)
                        nxt.append(J)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), bits(m)))


def order_ideals(p):
    return [p.labels_of(m) for m in ideal_masks(p)]


def is_ideal(p, subset):
    m = p.mask(subset)
    return all(p.down[v] & ~m == 0 for v in bits(m))


def is_filter(p, subset):
    m = p.mask(subset)
    return all(p.up[v] & ~m == 0 for v in bits(m))


# face partitions -----------------------------------------------------------------


def closure_partition(o, pi):
    """cl_P(pi): merge blocks lying in a common strongly connected component
    of o/~pi until the collapsed graph is acyclic.  Works for preposets too."""
    g = o.graph
    current = pi
    while True:
        blk = current.block_index(g)
        r = len(current)
        reach = [0] * r
        for a, b in quotient_arcs(o, blk):
            reach[a] |= 1 << b
        for k in range(r):
            kb = 1 << k
            for i in range(r):
                if reach[i] & kb:
                    reach[i] |= reach[k]
        if not any(reach[b] >> b & 1 for b in range(r)):
            return current
        groups = {}
        for b in range(r):
            comp = min([b] + [c for c in bits(reach[b]) if reach[c] >> b & 1])
            groups.setdefault(comp, []).extend(current.blocks[b])
        current = SetPartition(groups.values())


def is_compatible(o, pi):
    return quotient_is_acyclic(o, pi.block_index(o.graph), len(pi))


def is_connected_partition(p, pi):
    """Every block induces a connected subgraph of the Hasse diagram of p."""
    h = hasse_graph(p)
    for b in pi.blocks:
        m = h.mask(b)
        if len(h.components(m)) != 1:
            return False
    return True


def face_partition_flags(o, pi):
    p = poset_from_orientation(o)
    return {"compatible": is_compatible(o, pi), "connected": is_connected_partition(p, pi)}


def is_closed_face_partition(o, pi):
    flags = face_partition_flags(o, pi)
    return flags["compatible"] and flags["connected"]


def closed_face_partition_lattice(o):
    """All closed face partitions of P(G, o), coarsest first."""
    check_cap(o.graph.n, "partition lattice", "max_partition_vertices")
    p = poset_from_orientation(o)
    h = hasse_graph(p)
    g = o.graph
    out = []
    for pi in all_partitions(g.vertices):
        if all(len(h.components(h.mask(b))) == 1 for b in pi.blocks) and is_compatible(o, pi):
            out.append(pi)
    out.sort(key=lambda q: (len(q), [[g.index[x] for x in b] for b in q.blocks]))
    return out


def partition_covers(parts):
    """Cover pairs (finer, coarser) among a family of partitions."""
    covers = []
    for a in parts:
        for b in parts:
            if a is b or a == b or not a.leq(b):
                continue
            if not any(c != a and c != b and a.leq(c) and c.leq(b) for c in parts):
                covers.append((a, b))
    return covers


def sccs_of_quotient(o, pi):
    """Number of strongly connected components of o/~pi."""
    blk = pi.block_index(o.graph)
    r = len(pi)
    succ = [0] * r
    for a, b in quotient_arcs(o, blk):
        succ[a] |= 1 << b
    reach = list(succ)
    for k in range(r):
        for i in range(r):
            if reach[i] >> k & 1:
                reach[i] |= reach[k]
    count = 0
    seen = 0
    for b in range(r):
        if seen >> b & 1:
            continue
        comp = (1 << b) | sum(1 << c for c in bits(reach[b]) if reach[c] >> b & 1)
        seen |= comp
        count += 1
    return count


__all__ = [
    "Poset",
    "poset_from_orientation",
    "transitive_closure_graph",
    "hasse_graph",
    "hasse_orientation",
    "chains",
    "antichains",
    "chain_masks",
    "antichain_masks",
    "is_chain",
    "is_antichain",
    "interval",
    "linear_extensions",
    "order_ideals",
    "ideal_masks",
    "is_ideal",
    "is_filter",
    "closure_partition",
    "is_compatible",
    "is_connected_partition",
    "face_partition_flags",
    "is_closed_face_partition",
    "closed_face_partition_lattice",
    "partition_covers",
    "sccs_of_quotient",
    "scc_masks",
]
