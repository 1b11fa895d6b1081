"""Source-to-sink flips and the equivalence classes they generate."""

import threading
from collections import deque

from .config import check_cap
from .errors import GraphMismatch, NotAcyclic, NotASource
from .graph import Orientation, bits, condensation, is_acyclic


class FlipClass:
    """A toric poset P(G, [w]): all acyclic orientations reachable by flips.

    ``members`` is sorted by direction codes, so ``members[0]`` is the
    canonical (lexicographically least) representative.  ``flips`` lists
    the flip moves ``(i, j, v)``: members[j] is members[i] with source v
    turned into a sink.
    """

    def __init__(self, graph, members, flips=()):
        self.graph = graph
        self.members = tuple(members)
        self.flips = tuple(flips)

    @property
    def canonical(self):
        return self.members[0]

    def __len__(self):
        return len(self.members)

    def __contains__(self, o):
        return o in self._member_set

    @property
    def _member_set(self):
        s = self.__dict__.get("_ms")
        if s is None:
            s = self.__dict__["_ms"] = frozenset(self.members)
        return s

    def __eq__(self, other):
        return isinstance(other, FlipClass) and self.graph == other.graph and self.canonical == other.canonical

    def __hash__(self):
        return hash((self.graph, self.canonical))

    def __repr__(self):
        return f"FlipClass(size={len(self)}, canonical={self.canonical!r})"


def _incident_edges(o, v):
    return o.graph.incident[v]


def flip_source(o, v):
    """Turn source ``v`` (label or index) into a sink."""
    if isinstance(v, str):
        v = o.graph.idx(v)
    if o.pred[v]:
        raise NotASource(f"{o.graph.vertices[v]} has incoming edges")
    return o.reverse_edges(_incident_edges(o, v))


def flip_sink(o, v):
    """Turn sink ``v`` into a source (inverse of :func:`flip_source`)."""
    if isinstance(v, str):
        v = o.graph.idx(v)
    if o.succ[v]:
        raise NotASource(f"{o.graph.vertices[v]} has outgoing edges, not a sink")
    return o.reverse_edges(_incident_edges(o, v))


_cache = {}
_cache_lock = threading.Lock()


def clear_cache():
    with _cache_lock:
        _cache.clear()


def _bfs(o):
    index = {o: 0}
    order = [o]
    moves = []
    queue = deque([o])
    while queue:
        cur = queue.popleft()
        for v in range(cur.graph.n):
            if not cur.graph.incident[v]:
                continue
            if cur.pred[v] == 0:
                nxt = flip_source(cur, v)
                src = True
            elif cur.succ[v] == 0:
                nxt = flip_sink(cur, v)
                src = False
            else:
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            if src:
                moves.append((cur, nxt, v))
    return order, moves


def flip_class(o, use_cache=True):
    """The flip class [o] of an acyclic orientation."""
    if o.has_ties or not is_acyclic(o):
        raise NotAcyclic("flip classes are defined for acyclic orientations")
    check_cap(o.graph.n)
    if use_cache:
        hit = _cache.get(o)
        if hit is not None:
            return hit
    found, moves = _bfs(o)
    members = sorted(found, key=lambda x: x.codes)
    pos = {m: k for k, m in enumerate(members)}
    flips = sorted((pos[a], pos[b], v) for a, b, v in moves)
    fc = FlipClass(o.graph, members, flips)
    if use_cache:
        with _cache_lock:
            for m in members:
                _cache.setdefault(m, fc)
    return fc


def torically_equivalent(o1, o2):
    if o1.graph != o2.graph:
        raise GraphMismatch("orientations live on different graphs")
    return flip_class(o1).canonical == flip_class(o2).canonical


def acyclic_orientations(g):
    """Every acyclic orientation of g, in lexicographic code order."""
    n, m = g.n, g.m
    edges = g.edges
    codes = [0] * m
    out = []

    def rec(k, reach):
        if k == m:
            out.append(Orientation(g, codes))
            return
        i, j = edges[k]
        for c, (a, b) in ((0, (i, j)), (1, (j, i))):
            if reach[b] >> a & 1:
                continue  # b already reaches a: a->b would close a cycle
            codes[k] = c
            add = reach[b] | (1 << b)
            new = list(reach)
            for v in range(n):
                if v == a or reach[v] >> a & 1:
                    new[v] |= add
            rec(k + 1, new)

    rec(0, [0] * n)
    return out


def all_flip_classes(g):
    check_cap(g.n)
    seen = set()
    classes = []
    for o in acyclic_orientations(g):
        if o in seen:
            continue
        fc = flip_class(o)
        seen.update(fc.members)
        classes.append(fc)
    return classes


def count_flip_classes(g):
    return len(all_flip_classes(g))


def preposet_flip_class(o):
    """Closure of a preposet under flipping source/sink strongly connected classes.

    A flip reverses every edge between one source (or sink) component of
    the condensation and the rest of the graph.
    """
    check_cap(o.graph.n)
    pi, dag = condensation(o)
    blk = pi.block_index(o.graph)
    members_of = [0] * len(pi)
    for v, b in enumerate(blk):
        members_of[b] |= 1 << v
    cross = []
    for b in range(len(pi)):
        cross.append([k for k, (i, j) in enumerate(o.graph.edges) if (blk[i] == b) != (blk[j] == b)])

    def movable(cur):
        out = []
        for b in range(len(pi)):
            if not cross[b]:
                continue
            inside = members_of[b]
            into = any(cur.pred[v] & ~inside for v in bits(inside))
            outof = any(cur.succ[v] & ~inside for v in bits(inside))
            if not into or not outof:
                out.append(b)
        return out

    seen = {o}
    queue = deque([o])
    while queue:
        cur = queue.popleft()
        for b in movable(cur):
            nxt = cur.reverse_edges(cross[b])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda x: x.codes)
