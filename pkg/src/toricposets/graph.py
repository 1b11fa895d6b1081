"""Graphs, orientations and set partitions.

Vertex labels are opaque strings.  Internally every algorithm works on the
index of a label in the canonical vertex order (labels sorted with
:func:`label_key`, so ``"10"`` sorts after ``"9"``).  Edges are stored as
index pairs ``(i, j)`` with ``i < j`` and orientations as one direction code
per edge, in sorted-edge order.
"""

import re
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import UnknownVertex, ValidationError

FORWARD, BACKWARD, BOTH = 0, 1, 2

_DIGITS = re.compile(r"(\d+)")


@lru_cache(maxsize=4096)
def _label_key(label):
    return tuple(int(t) if t.isdigit() else t for t in _DIGITS.split(label))


def label_key(label):
    """Sort key that compares digit runs numerically."""
    return _label_key(str(label))


def sort_labels(labels):
    return tuple(sorted(labels, key=label_key))


def bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


class Graph:
    """Finite simple undirected graph."""

    def __init__(self, vertices, edges=()):
        labels = [str(v) for v in vertices]
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate vertex labels")
        self.vertices = sort_labels(labels)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        pairs = set()
        for e in edges:
            a, b = (str(x) for x in e)
            if a not in self.index or b not in self.index:
                raise UnknownVertex(f"edge {a}-{b} uses an undeclared vertex")
            if a == b:
                raise ValidationError(f"self-loop at {a}")
            i, j = sorted((self.index[a], self.index[b]))
            if (i, j) in pairs:
                raise ValidationError(f"duplicate edge {a}-{b}")
            pairs.add((i, j))
        self.edges = tuple(sorted(pairs))
        self.edge_id = {e: k for k, e in enumerate(self.edges)}

    # constructors -------------------------------------------------------

    @classmethod
    def complete(cls, n, labels=None):
        labels = labels or [str(i) for i in range(1, n + 1)]
        return cls(labels, combinations(labels, 2))

    @classmethod
    def cycle(cls, n, labels=None):
        labels = labels or [str(i) for i in range(1, n + 1)]
        if n < 3:
            raise ValidationError("a cycle needs at least 3 vertices")
        return cls(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])

    @classmethod
    def path(cls, n, labels=None):
        labels = labels or [str(i) for i in range(1, n + 1)]
        return cls(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])

    @classmethod
    def edgeless(cls, n, labels=None):
        labels = labels or [str(i) for i in range(1, n + 1)]
        return cls(labels)

    # basic queries ------------------------------------------------------

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    @property
    def edge_labels(self):
        V = self.vertices
        return tuple((V[i], V[j]) for i, j in self.edges)

    def idx(self, label):
        try:
            return self.index[str(label)]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def mask(self, labels):
        m = 0
        for v in labels:
            m |= 1 << self.idx(v)
        return m

    def labels_of(self, mask):
        return frozenset(self.vertices[i] for i in bits(mask))

    def has_edge(self, a, b):
        i, j = sorted((self.idx(a), self.idx(b)))
        return (i, j) in self.edge_id

    @cached_property
    def adjacency(self):
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @cached_property
    def incident(self):
        inc = [[] for _ in range(self.n)]
        for k, (i, j) in enumerate(self.edges):
            inc[i].append(k)
            inc[j].append(k)
        return tuple(tuple(x) for x in inc)

    def components(self, within=None):
        """Connected components (as bitmasks) of the subgraph induced on ``within``."""
        remaining = ((1 << self.n) - 1) if within is None else within
        adj = self.adjacency
        comps = []
        while remaining:
            low = remaining & -remaining
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def with_edges(self, extra):
        return Graph(self.vertices, list(self.edge_labels) + list(extra))

    def without_edges(self, removed):
        drop = {tuple(sorted((self.idx(a), self.idx(b)))) for a, b in removed}
        return Graph(self.vertices, [e for e, p in zip(self.edge_labels, self.edges) if p not in drop])

    def to_json(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_labels]}

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = " ".join(f"{a}{b}" if len(a) == len(b) == 1 else f"{a}-{b}" for a, b in self.edge_labels)
        return f"Graph(V={list(self.vertices)}, E=[{es}])"


class Orientation:
    """Direction code per edge of ``graph``: FORWARD, BACKWARD or BOTH.

    FORWARD means min-label -> max-label.  Orientations with BOTH edges
    stand for preposets over the graph.
    """

    __slots__ = ("graph", "codes", "__dict__")

    def __init__(self, graph, codes):
        codes = tuple(codes)
        if len(codes) != graph.m:
            raise ValidationError(f"expected {graph.m} direction codes, got {len(codes)}")
        if any(c not in (FORWARD, BACKWARD, BOTH) for c in codes):
            raise ValidationError("direction codes must be 0, 1 or 2")
        self.graph = graph
        self.codes = codes

    @classmethod
    def from_arcs(cls, graph, arcs, ties=()):
        codes = [None] * graph.m
        for tail, head in arcs:
            i, j = graph.idx(tail), graph.idx(head)
            k = graph.edge_id.get((min(i, j), max(i, j)))
            if k is None:
                raise ValidationError(f"arc {tail}->{head} is not an edge of the graph")
            c = FORWARD if i < j else BACKWARD
            if codes[k] is not None and codes[k] != c:
                codes[k] = BOTH
            else:
                codes[k] = c
        for a, b in ties:
            i, j = sorted((graph.idx(a), graph.idx(b)))
            k = graph.edge_id.get((i, j))
            if k is None:
                raise ValidationError(f"tie {a}-{b} is not an edge of the graph")
            codes[k] = BOTH
        missing = [graph.edge_labels[k] for k, c in enumerate(codes) if c is None]
        if missing:
            raise ValidationError(f"edges without a direction: {missing}")
        return cls(graph, codes)

    @classmethod
    def from_order(cls, graph, order):
        """Orient each edge from the earlier to the later vertex of ``order``."""
        pos = {graph.idx(v): p for p, v in enumerate(order)}
        if len(pos) != graph.n:
            raise ValidationError("order must list every vertex exactly once")
        return cls(graph, [FORWARD if pos[i] < pos[j] else BACKWARD for i, j in graph.edges])

    @classmethod
    def from_relation(cls, graph, less):
        """Orient edges by a strict order given as a set of label pairs."""
        codes = []
        for a, b in graph.edge_labels:
            if (a, b) in less:
                codes.append(FORWARD)
            elif (b, a) in less:
                codes.append(BACKWARD)
            else:
                raise ValidationError(f"edge {a}-{b} is not comparable in the relation")
        return cls(graph, codes)

    # structure ------------------------------------------------------------

    @cached_property
    def succ(self):
        s = [0] * self.graph.n
        for (i, j), c in zip(self.graph.edges, self.codes):
            if c != BACKWARD:
                s[i] |= 1 << j
            if c != FORWARD:
                s[j] |= 1 << i
        return tuple(s)

    @cached_property
    def pred(self):
        p = [0] * self.graph.n
        for v, s in enumerate(self.succ):
            for w in bits(s):
                p[w] |= 1 << v
        return tuple(p)

    @cached_property
    def reach(self):
        """reach[v]: bitmask of vertices reachable from v by a nonempty path."""
        r = list(self.succ)
        n = self.graph.n
        for k in range(n):
            kb = 1 << k
            rk = r[k]
            for i in range(n):
                if r[i] & kb:
                    r[i] |= rk
        return tuple(r)

    @property
    def arcs(self):
        V = self.graph.vertices
        out = []
        for (i, j), c in zip(self.graph.edges, self.codes):
            if c == FORWARD:
                out.append((V[i], V[j]))
            elif c == BACKWARD:
                out.append((V[j], V[i]))
        return out

    @property
    def ties(self):
        V = self.graph.vertices
        return [(V[i], V[j]) for (i, j), c in zip(self.graph.edges, self.codes) if c == BOTH]

    @property
    def has_ties(self):
        return BOTH in self.codes

    def is_source(self, v):
        return self.pred[v] == 0

    def is_sink(self, v):
        return self.succ[v] == 0

    def sources(self):
        return [v for v in range(self.graph.n) if self.pred[v] == 0]

    def sinks(self):
        return [v for v in range(self.graph.n) if self.succ[v] == 0]

    def reverse_edges(self, edge_ids):
        codes = list(self.codes)
        for k in edge_ids:
            if codes[k] != BOTH:
                codes[k] = 1 - codes[k]
        return Orientation(self.graph, codes)

    def restricted(self, subgraph):
        """Same directions on a spanning subgraph."""
        g = self.graph
        if subgraph.vertices != g.vertices:
            raise ValidationError("restriction needs the same vertex set")
        return Orientation(subgraph, [self.codes[g.edge_id[e]] for e in subgraph.edges])

    def to_json(self):
        d = self.graph.to_json()
        d["arcs"] = [list(a) for a in self.arcs]
        t = self.ties
        if t:
            d["ties"] = [list(x) for x in t]
        return d

    def __eq__(self, other):
        return isinstance(other, Orientation) and self.codes == other.codes and self.graph == other.graph

    def __hash__(self):
        return hash((self.graph, self.codes))

    def __lt__(self, other):
        return self.codes < other.codes

    def __repr__(self):
        parts = [f"{a}->{b}" for a, b in self.arcs] + [f"{a}<->{b}" for a, b in self.ties]
        return f"Orientation({', '.join(parts)})"


class SetPartition:
    """Partition of a finite label set into nonempty blocks.

    Canonical form: labels sorted within blocks, blocks sorted by their
    minimal element.
    """

    __slots__ = ("blocks", "_block_of")

    def __init__(self, blocks):
        canon = []
        seen = set()
        for b in blocks:
            b = sort_labels(str(x) for x in b)
            if not b:
                raise ValidationError("partition blocks must be nonempty")
            for x in b:
                if x in seen:
                    raise ValidationError(f"label {x} appears in two blocks")
                seen.add(x)
            canon.append(b)
        canon.sort(key=lambda b: label_key(b[0]))
        self.blocks = tuple(canon)
        self._block_of = {x: k for k, b in enumerate(self.blocks) for x in b}

    @classmethod
    def singletons(cls, labels):
        return cls([v] for v in labels)

    @classmethod
    def single_block(cls, labels):
        return cls([list(labels)])

    @classmethod
    def collapsing(cls, subset, labels):
        """The partition with ``subset`` as one block and singletons elsewhere."""
        subset = {str(x) for x in subset}
        if not subset:
            raise ValidationError("cannot collapse the empty set")
        labels = [str(v) for v in labels]
        if not subset <= set(labels):
            raise UnknownVertex(f"{sorted(subset - set(labels))} not in the ground set")
        return cls([sorted(subset)] + [[v] for v in labels if v not in subset])

    @classmethod
    def parse(cls, text):
        """Parse ``"1,2|3|4,5"``, or the compact ``"12/3/45"`` for one-character labels."""
        text = text.strip()
        if "|" in text or "," in text:
            return cls([x.strip() for x in blk.split(",") if x.strip()] for blk in text.split("|"))
        return cls(list(blk) for blk in text.split("/"))

    @property
    def ground(self):
        return sort_labels(self._block_of)

    def block_of(self, label):
        return self._block_of[str(label)]

    def block_index(self, graph):
        """Block number of each vertex index of ``graph``."""
        if set(self._block_of) != set(graph.vertices):
            raise ValidationError("partition ground set differs from the graph's vertex set")
        return [self._block_of[v] for v in graph.vertices]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __str__(self):
        if all(len(x) == 1 for b in self.blocks for x in b):
            return "/".join("".join(b) for b in self.blocks)
        return "|".join(",".join(b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({self})"

    def _check_ground(self, other):
        if set(self._block_of) != set(other._block_of):
            raise ValidationError("partitions over different ground sets")

    def leq(self, other):
        """True if every block of self lies inside a block of other (self is finer)."""
        self._check_ground(other)
        return all(len({other._block_of[x] for x in b}) == 1 for b in self.blocks)

    def join(self, other):
        self._check_ground(other)
        parent = {x: x for x in self._block_of}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (self, other):
            for b in p.blocks:
                r = find(b[0])
                for x in b[1:]:
                    parent[find(x)] = r
        groups = {}
        for x in self._block_of:
            groups.setdefault(find(x), []).append(x)
        return SetPartition(groups.values())

    def meet(self, other):
        self._check_ground(other)
        groups = {}
        for x in self._block_of:
            groups.setdefault((self._block_of[x], other._block_of[x]), []).append(x)
        return SetPartition(groups.values())


def partition_leq(p, q):
    return p.leq(q)


def partition_join(p, q):
    return p.join(q)


def partition_meet(p, q):
    return p.meet(q)


def restricted_growth_strings(n):
    """All restricted growth strings of length n (one per set partition)."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)


def all_partitions(labels):
    labels = sort_labels(str(v) for v in labels)
    for rgs in restricted_growth_strings(len(labels)):
        groups = {}
        for x, b in zip(labels, rgs):
            groups.setdefault(b, []).append(x)
        yield SetPartition(groups.values())


# elementary algorithms --------------------------------------------------------


def is_acyclic(o):
    """No directed cycle, counting each BOTH edge as a 2-cycle."""
    r = o.reach
    return not any(r[v] >> v & 1 for v in range(o.graph.n))


def scc_masks(o):
    r = o.reach
    n = o.graph.n
    seen = 0
    comps = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        for w in bits(r[v]):
            if r[w] >> v & 1:
                comp |= 1 << w
        comps.append(comp)
        seen |= comp
    return comps


def strongly_connected_components(o):
    return SetPartition(o.graph.labels_of(c) for c in scc_masks(o))


def _block_names(pi, naming):
    if naming == "index":
        return [f"B{k + 1}" for k in range(len(pi))]
    if naming == "min":
        return [b[0] for b in pi.blocks]
    raise ValueError(f"unknown block naming {naming!r}")


def contract_graph(g, pi, naming="index"):
    """G/~pi: blocks become vertices; loops and multi-edges dropped."""
    blk = pi.block_index(g)
    names = _block_names(pi, naming)
    edges = {tuple(sorted((blk[i], blk[j]))) for i, j in g.edges if blk[i] != blk[j]}
    return Graph(names, [(names[a], names[b]) for a, b in sorted(edges)])


def make_cliques(g, pi):
    """G'_pi: every block of pi made into a clique."""
    extra = [e for b in pi.blocks for e in combinations(b, 2) if not g.has_edge(*e)]
    return g.with_edges(extra)


def quotient_arcs(o, blk):
    """Set of block arcs (a, b), a != b, of the collapsed directed graph."""
    arcs = set()
    for (i, j), c in zip(o.graph.edges, o.codes):
        a, b = blk[i], blk[j]
        if a == b:
            continue
        if c != BACKWARD:
            arcs.add((a, b))
        if c != FORWARD:
            arcs.add((b, a))
    return arcs


def quotient(o, pi, naming="index"):
    """Collapse each block of pi to a vertex: the directed graph o/~pi.

    Returned as an orientation of ``contract_graph(o.graph, pi)``; block pairs
    joined by arcs in both directions come out as BOTH.  Use
    :func:`is_acyclic` on the result to test compatibility.
    """
    blk = pi.block_index(o.graph)
    names = _block_names(pi, naming)
    q = contract_graph(o.graph, pi, naming)
    arcs = quotient_arcs(o, blk)
    return Orientation.from_arcs(q, [(names[a], names[b]) for a, b in sorted(arcs)])


def quotient_is_acyclic(o, blk, r):
    """Acyclicity of o/~pi given the block map and block count, without building graphs."""
    succ = [0] * r
    for a, b in quotient_arcs(o, blk):
        succ[a] |= 1 << b
    reach = list(succ)
    for k in range(r):
        kb = 1 << k
        for i in range(r):
            if reach[i] & kb:
                reach[i] |= reach[k]
    return not any(reach[v] >> v & 1 for v in range(r))


class Dag:
    """Acyclic directed graph on arbitrary hashable nodes."""

    def __init__(self, nodes, arcs):
        self.nodes = tuple(nodes)
        self.arcs = frozenset(arcs)
        order = self.topological_order()
        if order is None:
            raise ValidationError("arcs contain a directed cycle")

    def topological_order(self):
        indeg = {v: 0 for v in self.nodes}
        out = {v: [] for v in self.nodes}
        for a, b in self.arcs:
            indeg[b] += 1
            out[a].append(b)
        ready = [v for v in self.nodes if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return order if len(order) == len(self.nodes) else None

    def sources(self):
        heads = {b for _, b in self.arcs}
        return [v for v in self.nodes if v not in heads]

    def sinks(self):
        tails = {a for a, _ in self.arcs}
        return [v for v in self.nodes if v not in tails]


def condensation(o):
    """SCC partition of o together with the acyclic block digraph."""
    pi = strongly_connected_components(o)
    blk = pi.block_index(o.graph)
    return pi, Dag(range(len(pi)), quotient_arcs(o, blk))


# Tutte evaluation ----------------------------------------------------------------


def _relabel(edges):
    """Compact, order-normalised multigraph key for memoisation."""
    names = {}
    out = []
    for a, b in sorted(edges):
        a = names.setdefault(a, len(names))
        b = names.setdefault(b, len(names))
        out.append((a, b) if a <= b else (b, a))
    return tuple(sorted(out))


def _connected_without(edges, skip, a, b):
    adj = {}
    for k, (x, y) in enumerate(edges):
        if k == skip:
            continue
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    stack, seen = [a], {a}
    while stack:
        v = stack.pop()
        if v == b:
            return True
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


@lru_cache(maxsize=None)
def _t10(edges):
    if not edges:
        return 1
    if any(a == b for a, b in edges):
        return 0  # loop: factor y = 0
    a, b = edges[0]
    rest = edges[1:]
    contracted = _relabel((a if x == b else x, a if y == b else y) for x, y in rest)
    if not _connected_without(edges, 0, a, b):
        return _t10(contracted)  # bridge: factor x = 1
    return _t10(_relabel(rest)) + _t10(contracted)


def tutte_10(g):
    """T_G(1, 0) by memoised deletion-contraction on multigraphs."""
    return _t10(_relabel(g.edges))
