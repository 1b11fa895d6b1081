"""Exact rational points on the torus and the chamber-level cross-check.

Coordinates are Fractions throughout; ties between coordinates are what
produce preposets, so floating point is never used.
"""

from fractions import Fraction
from itertools import permutations, product

from .config import check_cap
from .errors import MissingCoordinate, NotAcyclic, NotAPermutation, ReconciliationFailure, ValidationError
from .flipclass import all_flip_classes, flip_class
from .graph import BACKWARD, BOTH, FORWARD, Orientation, SetPartition, is_acyclic


def _frac(x):
    try:
        return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())
    except (ValueError, ZeroDivisionError, TypeError):
        raise ValidationError(f"not a rational number: {x!r}") from None


class TorusPoint:
    """A point of R^V / Z^V; every coordinate is reduced into [0, 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = {str(k): _frac(v) % 1 for k, v in dict(coords).items()}

    @classmethod
    def from_json(cls, data):
        return cls(data["coords"])

    def to_json(self):
        return {"coords": {k: str(v) for k, v in self.coords.items()}}

    def __getitem__(self, v):
        return self.coords[str(v)]

    def __eq__(self, other):
        return isinstance(other, TorusPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))

    def __repr__(self):
        return "TorusPoint(" + ", ".join(f"{k}={v}" for k, v in self.coords.items()) + ")"


def alpha(g, p):
    """Preposet of a point: i -> j when x_i < x_j, both directions on ties."""
    coords = p.coords if isinstance(p, TorusPoint) else TorusPoint(p).coords
    missing = [v for v in g.vertices if v not in coords]
    if missing:
        raise MissingCoordinate(f"no coordinate for {missing}")
    x = [coords[v] for v in g.vertices]
    codes = []
    for i, j in g.edges:
        if x[i] < x[j]:
            codes.append(FORWARD)
        elif x[i] > x[j]:
            codes.append(BACKWARD)
        else:
            codes.append(BOTH)
    return Orientation(g, codes)


def point_of_extension(w, V):
    """The k-th entry of w gets coordinate k/(n+1)."""
    w = [str(v) for v in w]
    V = [str(v) for v in V]
    if len(w) != len(V) or set(w) != set(V) or len(set(w)) != len(w):
        raise NotAPermutation(f"{w} is not a permutation of {V}")
    n = len(w)
    return TorusPoint({v: Fraction(k, n + 1) for k, v in enumerate(w, start=1)})


def in_order_polytope(o, x):
    """x in [0,1]^V with x_i <= x_j whenever i precedes j in the poset of o.

    ``x`` is read in the unit cube as given (1 stays 1), so characteristic
    vectors of filters can be tested.
    """
    if o.has_ties or not is_acyclic(o):
        raise NotAcyclic("order polytopes belong to acyclic orientations")
    g = o.graph
    if isinstance(x, TorusPoint):
        vals = [x.coords.get(v) for v in g.vertices]
    elif isinstance(x, dict):
        vals = [None if x.get(v) is None else _frac(x[v]) for v in g.vertices]
    else:
        vals = [_frac(t) for t in x]
        if len(vals) != g.n:
            raise ValidationError("point has the wrong dimension")
    if any(v is None for v in vals):
        raise MissingCoordinate("point lacks a coordinate")
    if any(v < 0 or v > 1 for v in vals):
        return False
    reach = o.reach
    for i in range(g.n):
        r = reach[i]
        j = 0
        while r:
            if r & 1 and vals[i] > vals[j]:
                return False
            r >>= 1
            j += 1
    return True


def in_closed_chamber(members, p):
    """x lies in the closed toric chamber of a flip class: read in [0, 1),
    it satisfies x_i <= x_j on every arc i -> j of some member."""
    for o in members:
        x = [p[v] for v in o.graph.vertices]
        if all(x[a] <= x[b] for a, b in _arc_indices(o)):
            return True
    return False


def _arc_indices(o):
    return [(o.graph.idx(a), o.graph.idx(b)) for a, b in o.arcs]


def _weak_orders(r):
    """Every ordered set partition of range(r), as a level number per item."""
    if r == 0:
        yield ()
        return
    for levels in product(range(r), repeat=r):
        used = set(levels)
        if used == set(range(len(used))):
            yield levels


def sampled_toric_closure(members, pi):
    """cl^tor read off sample points: blocks of pi stay merged exactly when
    their coordinates agree on every sampled point of D_pi in the closed chamber.

    One point per weak ordering of the blocks of pi reaches the relative
    interior of every piece, so the finite sample is exact.
    """
    blocks = pi.blocks
    r = len(blocks)
    together = None
    for levels in _weak_orders(r):
        top = max(levels, default=0) + 1
        p = TorusPoint({v: Fraction(levels[k], top + 1) for k, b in enumerate(blocks) for v in b})
        if not in_closed_chamber(members, p):
            continue
        same = {(a, b) for a in range(r) for b in range(r) if levels[a] == levels[b]}
        together = same if together is None else together & same
    groups = {}
    for a in range(r):
        root = min(b for b in range(r) if (a, b) in together)
        groups.setdefault(root, []).extend(blocks[a])
    return SetPartition(groups.values())


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def reconcile_chamber_bijection(g):
    """Check that sample points group into chambers exactly as flip classes predict.

    One sample point per ordering of V.  Two points are joined when one
    ordering is a rotation of the other (a diagonal translation on the
    torus) or differs by swapping adjacent entries that are not joined by
    an edge (crossing a non-hyperplane).  These geometric cells must be the
    flip classes of the alpha-images, and there must be as many as there
    are flip classes.
    """
    check_cap(g.n)
    V = g.vertices
    perms = list(permutations(V))
    dsu = _DSU(perms)
    for w in perms:
        if len(w) > 1:
            dsu.union(w, w[1:] + w[:1])
        for k in range(len(w) - 1):
            if not g.has_edge(w[k], w[k + 1]):
                dsu.union(w, w[:k] + (w[k + 1], w[k]) + w[k + 2 :])
    image = {}
    canon = {}
    for w in perms:
        o = alpha(g, point_of_extension(w, V))
        if o.has_ties or not is_acyclic(o):
            raise ReconciliationFailure("sample point is not in an open chamber", [w])
        image[w] = o
        canon[w] = flip_class(o).canonical
    cells = {}
    for w in perms:
        cells.setdefault(dsu.find(w), []).append(w)
    by_class = {}
    for root, ws in cells.items():
        keys = {canon[w] for w in ws}
        if len(keys) != 1:
            a = ws[0]
            b = next(w for w in ws if canon[w] != canon[a])
            raise ReconciliationFailure("one geometric cell meets two flip classes", [a, b])
        key = keys.pop()
        if key in by_class:
            raise ReconciliationFailure("one flip class is split across cells", [by_class[key][0], ws[0]])
        by_class[key] = ws
    classes = all_flip_classes(g)
    if len(by_class) != len(classes):
        raise ReconciliationFailure(f"{len(by_class)} cells but {len(classes)} flip classes")
    sizes = [len({image[w] for w in by_class[fc.canonical]}) for fc in classes]
    for fc, size in zip(classes, sizes):
        if size != len(fc):
            raise ReconciliationFailure(f"cell of {fc.canonical!r} reaches {size} of {len(fc)} orientations")
    return {
        "points": len(perms),
        "cells": len(by_class),
        "flip_classes": len(classes),
        "cell_sizes": sizes,
        "ok": True,
    }


__all__ = [
    "TorusPoint",
    "alpha",
    "point_of_extension",
    "in_order_polytope",
    "reconcile_chamber_bijection",
    "in_closed_chamber",
    "sampled_toric_closure",
]
