"""Coxeter elements as acyclic orientations of the Coxeter graph.

Conjugacy of Coxeter elements is decided by toric equivalence of their
orientations; no group arithmetic is done.
"""

import math

from .config import check_cap
from .errors import NotAPermutation, UnknownVertex, ValidationError
from .filters import toric_filters
from .flipclass import flip_class, torically_equivalent
from .graph import Graph, Orientation, sort_labels
from .poset import linear_extensions, poset_from_orientation


def _bond_value(m):
    if isinstance(m, str) and m.strip().lower() in ("inf", "infinity", "oo", "∞"):
        return math.inf
    if m == math.inf:
        return math.inf
    try:
        m = int(m)
    except (TypeError, ValueError):
        raise ValidationError(f"bad bond label {m!r}") from None
    if m < 2:
        raise ValidationError(f"bond labels are at least 2, got {m}")
    return m


class CoxeterSystem:
    """Generators with bond labels m(s, t); unlisted pairs commute (m = 2)."""

    def __init__(self, generators, bonds=()):
        gens = [str(s) for s in generators]
        if len(set(gens)) != len(gens):
            raise ValidationError("repeated generator")
        self.generators = sort_labels(gens)
        self.bonds = {}
        for a, b, m in bonds:
            a, b = str(a), str(b)
            for s in (a, b):
                if s not in self.generators:
                    raise UnknownVertex(f"unknown generator {s!r}")
            if a == b:
                raise ValidationError("a generator has no bond with itself")
            key = tuple(sort_labels((a, b)))
            m = _bond_value(m)
            if self.bonds.get(key, m) != m:
                raise ValidationError(f"conflicting bond labels for {key}")
            self.bonds[key] = m
        self.graph = Graph(self.generators, [k for k, m in self.bonds.items() if m >= 3])

    @classmethod
    def affine_a(cls, n, prefix="s"):
        """Ã_{n-1}: generators s1..sn bonded in a cycle (the Coxeter graph is C_n)."""
        gens = [f"{prefix}{k}" for k in range(1, n + 1)]
        return cls(gens, [(gens[k], gens[(k + 1) % n], 3) for k in range(n)] if n > 2 else [])

    @classmethod
    def from_json(cls, data):
        return cls(data["generators"], [tuple(b) for b in data.get("bonds", [])])

    def m(self, a, b):
        if a == b:
            return 1
        return self.bonds.get(tuple(sort_labels((str(a), str(b)))), 2)

    def to_json(self):
        def enc(m):
            return "inf" if m == math.inf else m

        return {"generators": list(self.generators), "bonds": [[a, b, enc(m)] for (a, b), m in sorted(self.bonds.items())]}

    def parse_word(self, text):
        if isinstance(text, str):
            text = [x.strip() for x in text.split(",") if x.strip()]
        word = [str(x) for x in text]
        if sorted(word) != sorted(self.generators):
            raise NotAPermutation(f"a Coxeter element uses every generator once: {word}")
        return tuple(word)


def orientation_of(cs, word):
    """Orient s -> t on each Coxeter-graph edge when s comes first in the word."""
    return Orientation.from_order(cs.graph, cs.parse_word(word))


def coxeter_conjugate(cs, c1, c2):
    return torically_equivalent(orientation_of(cs, c1), orientation_of(cs, c2))


def conjugacy_class_elements(cs, c):
    """One entry per conjugate: its orientation and all its reduced words."""
    check_cap(len(cs.generators))
    fc = flip_class(orientation_of(cs, c))
    return [(o, linear_extensions(poset_from_orientation(o))) for o in fc.members]


def initial_segments(cs, c):
    """Subsets of generators that begin some reduced word of some conjugate."""
    return toric_filters(orientation_of(cs, c))


def word_str(word):
    return "".join(word)


__all__ = [
    "CoxeterSystem",
    "orientation_of",
    "coxeter_conjugate",
    "conjugacy_class_elements",
    "initial_segments",
    "word_str",
]
