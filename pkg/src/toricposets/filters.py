"""Toric filters (equivalently toric order ideals) and the poset J_tor they form."""

from itertools import combinations

from .config import check_cap
from .errors import ConsistencyError, NotAFilter
from .flipclass import flip_source
from .graph import bits
from .poset import ideal_masks
from .toric import ToricPoset


class FilterPoset:
    """A family of vertex sets ordered by inclusion, ranked by size."""

    def __init__(self, ground, elements):
        self.ground = tuple(ground)
        pos = {v: k for k, v in enumerate(self.ground)}
        self._key = lambda s: (len(s), sorted(pos[x] for x in s))
        self.elements = sorted({frozenset(e) for e in elements}, key=self._key)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, s):
        return frozenset(s) in set(self.elements)

    def rank(self, s):
        return len(s)

    @property
    def covers(self):
        """Pairs (a, b) with a < b and nothing strictly between."""
        els = self.elements
        out = []
        for b in els:
            below = [a for a in els if a < b]
            for a in below:
                if not any(a < c < b for c in below):
                    out.append((a, b))
        out.sort(key=lambda ab: (self._key(ab[0]), self._key(ab[1])))
        return out

    def is_graded(self):
        """Contains ∅ and the ground set, and every cover adds exactly one element."""
        els = set(self.elements)
        if frozenset() not in els or frozenset(self.ground) not in els:
            return False
        return all(len(b) == len(a) + 1 for a, b in self.covers)

    def lattice_failures(self):
        """Pairs lacking a unique least upper bound or greatest lower bound."""
        els = self.elements
        out = []
        for a, b in combinations(els, 2):
            ups = [c for c in els if a <= c and b <= c]
            mins = [c for c in ups if not any(d < c for d in ups)]
            if len(mins) != 1:
                out.append({"kind": "join", "pair": (a, b), "bounds": mins})
            downs = [c for c in els if c <= a and c <= b]
            maxs = [c for c in downs if not any(c < d for d in downs)]
            if len(maxs) != 1:
                out.append({"kind": "meet", "pair": (a, b), "bounds": maxs})
        return out

    def is_lattice(self):
        return not self.lattice_failures()

    def relabel(self, mapping):
        return FilterPoset([mapping[v] for v in self.ground], [{mapping[x] for x in e} for e in self.elements])

    def to_json(self):
        order = {v: k for k, v in enumerate(self.ground)}

        def enc(s):
            return sorted(s, key=order.__getitem__)

        fails = self.lattice_failures()
        return {
            "ground": list(self.ground),
            "elements": [enc(e) for e in self.elements],
            "covers": [[enc(a), enc(b)] for a, b in self.covers],
            "is_graded": self.is_graded(),
            "is_lattice": not fails,
            "failures": [
                {"kind": f["kind"], "pair": [enc(x) for x in f["pair"]], "bounds": [enc(x) for x in f["bounds"]]}
                for f in fails
            ],
        }


def _toric(P):
    return P if isinstance(P, ToricPoset) else ToricPoset(P)


def _consecutive_masks(word_idx):
    """Bitmasks of every cyclically consecutive block of a word, plus ∅ and everything."""
    n = len(word_idx)
    out = {0}
    for start in range(n):
        m = 0
        for length in range(n):
            m |= 1 << word_idx[(start + length) % n]
            out.add(m)
    return out


def _member_ideal_sets(P):
    seen = set()
    for poset in P.member_posets:
        seen.update(ideal_masks(poset))
    return seen


def _extension_segment_sets(P):
    idx = P.graph.index
    seen = set()
    for w in P.extensions:
        seen |= _consecutive_masks([idx[v] for v in w])
    return seen


def is_toric_filter(P, I):
    """I is an ideal (equivalently a filter, up to complement) of some member.

    Also checked against consecutiveness in the total toric extensions.
    """
    P = _toric(P)
    m = P.mask(I)
    by_members = any(all(poset.down[v] & ~m == 0 for v in bits(m)) for poset in P.member_posets)
    idx = P.graph.index
    by_words = any(m in _consecutive_masks([idx[v] for v in w]) for w in P.extensions)
    if by_members != by_words:
        raise ConsistencyError(f"toric filter tests disagree on {sorted(I)}")
    return by_members


def toric_filters(P):
    """J_tor(P) built from member ideals; the segment route must agree."""
    P = _toric(P)
    check_cap(P.graph.n)
    masks = _member_ideal_sets(P)
    if masks != _extension_segment_sets(P):
        raise ConsistencyError("member ideals and cyclic segments give different filter sets")
    fp = FilterPoset(P.vertices, [P.graph.labels_of(m) for m in masks])
    if not fp.is_graded():
        raise ConsistencyError("J_tor is not graded")
    return fp


def toric_filters_via_extensions(P):
    P = _toric(P)
    return FilterPoset(P.vertices, [P.graph.labels_of(m) for m in _extension_segment_sets(P)])


def characteristic_vector(I, V):
    I = {str(x) for x in I}
    return tuple(1 if v in I else 0 for v in V)


def filter_cover_witness(P, J):
    """(v, member) with v in J and J - {v} an ideal of ``member``.

    Take a member in which J is an ideal, a minimal element v of J there,
    and flip v from a source into a sink.
    """
    P = _toric(P)
    m = P.mask(J)
    if m == 0:
        raise NotAFilter("the empty set covers nothing")
    for o, poset in zip(P.members, P.member_posets):
        if any(poset.down[v] & ~m for v in bits(m)):
            continue
        v = next(v for v in bits(m) if poset.down[v] == 0)
        flipped = flip_source(o, v)
        rest = m & ~(1 << v)
        r = flipped.reach
        pred = [0] * P.graph.n
        for a in range(P.graph.n):
            for b in bits(r[a]):
                pred[b] |= 1 << a
        if any(pred[u] & ~rest for u in bits(rest)):
            raise ConsistencyError("flipped member does not carry J - {v} as an ideal")
        return P.vertices[v], flipped
    raise NotAFilter(f"{sorted(J)} is not a toric filter")


__all__ = [
    "FilterPoset",
    "is_toric_filter",
    "toric_filters",
    "toric_filters_via_extensions",
    "characteristic_vector",
    "filter_cover_witness",
]
