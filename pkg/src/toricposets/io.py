"""JSON readers/writers and DOT renderers used by the CLI."""

import json
import sys

from .coxeter import CoxeterSystem
from .errors import ValidationError
from .geom import TorusPoint
from .graph import Graph, Orientation, SetPartition, label_key


def read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValidationError(f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _pairs(data, key):
    raw = data.get(key, [])
    if not isinstance(raw, list) or not all(isinstance(p, (list, tuple)) and len(p) == 2 for p in raw):
        raise ValidationError(f"{key!r} must be a list of pairs")
    return [(str(a), str(b)) for a, b in raw]


def graph_from_json(data):
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValidationError("graph JSON needs a 'vertices' list")
    if not isinstance(data["vertices"], list):
        raise ValidationError("'vertices' must be a list")
    return Graph([str(v) for v in data["vertices"]], _pairs(data, "edges"))


def orientation_from_json(data, graph=None):
    """Orientation JSON; the graph comes from the same object unless given."""
    if not isinstance(data, dict):
        raise ValidationError("orientation JSON must be an object")
    if graph is None or "vertices" in data:
        graph = graph_from_json(data)
    return Orientation.from_arcs(graph, _pairs(data, "arcs"), _pairs(data, "ties"))


def partition_from_arg(text):
    if isinstance(text, list):
        return SetPartition(text)
    return SetPartition.parse(text)


def coxeter_from_json(data):
    if not isinstance(data, dict) or "generators" not in data:
        raise ValidationError("Coxeter JSON needs 'generators'")
    bonds = data.get("bonds", [])
    if not all(isinstance(b, list) and len(b) == 3 for b in bonds):
        raise ValidationError("each bond is [s, t, m]")
    return CoxeterSystem.from_json(data)


def point_from_json(data):
    if not isinstance(data, dict) or not isinstance(data.get("coords"), dict):
        raise ValidationError("point JSON needs a 'coords' object")
    return TorusPoint.from_json(data)


def sorted_set(s):
    return sorted(s, key=label_key)


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


# DOT ---------------------------------------------------------------------------------


def _q(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def graph_dot(g, name="G"):
    lines = [f"graph {_q(name)} {{"]
    lines += [f"  {_q(v)};" for v in g.vertices]
    lines += [f"  {_q(a)} -- {_q(b)};" for a, b in g.edge_labels]
    lines.append("}")
    return "\n".join(lines)


def orientation_dot(o, name="G"):
    lines = [f"digraph {_q(name)} {{"]
    lines += [f"  {_q(v)};" for v in o.graph.vertices]
    lines += [f"  {_q(a)} -> {_q(b)};" for a, b in o.arcs]
    lines += [f"  {_q(a)} -> {_q(b)} [dir=both];" for a, b in o.ties]
    lines.append("}")
    return "\n".join(lines)


def hasse_dot(p, name="hasse"):
    """Layered digraph: rank = length of the longest chain below."""
    n = p.n
    level = [0] * n
    for v in sorted(range(n), key=lambda v: bin(p.down[v]).count("1")):
        below = [u for u in range(n) if p.down[v] >> u & 1]
        level[v] = max((level[u] + 1 for u in below), default=0)
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    for r in range(max(level, default=-1) + 1):
        members = " ".join(_q(p.ground[v]) + ";" for v in range(n) if level[v] == r)
        lines.append(f"  {{ rank=same; {members} }}")
    for i, c in enumerate(p.cover_masks):
        for j in range(n):
            if c >> j & 1:
                lines.append(f"  {_q(p.ground[i])} -> {_q(p.ground[j])};")
    lines.append("}")
    return "\n".join(lines)


def flip_graph_dot(fc, name="flips"):
    """Members as nodes, source-to-sink flips as labelled arcs."""
    lines = [f"digraph {_q(name)} {{"]
    for k, o in enumerate(fc.members):
        label = " ".join(f"{a}>{b}" for a, b in o.arcs)
        lines.append(f"  m{k} [label={_q(label)}];")
    V = fc.graph.vertices
    for i, j, v in fc.flips:
        lines.append(f"  m{i} -> m{j} [label={_q(V[v])}];")
    lines.append("}")
    return "\n".join(lines)


def filter_poset_dot(fp, name="filters"):
    order = {v: k for k, v in enumerate(fp.ground)}

    def node(s):
        return _q("{" + ",".join(sorted(s, key=order.__getitem__)) + "}")

    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    for r in range(len(fp.ground) + 1):
        row = [node(e) + ";" for e in fp.elements if len(e) == r]
        if row:
            lines.append(f"  {{ rank=same; {' '.join(row)} }}")
    for a, b in fp.covers:
        lines.append(f"  {node(a)} -> {node(b)};")
    lines.append("}")
    return "\n".join(lines)


def partitions_dot(parts, covers, name="faces"):
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    lines += [f"  {_q(str(p))};" for p in parts]
    lines += [f"  {_q(str(a))} -> {_q(str(b))};" for a, b in covers]
    lines.append("}")
    return "\n".join(lines)
