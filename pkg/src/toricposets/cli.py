"""Command-line entry point: ``toricposets <command> ...``.

Exit codes: 0 success, 1 failed verification, 2 invalid input,
64 usage error, 65 enumeration cap exceeded.
"""

import argparse
import hashlib
import json
import os
import sys

from . import config
from .coxeter import conjugacy_class_elements, coxeter_conjugate, initial_segments
from .errors import CapExceeded, ConsistencyError, ReconciliationFailure, ToricError, ValidationError
from .filters import toric_filters
from .flipclass import all_flip_classes
from .geom import alpha, reconcile_chamber_bijection
from .io import (
    coxeter_from_json,
    dumps,
    filter_poset_dot,
    flip_graph_dot,
    graph_dot,
    graph_from_json,
    hasse_dot,
    orientation_dot,
    orientation_from_json,
    partition_from_arg,
    partitions_dot,
    point_from_json,
    read_json,
    sorted_set,
)
from .morph import include, is_toric_extension, toric_hasse_included, toric_isomorphic, toric_quotient
from .poset import (
    closed_face_partition_lattice,
    hasse_graph,
    linear_extensions,
    order_ideals,
    partition_covers,
    poset_from_orientation,
)
from .toric import (
    ToricPoset,
    chain_order,
    is_geometric_toric_antichain,
    toric_chains,
    toric_closure,
    toric_hasse,
    toric_interval,
    toric_transitive_closure,
    total_toric_extensions,
)

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# input helpers ---------------------------------------------------------------------


def _graph(args):
    if not getattr(args, "graph", None):
        raise UsageError("--graph is required")
    return graph_from_json(read_json(args.graph))


def _orientation(args, attr="orientation"):
    path = getattr(args, attr, None)
    if not path:
        raise UsageError(f"--{attr} is required")
    g = graph_from_json(read_json(args.graph)) if getattr(args, "graph", None) else None
    return orientation_from_json(read_json(path), g)


def _edges(g):
    return [list(e) for e in g.edge_labels]


def _set(s):
    return sorted_set(s)


# commands --------------------------------------------------------------------------


def cmd_classes(args):
    g = _graph(args)
    classes = all_flip_classes(g)
    if args.dot:
        return "\n".join(flip_graph_dot(fc, f"class{k + 1}") for k, fc in enumerate(classes))
    out = []
    for fc in classes:
        item = {"canonical": fc.canonical.to_json()["arcs"], "size": len(fc)}
        if args.members:
            item["members"] = [o.to_json()["arcs"] for o in fc.members]
        out.append(item)
    return out


def cmd_poset(args):
    o = _orientation(args)
    p = poset_from_orientation(o)
    what = args.what
    if what == "hasse":
        if args.dot:
            return hasse_dot(p)
        return {"vertices": list(p.ground), "covers": sorted(hasse_orientation_arcs(p))}
    if what == "extensions":
        return [list(w) for w in linear_extensions(p)]
    if what == "ideals":
        return [_set(s) for s in order_ideals(p)]
    if what == "facelattice":
        parts = closed_face_partition_lattice(o)
        if args.dot:
            return partitions_dot(parts, partition_covers(parts))
        return [str(x) for x in parts]
    raise UsageError(f"unknown poset query {what}")


def hasse_orientation_arcs(p):
    h = hasse_graph(p)
    return [[a, b] if p.lt(a, b) else [b, a] for a, b in h.edge_labels]


def cmd_toric(args):
    o = _orientation(args)
    P = ToricPoset(o)
    what = args.what
    if what in ("hasse", "closure-graph"):
        g = toric_hasse(P) if what == "hasse" else toric_transitive_closure(P)
        if args.dot:
            return graph_dot(g, what)
        return {"vertices": list(g.vertices), "edges": _edges(g)}
    if what == "chains":
        return [{"set": _set(s), "order": list(w)} for s, w in toric_chains(P)]
    if what == "interval":
        if len(args.items) != 2:
            raise UsageError("toric interval takes two vertices")
        return _set(toric_interval(P, *args.items))
    if what == "antichain":
        return is_geometric_toric_antichain(P, args.items)
    if what == "extensions":
        return [list(w) for w in total_toric_extensions(P)]
    if what == "clpartition":
        if len(args.items) != 1:
            raise UsageError("toric clpartition takes one partition")
        return {"closure": str(toric_closure(P, partition_from_arg(args.items[0])))}
    if what == "chain":
        w = chain_order(P, args.items)
        return None if w is None else list(w)
    raise UsageError(f"unknown toric query {what}")


def cmd_filters(args):
    fp = toric_filters(_orientation(args))
    return filter_poset_dot(fp) if args.dot else fp.to_json()


def cmd_quotient(args):
    Q = toric_quotient(_orientation(args), partition_from_arg(args.partition), args.naming)
    if args.dot:
        return orientation_dot(Q.canonical, "quotient")
    return Q.canonical.to_json()


def cmd_extend(args):
    P = ToricPoset(_orientation(args))
    if args.include:
        Q = include(P, [x for x in args.include.split(",") if x])
        return Q.canonical.to_json()
    if not args.check:
        raise UsageError("extend needs --check FILE or --include LABELS")
    P2 = ToricPoset(orientation_from_json(read_json(args.check)))
    return {"is_extension": is_toric_extension(P, P2), "toric_hasse_included": toric_hasse_included(P, P2)}


def cmd_iso(args):
    P = ToricPoset(_orientation(args))
    P2 = ToricPoset(orientation_from_json(read_json(args.other)))
    m = toric_isomorphic(P, P2)
    return {"isomorphic": m is not None, "bijection": m}


def cmd_coxeter(args):
    cs = coxeter_from_json(read_json(args.system))
    if args.what == "conjugate":
        if len(args.words) != 2:
            raise UsageError("coxeter conjugate takes two words")
        return coxeter_conjugate(cs, *args.words)
    if len(args.words) != 1:
        raise UsageError(f"coxeter {args.what} takes one word")
    if args.what == "class":
        return [
            {"orientation": o.to_json()["arcs"], "words": [",".join(w) for w in ws]}
            for o, ws in conjugacy_class_elements(cs, args.words[0])
        ]
    fp = initial_segments(cs, args.words[0])
    return filter_poset_dot(fp) if args.dot else fp.to_json()


def cmd_geom(args):
    g = _graph(args)
    if args.what == "alpha":
        if not args.point:
            raise UsageError("geom alpha needs --point FILE")
        o = alpha(g, point_from_json(read_json(args.point)))
        return orientation_dot(o) if args.dot else o.to_json()
    return reconcile_chamber_bijection(g)


def cmd_verify(args):
    from .fixtures import run_fixtures

    results = run_fixtures(args.filter)
    lines = []
    failed = 0
    for fx, actual, ok in results:
        lines.append(f"{'PASS' if ok else 'FAIL'} [{fx.group}] {fx.name}: {fx.anchor}")
        if not ok:
            failed += 1
            lines.append(f"    expected: {fx.expected!r}")
            lines.append(f"    actual:   {actual!r}")
    lines.append(f"{len(results) - failed}/{len(results)} fixtures passed")
    return "\n".join(lines), (EXIT_FAIL if failed else EXIT_OK)


# parser ----------------------------------------------------------------------------


def build_parser():
    def global_options(parser):
        parser.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        parser.add_argument("--max-vertices", type=int, help="vertex cap for exhaustive enumeration")
        parser.add_argument("--cache", metavar="DIR", help="on-disk result cache directory")
        parser.add_argument("--jobs", type=int, help="worker count (results are identical for any value)")

    # Options are accepted before or after the command; SUPPRESS keeps the
    # subcommand from resetting a value given before it.
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    global_options(common)
    p = _Parser(prog="toricposets", description="Toric posets from acyclic orientations.")
    global_options(p)
    p.set_defaults(jobs=1)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def io_args(sp, graph=True, orientation=True):
        if graph:
            sp.add_argument("--graph", help="graph JSON file")
        if orientation:
            sp.add_argument("--orientation", help="orientation JSON file")

    sp = sub.add_parser("classes", parents=[common], help="flip classes of a graph")
    io_args(sp, orientation=False)
    sp.add_argument("--members", action="store_true", help="list every member")
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("poset", parents=[common], help="ordinary poset of an orientation")
    sp.add_argument("what", choices=["hasse", "extensions", "ideals", "facelattice"])
    io_args(sp)
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("toric", parents=[common], help="toric poset queries")
    sp.add_argument(
        "what", choices=["hasse", "closure-graph", "chains", "chain", "interval", "antichain", "extensions", "clpartition"]
    )
    sp.add_argument("items", nargs="*", help="vertices or a partition, depending on the query")
    io_args(sp)
    sp.set_defaults(func=cmd_toric)

    sp = sub.add_parser("filters", parents=[common], help="toric filters J_tor")
    io_args(sp)
    sp.set_defaults(func=cmd_filters)

    sp = sub.add_parser("quotient", parents=[common], help="toric quotient by a partition")
    io_args(sp)
    sp.add_argument("--partition", required=True, help="e.g. '1,2|3|4' or '12/3/4'")
    sp.add_argument("--naming", choices=["index", "min"], default="index", help="block labels B1..Br or minimal member")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("extend", parents=[common], help="toric extension check or vertex inclusion")
    io_args(sp)
    sp.add_argument("--check", metavar="FILE", help="is this orientation's toric poset an extension?")
    sp.add_argument("--include", metavar="LABELS", help="comma-separated isolated vertices to add")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("iso", parents=[common], help="toric isomorphism search")
    io_args(sp)
    sp.add_argument("--other", required=True, help="second orientation JSON")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("coxeter", parents=[common], help="Coxeter element conjugacy")
    sp.add_argument("what", choices=["conjugate", "class", "segments"])
    sp.add_argument("words", nargs="+", help="comma-separated generator words")
    sp.add_argument("--system", required=True, help="Coxeter system JSON")
    sp.set_defaults(func=cmd_coxeter)

    sp = sub.add_parser("geom", parents=[common], help="exact-rational torus points")
    sp.add_argument("what", choices=["alpha", "reconcile"])
    io_args(sp, orientation=False)
    sp.add_argument("--point", help="point JSON: {\"coords\": {\"1\": \"1/4\"}}")
    sp.set_defaults(func=cmd_geom)

    sp = sub.add_parser("verify-paper", parents=[common], help="run the bundled worked-example fixtures")
    sp.add_argument("--filter", help="only fixtures in this group (or whose name contains it)")
    sp.set_defaults(func=cmd_verify)
    return p


def _cache_key(argv):
    """Hash of the command line with every input file replaced by its canonical JSON."""
    parts = []
    for a in argv:
        if os.path.isfile(a):
            try:
                with open(a, encoding="utf-8") as fh:
                    parts.append(json.dumps(json.load(fh), sort_keys=True))
                continue
            except (OSError, ValueError):
                pass
        parts.append(a)
    return hashlib.sha256("\0".join(parts).encode()).hexdigest()


def _render(result):
    if isinstance(result, str):
        return result
    return dumps(result)


def run(argv=None, stdout=None):
    """Run one command; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a command is required (try --help)")
        if args.jobs is not None and args.jobs < 1:
            raise UsageError("--jobs must be positive")
        overrides = {}
        if args.max_vertices is not None:
            if args.max_vertices < 1:
                raise UsageError("--max-vertices must be positive")
            overrides["max_vertices"] = args.max_vertices
        cache_file = None
        if args.cache and args.command != "verify-paper":
            os.makedirs(args.cache, exist_ok=True)
            cache_file = os.path.join(args.cache, _cache_key(argv) + ".out")
            if os.path.exists(cache_file):
                with open(cache_file, encoding="utf-8") as fh:
                    stdout.write(fh.read())
                return EXIT_OK
        with config.limits(**overrides):
            result = args.func(args)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        text = _render(result) + "\n"
        stdout.write(text)
        if cache_file and code == EXIT_OK:
            with open(cache_file, "w", encoding="utf-8") as fh:
                fh.write(text)
        return code
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    except UsageError as e:
        stdout.write(dumps({"error": "usage", "message": str(e)}) + "\n")
        return EXIT_USAGE
    except CapExceeded as e:
        stdout.write(dumps({"error": "CapExceeded", "message": str(e)}) + "\n")
        return EXIT_CAP
    except (ConsistencyError, ReconciliationFailure) as e:
        stdout.write(dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        return EXIT_FAIL
    except (ValidationError, ToricError) as e:
        msg = e.args[0] if e.args else str(e)
        stdout.write(dumps({"error": type(e).__name__, "message": str(msg)}) + "\n")
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
