"""Command-line entry point: ``powergraph {analyze,verify,witness}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .analysis import connected_components, diameter, isolated_by_definition
from .dsl import build_group
from .errors import PowerGraphError
from .graphs import complement, drop_isolated, enhanced_power_graph, power_graph, to_dot
from .group import DEFAULT_MAX_ORDER
from .verify import default_catalog, exit_code, load_catalog, reports_to_json, run_catalog
from .witnesses import extract_witnesses, witness_path


def _analyze(args) -> int:
    g = build_group(args.group, args.max_order)
    graph = power_graph(g) if args.graph == "power" else enhanced_power_graph(g)
    if args.complement:
        graph = complement(graph)
    if args.drop_isolated:
        graph = drop_isolated(graph).graph
    names = [g.name(graph.label(v)) for v in range(graph.vertex_count)]

    if args.format == "dot":
        out = to_dot(graph, names)
    else:
        summary = {
            "group": g.label,
            "order": g.order,
            "graph": args.graph,
            "complement": args.complement,
            "drop_isolated": args.drop_isolated,
            "vertex_count": graph.vertex_count,
            "edge_count": graph.edge_count(),
            "isolated_count": len(isolated_by_definition(graph)),
            "component_count": connected_components(graph).component_count,
            "diameter": diameter(graph),
        }
        if args.format == "json":
            summary["vertices"] = [{"vertex": v, "element": graph.label(v), "name": n} for v, n in enumerate(names)]
            summary["edges"] = [list(e) for e in graph.edges()]
            out = json.dumps(summary, indent=2) + "\n"
        else:
            out = "".join(f"{k}: {v}\n" for k, v in summary.items())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _verify(args) -> int:
    if args.catalog == "default":
        catalog = default_catalog(args.max_order)
    else:
        catalog = load_catalog(args.catalog, args.max_order)
    reports = run_catalog(catalog, jobs=args.jobs)
    print(reports_to_json(reports))
    return exit_code(reports)


def _witness(args) -> int:
    g = build_group(args.group, args.max_order)
    if args.pair:
        try:
            u, v = (int(x) for x in args.pair.split(","))
        except ValueError:
            raise SystemExit(f"--pair expects two element indices like 3,5, got {args.pair!r}")
        path = witness_path(g, u, v)
        out = {"group": g.label, "pair": [u, v], "path": list(path), "names": [g.name(x) for x in path]}
    else:
        out = {"group": g.label, **extract_witnesses(g).to_dict(g)}
    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powergraph",
        description="Power graphs of finite groups and the diameter of their complements.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="build one graph and summarize or export it")
    p.add_argument("--group", required=True, help="group expression, e.g. 'C6xC4' or 'perm:(1 2 3);(1 2)'")
    p.add_argument("--graph", choices=["power", "epow"], required=True)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--drop-isolated", action="store_true")
    p.add_argument("--format", choices=["json", "text", "dot"], default="text")
    p.add_argument("-o", "--output")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=_analyze)

    p = sub.add_parser("verify", help="check both diameter bounds over a catalog")
    p.add_argument("--catalog", default="default", help="'default' or a file with one expression per line")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_verify)

    p = sub.add_parser("witness", help="print witness paths in the complement enhanced power graph")
    p.add_argument("--group", required=True)
    p.add_argument("--pair", help="two element indices, e.g. 3,5")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=_witness)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except PowerGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IndexError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
