"""Command line front end.

Subcommands compose through pipes: `gen` emits the edge-list text format,
`color` turns it into a coloring JSON document, `verify` consumes that
document and reports through its exit code.  `-` stands for stdin/stdout
everywhere.  All output is deterministic for identical inputs and seeds.

Exit codes: 0 success, 1 usage or malformed input, 2 improper coloring,
3 bichromatic cycle, 4 incomplete coloring, 5 planarity refuted,
6 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .colorer import acolor
from .coloring import PartialEdgeColoring, validate_acyclic
from .embedding import format_rotation, generate_apollonian, parse_rotation
from .discharge import audit_triangulation
from .errors import (
    AecolorError,
    EdgeListParseError,
    ExtensionFailed,
    NonPlanarEmbeddingError,
    NotPlanarEvidence,
)
from .families import platonic_solids
from .graphs import Graph, format_edge_list, parse_edge_list
from .oracle import EXHAUSTED, SearchBudget, exact_chi_a, is_acyclically_k_colorable
from .scanner import find_configuration

SCHEMA = "aecolor/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IMPROPER = 2
EXIT_CYCLE = 3
EXIT_INCOMPLETE = 4
EXIT_NOT_PLANAR = 5
EXIT_EXHAUSTED = 6


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here is exit 1
    def error(self, message):
        raise _UsageError(f"{message}\n{self.format_usage()}".rstrip())


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


def coloring_to_json(phi: PartialEdgeColoring) -> dict:
    edges = []
    for u, v in phi.graph.edges():
        edges.append({"u": u, "v": v, "color": phi.color_of(u, v)})
    return {"schema": SCHEMA, "k": phi.k, "edges": edges}


def coloring_from_json(doc: dict) -> tuple[Graph, PartialEdgeColoring]:
    """Rebuild graph and coloring; properness violations are collected,
    not raised, so the verifier can classify them."""
    try:
        k = int(doc["k"])
        rows = doc["edges"]
        triples = []
        n = 0
        for row in rows:
            u, v = int(row["u"]), int(row["v"])
            c = row["color"]
            triples.append((u, v, None if c is None else int(c)))
            n = max(n, u + 1, v + 1)
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"malformed coloring document: {exc}") from exc
    g = Graph.from_edges(n, [(u, v) for u, v, _ in triples])
    phi = PartialEdgeColoring.from_pairs(g, k, triples, strict=False)
    return g, phi


def _dot(phi: PartialEdgeColoring) -> str:
    # palette index drives the hue so renders are stable across runs
    lines = ["graph aecolor {"]
    k = max(phi.k, 1)
    for u, v in phi.graph.edges():
        c = phi.color_of(u, v)
        if c is None:
            lines.append(f'  {u} -- {v} [style=dashed label="?"];')
        else:
            hue = (c - 1) / k
            lines.append(f'  {u} -- {v} [label="{c}" color="{hue:.3f} 0.85 0.75"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    if args.apollonian is not None:
        if args.apollonian < 3:
            raise _UsageError("--apollonian needs n >= 3")
        g, rot = generate_apollonian(args.apollonian, seed=args.seed)
    else:
        g, rot = platonic_solids()[args.platonic]
    _write(args.out, format_edge_list(g))
    if args.rot_out:
        _write(args.rot_out, format_rotation(rot))
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load_graph(getattr(args, "in"))
    phi, trace = acolor(g, max_tier=args.max_tier)
    if args.format == "json":
        _write(args.out, _dump_json(coloring_to_json(phi)))
    elif args.format == "dot":
        _write(args.out, _dot(phi))
    else:
        _write(args.out, "".join(f"{u} {v} {c}\n" for (u, v), c in phi.items()))
    if args.trace:
        _write(args.trace, _dump_json({"schema": SCHEMA, **trace.to_json_dict()}))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = json.loads(_read(getattr(args, "in")))
    except json.JSONDecodeError as exc:
        raise _UsageError(f"input is not JSON: {exc}") from exc
    g, phi = coloring_from_json(doc)
    if phi.violations:
        status, code = "improper", EXIT_IMPROPER
        detail: dict = {
            "violations": [{"u": u, "v": v, "color": c} for u, v, c in phi.violations]
        }
    else:
        report = validate_acyclic(g, phi)
        if report.cycle is not None:
            status, code = "cycle", EXIT_CYCLE
            detail = {
                "cycle": {
                    "vertices": list(report.cycle.vertices),
                    "colors": list(report.cycle.colors),
                }
            }
        elif not report.all_edges_colored:
            status, code = "incomplete", EXIT_INCOMPLETE
            detail = {"colored": phi.colored_edge_count(), "edges": g.m}
        else:
            status, code = "acyclic", EXIT_OK
            detail = {"max_color": report.max_color}
    if args.format == "plain":
        _write(args.out, status + "\n")
    else:
        _write(args.out, _dump_json({"schema": SCHEMA, "status": status, **detail}))
    return code


def cmd_chi_a(args) -> int:
    g = _load_graph(getattr(args, "in"))
    budget = SearchBudget(max_nodes=args.budget)
    if args.k is not None:
        res = is_acyclically_k_colorable(g, args.k, budget)
        if res is EXHAUSTED:
            _write(args.out, "exhausted\n")
            return EXIT_EXHAUSTED
        _write(args.out, ("true" if res else "false") + "\n")
        return EXIT_OK
    res = exact_chi_a(g, budget)
    if res is EXHAUSTED:
        _write(args.out, "exhausted\n")
        return EXIT_EXHAUSTED
    _write(args.out, f"{res}\n")
    return EXIT_OK


def cmd_find_config(args) -> int:
    g = _load_graph(getattr(args, "in"))
    cfg = find_configuration(g)
    if args.format == "plain":
        nbrs = " ".join(f"{v}(d={d})" for v, d in cfg.neighbors)
        _write(args.out, f"{cfg.kind} v={cfg.vertex} neighbors: {nbrs}\n")
    else:
        _write(args.out, _dump_json({"schema": SCHEMA, **cfg.to_json_dict()}))
    return EXIT_OK


def cmd_audit(args) -> int:
    g = _load_graph(getattr(args, "in"))
    rot = parse_rotation(_read(args.rot), g)
    report = audit_triangulation(g, rot)
    if args.format == "plain":
        if report.config is not None:
            line = f"config {report.config.kind} at {report.config.vertex}"
        else:
            negs = ", ".join(f"{e}={c}" for e, c in report.negatives()) or "none"
            line = f"charges total={report.initial_total} negatives: {negs}"
        _write(args.out, line + "\n")
    else:
        _write(args.out, _dump_json({"schema": SCHEMA, **report.to_json_dict()}))
    return EXIT_OK


def _build_parser() -> _Parser:
    p = _Parser(prog="aecolor", description=__doc__)
    p.add_argument("--version", action="version", version=f"aecolor {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_io(sp, with_in=True):
        if with_in:
            sp.add_argument("--in", default="-", metavar="FILE", help="input, - for stdin")
        sp.add_argument("--out", default="-", metavar="FILE", help="output, - for stdout")

    sp = sub.add_parser("gen", help="generate a graph in edge-list form")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--apollonian", type=int, metavar="N", help="stacked triangulation on N vertices")
    kind.add_argument("--platonic", choices=sorted(platonic_solids()), help="a platonic solid")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--rot-out", metavar="FILE", help="also write the rotation system")
    add_io(sp, with_in=False)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("color", help="acyclically edge-color with max degree + 10 colors")
    add_io(sp)
    sp.add_argument("--trace", metavar="FILE", help="write the reduction trace JSON")
    sp.add_argument("--max-tier", type=int, default=4, choices=(1, 2, 3, 4))
    sp.add_argument("--format", choices=("json", "dot", "plain"), default="json")
    sp.set_defaults(fn=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring document; exit code reports the class")
    add_io(sp)
    sp.add_argument("--format", choices=("json", "plain"), default="json")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("chi-a", help="exact acyclic chromatic index by exhaustive search")
    add_io(sp)
    sp.add_argument("--k", type=int, help="decide k-colorability instead of the exact value")
    sp.add_argument("--budget", type=int, default=200_000_000, metavar="NODES")
    sp.set_defaults(fn=cmd_chi_a)

    sp = sub.add_parser("find-config", help="locate a reducible configuration")
    add_io(sp)
    sp.add_argument("--format", choices=("json", "plain"), default="json")
    sp.set_defaults(fn=cmd_find_config)

    sp = sub.add_parser("audit", help="exact discharging audit of an embedded triangulation")
    add_io(sp)
    sp.add_argument("--rot", required=True, metavar="FILE", help="rotation system file")
    sp.add_argument("--format", choices=("json", "plain"), default="json")
    sp.set_defaults(fn=cmd_audit)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"aecolor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdgeListParseError, ValueError) as exc:
        print(f"aecolor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"aecolor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotPlanarEvidence, NonPlanarEmbeddingError) as exc:
        print(f"aecolor: not planar: {exc}", file=sys.stderr)
        return EXIT_NOT_PLANAR
    except ExtensionFailed as exc:
        print(f"aecolor: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except AecolorError as exc:
        print(f"aecolor: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
