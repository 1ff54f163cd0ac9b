"""Command-line surface: generate, measure, check, scan, enum, catalog.

Exit status contract: 0 success / no violations, 2 usage error, 3 I/O error,
4 construction or validation failure, 5 bound violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__, bounds, constructions, graph6, metrics, search
from .constructions import ConstructionError
from .graph import Graph, GraphError
from .graph6 import Graph6Error
from .metrics import DisconnectedGraphError
from .report import ReportDocument, render_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4
EXIT_VIOLATION = 5

_FAMILIES = tuple(constructions.FAMILY_PARAMS)


def _add_family_options(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--family", choices=_FAMILIES, required=required, help="constructed family")
    parser.add_argument("--delta", type=int, help="minimum degree parameter")
    parser.add_argument("--k", type=int, help="block / copy count parameter")
    parser.add_argument("--n", type=int, help="order parameter")
    parser.add_argument("--q", type=int, help="field order parameter")


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="infile", metavar="FILE", help="graph6 or edge-list input file")
    parser.add_argument("--index", type=int, default=0, help="graph index within --in (default 0)")
    _add_family_options(parser)


def _add_bounds_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--bounds",
        metavar="ID[,ID...]",
        help="comma-separated bound ids (default: the full catalog)",
    )


def _add_threads_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, help="BFS worker threads (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxrem",
        description="Exact distance invariants, extremal constructions, and bound verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="construct a family member and emit graph6 plus notes")
    p_gen.add_argument("family", choices=_FAMILIES)
    p_gen.add_argument("--delta", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--q", type=int)
    p_gen.add_argument("--out", metavar="FILE", help="write here instead of stdout")

    p_measure = sub.add_parser("measure", help="print the invariant report of one graph")
    _add_input_options(p_measure)
    p_measure.add_argument("--json", action="store_true", help="emit the JSON document")
    _add_threads_option(p_measure)

    p_check = sub.add_parser("check", help="evaluate bounds on one graph")
    _add_input_options(p_check)
    _add_bounds_option(p_check)
    p_check.add_argument("--json", action="store_true", help="emit the JSON document")
    _add_threads_option(p_check)

    p_scan = sub.add_parser("scan", help="check a whole corpus (enumerated or from a file)")
    p_scan.add_argument("--n", type=int, help="enumerate connected graphs of this order")
    p_scan.add_argument(
        "--filter",
        choices=("all", "tf", "c4", "both"),
        default="all",
        help="enumeration filter (tf = triangle-free, c4 = C4-free)",
    )
    p_scan.add_argument("--in", dest="infile", metavar="FILE", help="graph6 corpus file")
    _add_bounds_option(p_scan)
    _add_threads_option(p_scan)

    p_enum = sub.add_parser("enum", help="write an enumerated corpus as graph6 lines")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--filter", choices=("all", "tf", "c4", "both"), default="all")
    p_enum.add_argument("--out", metavar="FILE", required=True)

    sub.add_parser("catalog", help="print the bound catalog as a table")
    return parser


_FILTER_NAMES = {"all": "all", "tf": "triangle_free", "c4": "c4_free", "both": "both"}


def _family_params(args: argparse.Namespace) -> dict[str, int]:
    return {
        key: getattr(args, key)
        for key in ("delta", "k", "n", "q")
        if getattr(args, key, None) is not None
    }


def _resolve_graph(parser: argparse.ArgumentParser, args: argparse.Namespace) -> tuple[Graph, dict, list[str]]:
    """Load the target graph from --in or --family; returns (graph, source, notes)."""
    if args.infile and args.family:
        parser.error("--in and --family are mutually exclusive")
    if args.infile:
        graphs = graph6.load_graphs(args.infile)
        if not graphs:
            raise Graph6Error(f"{args.infile} contains no graphs")
        if not 0 <= args.index < len(graphs):
            raise Graph6Error(
                f"--index {args.index} out of range: {args.infile} holds {len(graphs)} graphs"
            )
        return graphs[args.index], {"file": args.infile, "index": args.index}, []
    if args.family:
        params = _family_params(args)
        g, notes = constructions.build_family(args.family, **params)
        return g, {"family": args.family, **params}, notes
    parser.error("one of --in or --family is required")
    raise AssertionError  # unreachable


def _parse_bound_ids(parser: argparse.ArgumentParser, raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    ids = [part.strip() for part in raw.split(",") if part.strip()]
    known = set(bounds.all_check_ids())
    for bound_id in ids:
        if bound_id not in known:
            parser.error(f"unknown bound id {bound_id!r}; known ids: {', '.join(sorted(known))}")
    return ids


def _make_document(g: Graph, source: dict, notes: list[str], ids: list[str] | None, with_checks: bool) -> ReportDocument:
    report = bounds.complete_report(g)
    checks = bounds.check_graph(g, ids, report=report) if with_checks else []
    return ReportDocument(
        version=__version__,
        graph_source=source,
        edge_count=g.edge_count,
        invariants=report,
        checks=checks,
        construction_notes=notes,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    params = _family_params(args)
    g, notes = constructions.build_family(args.family, **params)
    lines = [graph6.emit_graph6(g)]
    lines += [f"# {note}" for note in notes]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_measure(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.threads:
        metrics.set_default_threads(args.threads)
    g, source, notes = _resolve_graph(parser, args)
    doc = _make_document(g, source, notes, None, with_checks=False)
    print(doc.to_json() if args.json else render_table(doc))
    return EXIT_OK


def _cmd_check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.threads:
        metrics.set_default_threads(args.threads)
    ids = _parse_bound_ids(parser, args.bounds)
    g, source, notes = _resolve_graph(parser, args)
    doc = _make_document(g, source, notes, ids, with_checks=True)
    print(doc.to_json() if args.json else render_table(doc))
    violated = [c for c in doc.checks if c.applicable and not c.holds]
    if violated:
        print(
            f"VIOLATION: {len(violated)} applicable bound(s) failed: "
            + ", ".join(c.bound_id for c in violated),
            file=sys.stderr,
        )
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_scan(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.threads:
        metrics.set_default_threads(args.threads)
    ids = _parse_bound_ids(parser, args.bounds)
    if (args.n is None) == (args.infile is None):
        parser.error("scan needs exactly one of --n or --in")
    if args.infile:
        corpus = graph6.iter_graph6_file(args.infile)
        description = args.infile
    else:
        filter_name = _FILTER_NAMES[args.filter]
        corpus = search.enumerate_connected(args.n, filter_name)
        description = f"connected graphs of order {args.n} (filter: {filter_name})"
    summary = search.scan(corpus, ids, description)
    print(search.format_scan_summary(summary))
    return EXIT_VIOLATION if summary.total_violations else EXIT_OK


def _cmd_enum(args: argparse.Namespace) -> int:
    corpus = search.enumerate_connected(args.n, _FILTER_NAMES[args.filter])
    count = graph6.write_graph6_file(args.out, corpus)
    print(f"wrote {count} graphs to {args.out}")
    return EXIT_OK


def cli(argv: Sequence[str] | None = None) -> int:
    """Run the command line; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    previous_threads = metrics.get_default_threads()
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "measure":
            return _cmd_measure(parser, args)
        if args.command == "check":
            return _cmd_check(parser, args)
        if args.command == "scan":
            return _cmd_scan(parser, args)
        if args.command == "enum":
            return _cmd_enum(args)
        if args.command == "catalog":
            print(bounds.format_catalog())
            return EXIT_OK
        parser.error(f"unknown command {args.command!r}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConstructionError, GraphError, Graph6Error, DisconnectedGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    finally:
        metrics.set_default_threads(previous_threads)
    raise AssertionError  # unreachable


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
