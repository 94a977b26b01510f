"""Command-line surface.

Subcommands: connectivity, certify, verify-theorem, profile, gen.
Output is a single deterministic document on stdout (``--format
json|text``); identical inputs and seeds give byte-identical output.

Exit codes: 0 success / Certified, 1 NotCertified, 2 parse or input
errors, 3 graph too small or too large for the requested analysis,
4 theorem violation found (falsification signal), 5 search exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys

from . import __version__
from .connectivity import ENUM_CAP_ENV, edge_connectivity, enumeration_cap
from .errors import EdgeExpandError, ParseError, TooLarge, TooSmall
from .expansion import (
    Partition,
    TheoremReport,
    contracted_metric,
    certify,
    expansion_profile,
    make_partition,
    verify_theorem,
)
from .fileio import (
    ParsedGraph,
    format_edge_list,
    format_vertex_line,
    parse_edge_list,
    parse_vertex_line,
)
from .generators import (
    FIGURE_TARGETS,
    FoundInstance,
    NotFound,
    build_gadget,
    instance_search,
    parse_gadget_spec,
)
from .graph import VertexSet, min_degree
from .sweep import reports_for_all_cuts

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_VIOLATION = 4
EXIT_NOT_FOUND = 5


def _num(x):
    return "inf" if x == math.inf else x


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")


def _load_graph(path: str) -> ParsedGraph:
    return parse_edge_list(_read(path))


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines: list[str] = []

    def walk(prefix: str, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}." if prefix else f"{key}.", value[key])
        elif isinstance(value, (list, tuple)):
            lines.append(f"{prefix[:-1]}: {json.dumps(value)}")
        else:
            lines.append(f"{prefix[:-1]}: {value}")

    walk("", report)
    return "\n".join(lines) + "\n"


def _vertexset_payload(vs: VertexSet, parsed: ParsedGraph) -> list[int]:
    return sorted(parsed.to_original(v) for v in vs.members)


def _edges_payload(edges, parsed: ParsedGraph) -> list[list[int]]:
    return sorted(
        sorted([parsed.to_original(u), parsed.to_original(v)]) for u, v in edges
    )


def _report_payload(r: TheoremReport, parsed: ParsedGraph) -> dict:
    return {
        "s_side": _vertexset_payload(r.s_side, parsed),
        "cut_size": r.cut_size,
        "k": r.k,
        "k_global": r.k_global,
        "diameter": _num(r.diameter),
        "applicable": r.applicable,
        "applicable_with_global_k": r.applicable_with_global_k,
        "conclusions": [
            r.conclusion1, r.conclusion2, r.conclusion3, r.conclusion4, r.conclusion5,
        ],
        "c1_witness": None if r.c1_witness is None else parsed.to_original(r.c1_witness),
        "c3_chain": list(r.c3_chain),
        "c3_with_global_k": r.c3_with_global_k,
        "c5_phi": r.c5_phi,
    }


def _partition_from_files(parsed: ParsedGraph, partition_file: str) -> Partition:
    v2 = parse_vertex_line(_read(partition_file), parsed)
    return make_partition(parsed.graph, v2)


def _base_report(command: str, inputs: dict[str, str]) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs": {name: _digest(path) for name, path in inputs.items()},
    }


def _cmd_connectivity(args) -> tuple[dict, int]:
    parsed = _load_graph(args.graph)
    result = edge_connectivity(parsed.graph)
    report = _base_report("connectivity", {"graph": args.graph})
    report["result"] = {
        "kprime": result.kprime,
        "witness": {
            "s_side": _vertexset_payload(result.witness.s_side, parsed),
            "crossing_edges": _edges_payload(result.witness.crossing_edges, parsed),
        },
    }
    return report, EXIT_OK


def _cmd_certify(args) -> tuple[dict, int]:
    parsed = _load_graph(args.graph)
    p = _partition_from_files(parsed, args.partition)
    cert = certify(parsed.graph, p, args.k)
    report = _base_report("certify", {"graph": args.graph, "partition": args.partition})
    report["result"] = {
        "verdict": cert.verdict,
        "k": cert.k,
        "hypothesis_status": list(cert.hypothesis_status),
        "alternative_status": list(cert.alternative_status),
        "reasons": list(cert.reasons),
    }
    return report, EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def _cmd_verify_theorem(args) -> tuple[dict, int]:
    parsed = _load_graph(args.graph)
    p = _partition_from_files(parsed, args.partition)
    inputs = {"graph": args.graph, "partition": args.partition}
    if args.s_file:
        inputs["s_file"] = args.s_file
        s = parse_vertex_line(_read(args.s_file), parsed)
        reports = [verify_theorem(parsed.graph, p, s)]
        if not args.include_inapplicable:
            reports = [r for r in reports if r.applicable] or reports
    else:
        reports = reports_for_all_cuts(
            parsed.graph, p, max_n=args.max_enum_n,
            include_inapplicable=args.include_inapplicable,
        )
    applicable = [r for r in reports if r.applicable]
    violations = [r for r in applicable if not r.all_conclusions_hold]
    report = _base_report("verify-theorem", inputs)
    report["result"] = {
        "reports": [_report_payload(r, parsed) for r in reports],
        "summary": {
            "evaluated": len(reports),
            "applicable": len(applicable),
            "violations": len(violations),
        },
    }
    return report, EXIT_VIOLATION if violations else EXIT_OK


def _cmd_profile(args) -> tuple[dict, int]:
    parsed = _load_graph(args.graph)
    p = _partition_from_files(parsed, args.partition)
    prof = expansion_profile(parsed.graph, p)
    metric = contracted_metric(parsed.graph, p)
    report = _base_report("profile", {"graph": args.graph, "partition": args.partition})
    report["result"] = {
        "boundary1": _vertexset_payload(prof.boundary1, parsed),
        "boundary2": _vertexset_payload(prof.boundary2, parsed),
        "interior2": _vertexset_payload(prof.interior2, parsed),
        "phi": prof.phi,
        "k_min_v1": prof.k_min_v1,
        "k_min_all": prof.k_min_all,
        "contracted_diameter": _num(metric.diameter),
    }
    return report, EXIT_OK


def _measured_stats(found: FoundInstance, kind: str) -> dict:
    from .expansion import boundary, phi

    g, p, s = found.graph, found.partition, found.s
    stats = {
        "n": g.n,
        "phi": phi(g, p),
        "k_min_v1": min_degree(g, p.v1.members),
        "k_min_all": min_degree(g),
        "boundary1_size": len(boundary(g, p, 1).members),
        "contracted_diameter": _num(contracted_metric(g, p).diameter),
    }
    if kind == "theorem":
        report = verify_theorem(g, p, s)
        stats.update(
            cut_size=report.cut_size,
            s_cap_v1_size=len(s.members & p.v1.members),
            sbar_size=g.n - len(s.members),
            applicable=report.applicable,
        )
    else:
        stats["kprime"] = edge_connectivity(g).kprime
    return stats


def _cmd_gen(args) -> tuple[dict, int]:
    if bool(args.spec) == bool(args.target):
        raise ParseError("gen needs exactly one of SPEC_FILE or --target")
    report = _base_report("gen", {"spec": args.spec} if args.spec else {})
    report["seed"] = args.seed
    prefix = args.out

    if args.spec:
        spec = parse_gadget_spec(_read(args.spec))
        try:
            g, p = build_gadget(spec)
        except (EdgeExpandError, ValueError) as exc:
            if isinstance(exc, EdgeExpandError):
                raise
            raise ParseError(str(exc))
        s = None
        kind = "spec"
    else:
        if args.target not in FIGURE_TARGETS:
            raise ParseError(
                f"unknown target {args.target!r}; choose from {sorted(FIGURE_TARGETS)}"
            )
        target = FIGURE_TARGETS[args.target]
        outcome = instance_search(target, budget=args.budget, seed=args.seed)
        if isinstance(outcome, NotFound):
            report["result"] = {"found": False, "budget": outcome.budget}
            return report, EXIT_NOT_FOUND
        g, p, s = outcome.graph, outcome.partition, outcome.s
        kind = target.kind
        report["trials"] = outcome.trials

    parsed = ParsedGraph(g, tuple(range(g.n)))
    files = {}
    graph_path = f"{prefix}.graph"
    with open(graph_path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(parsed))
    files["graph"] = graph_path
    v2_path = f"{prefix}.v2"
    with open(v2_path, "w", encoding="utf-8") as fh:
        fh.write(format_vertex_line(p.v2, parsed))
    files["partition"] = v2_path
    if kind == "theorem" and s is not None:
        s_path = f"{prefix}.s"
        with open(s_path, "w", encoding="utf-8") as fh:
            fh.write(format_vertex_line(s, parsed))
        files["s_set"] = s_path

    result: dict = {"found": True, "files": files}
    if kind == "spec":
        prof = expansion_profile(g, p)
        result["stats"] = {
            "n": g.n,
            "phi": prof.phi,
            "boundary1_size": len(prof.boundary1.members),
            "k_min_v1": prof.k_min_v1,
            "k_min_all": prof.k_min_all,
            "contracted_diameter": _num(contracted_metric(g, p).diameter),
        }
    else:
        result["target"] = args.target
        result["stats"] = _measured_stats(outcome, kind)
    report["result"] = result
    return report, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edge-expand",
        description="Edge connectivity and graph-expansion certification.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument(
        "--max-enum-n",
        type=int,
        default=None,
        help=f"cut enumeration cap (default {enumeration_cap()}; env {ENUM_CAP_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("connectivity", help="compute k'(G) with a witness cut")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("certify", help="certify k-edge-connectedness of an expansion")
    p.add_argument("graph")
    p.add_argument("partition", help="file with the V2 vertex ids")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify-theorem", help="evaluate the cut conclusions")
    p.add_argument("graph")
    p.add_argument("partition")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all-cuts", action="store_true")
    group.add_argument("--s-file", help="file with the S-side vertex ids")
    p.add_argument("--include-inapplicable", action="store_true")
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("profile", help="boundary/interior sets, Phi, diameter")
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("gen", help="generate instances (gadget spec or figure target)")
    p.add_argument("spec", nargs="?", default=None, metavar="SPEC_FILE")
    p.add_argument("--target", help="figure id: 1a 1b 1c 1d 2a 2b")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--out", default="instance", help="output file prefix")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_enum_n is None:
        args.max_enum_n = enumeration_cap()
    saved_cap = os.environ.get(ENUM_CAP_ENV)
    os.environ[ENUM_CAP_ENV] = str(args.max_enum_n)
    try:
        report, code = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TooSmall, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except EdgeExpandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    finally:
        if saved_cap is None:
            del os.environ[ENUM_CAP_ENV]
        else:
            os.environ[ENUM_CAP_ENV] = saved_cap
    sys.stdout.write(_render(report, args.format))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
