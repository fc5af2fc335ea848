"""Command-line front end: generate, transform, solve, verify, explore.

All configuration comes through flags (no environment variables), inputs
are graph6 or plain edge lists, and outputs are deterministic JSON / CSV
reports or DOT drawings, so runs are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families
from .errors import GraphError, ParseError
from .formats import (
    EDGE_LIST,
    GRAPH6,
    derived_to_dot,
    emit_graph,
    graph_to_dot,
    read_graphs,
)
from .graph import Graph
from .harness import (
    EXPLORE_TARGETS,
    Instance,
    Report,
    THEOREM_IDS,
    TOOL_VERSION,
    default_corpus,
    explore,
    run_checks,
)
from .solvers import DEFAULT_BUDGET, DEFAULT_PHI_CAP, KINDS, solve_dimension
from .transforms import line_graph, middle, subdivision, total

_DERIVED = {"s": subdivision, "m": middle, "t": total}

_CORPUS_FAMILIES = set(families.FAMILIES) | {"trees"}


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _family_instances(name: str, ns: list[int], cycles: list[int], seeds: list[int]) -> list[Instance]:
    if name not in _CORPUS_FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(_CORPUS_FAMILIES))}")
    out: list[Instance] = []
    for n in ns:
        if name == "trees":
            for i, t in enumerate(families.enumerate_small_trees(n)):
                out.append(Instance(id=f"trees:n={n},i={i:03d}", graph=t, family="trees", param_n=n))
        elif name == families.RANDOM_TREE:
            for s in seeds:
                g = families.random_tree(n, s)
                out.append(Instance(id=f"random_tree:n={n},seed={s:03d}", graph=g,
                                    family=name, param_n=n))
        elif name == families.RANDOM_CACTUS:
            for c in cycles:
                for s in seeds:
                    g = families.random_cactus(n, c, s)
                    out.append(Instance(id=f"random_cactus:n={n},cycles={c},seed={s:03d}",
                                        graph=g, family=name, param_n=n))
        else:
            g = families.generate(families.FamilySpec(family=name, n=n))
            out.append(Instance(id=f"{name}:n={n}", graph=g, family=name, param_n=n))
    return out


def _expand_family_spec(spec: str, args) -> list[Instance]:
    """'name' uses --n/--cycles/--seed; 'name:n=5..7,seed=1..30' is inline."""
    if ":" not in spec:
        if args.n is None:
            raise GraphError(f"family {spec!r} needs --n")
        return _family_instances(
            spec,
            _parse_range(args.n),
            _parse_range(args.cycles) if args.cycles else [1],
            _parse_range(args.seed) if args.seed else [1],
        )
    name, _, rest = spec.partition(":")
    params = {}
    for part in rest.split(","):
        key, _, value = part.partition("=")
        if not value:
            raise GraphError(f"bad family parameter {part!r} in {spec!r}")
        params[key.strip()] = value.strip()
    unknown = set(params) - {"n", "cycles", "seed"}
    if unknown:
        raise GraphError(f"unknown family parameters {sorted(unknown)} in {spec!r}")
    if "n" not in params:
        raise GraphError(f"family spec {spec!r} needs n=...")
    return _family_instances(
        name,
        _parse_range(params["n"]),
        _parse_range(params["cycles"]) if "cycles" in params else [1],
        _parse_range(params["seed"]) if "seed" in params else [1],
    )


def _file_instances(path: str) -> list[Instance]:
    data = Path(path).read_bytes()
    graphs = read_graphs(data)
    stem = Path(path).name
    if len(graphs) == 1:
        return [Instance(id=f"file:{stem}", graph=graphs[0])]
    return [Instance(id=f"file:{stem}#{i:03d}", graph=g) for i, g in enumerate(graphs)]


def _corpus(args) -> list[Instance]:
    instances: list[Instance] = []
    for path in args.input or []:
        instances.extend(_file_instances(path))
    for spec in args.family or []:
        instances.extend(_expand_family_spec(spec, args))
    if not instances:
        instances = default_corpus()
    return instances


def _single_instance(args) -> Instance:
    if args.input:
        found = _file_instances(args.input)
        if len(found) != 1:
            raise GraphError(f"{args.input} holds {len(found)} graphs; expected exactly one")
        return found[0]
    if not args.family:
        raise GraphError("provide --input FILE or --family NAME --n N")
    found = _expand_family_spec(args.family, args)
    if len(found) != 1:
        raise GraphError(f"family spec expands to {len(found)} graphs; expected exactly one")
    return found[0]


def _write(args, payload: str | bytes) -> None:
    if isinstance(payload, str):
        payload = payload.encode("ascii")
    if getattr(args, "output", None):
        Path(args.output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)


def _graph_dict(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _json_out(payload: dict) -> str:
    payload = dict(payload)
    payload["version"] = TOOL_VERSION
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_generate(args) -> int:
    inst = _single_instance(args)
    if args.format in (EDGE_LIST, GRAPH6):
        _write(args, emit_graph(inst.graph, args.format))
    elif args.format == "dot":
        _write(args, graph_to_dot(inst.graph, name="g"))
    else:
        _write(args, _json_out({"instance": inst.id, "graph": _graph_dict(inst.graph)}))
    return 0


def _cmd_transform(args) -> int:
    inst = _single_instance(args)
    base = inst.graph
    if args.derived == "l":
        lg = line_graph(base)
        if args.format == "dot":
            labels = {j: f"{j}: e{j}({u},{v})" for j, (u, v) in enumerate(base.edges)}
            _write(args, graph_to_dot(lg, labels=labels, name="line"))
        else:
            payload = {
                "base": _graph_dict(base),
                "derived": "l",
                "graph": _graph_dict(lg),
                "instance": inst.id,
                "vertices": [
                    {"index": j, "base_edge": [u, v]} for j, (u, v) in enumerate(base.edges)
                ],
            }
            _write(args, _json_out(payload))
        return 0
    dg = _DERIVED[args.derived](base)
    if args.format == "dot":
        _write(args, derived_to_dot(dg, name=args.derived))
    else:
        payload = {
            "base": _graph_dict(base),
            "derived": args.derived,
            "graph": _graph_dict(dg.graph),
            "instance": inst.id,
            "vertices": [
                {"index": i, "provenance": f"{tag}:{idx}"}
                for i, (tag, idx) in enumerate(dg.provenance)
            ],
            "edge_classes": list(dg.edge_classes),
        }
        _write(args, _json_out(payload))
    return 0


def _cmd_solve(args) -> int:
    inst = _single_instance(args)
    g = inst.graph
    if args.derived != "none":
        g = _DERIVED[args.derived](g).graph
    try:
        cert = solve_dimension(g, args.kind, budget=args.budget)
    except GraphError as exc:
        _write(args, _json_out({"error": str(exc), "instance": inst.id, "kind": args.kind,
                                "derived": args.derived}))
        return 1
    payload = {
        "certificate": {
            "kind": cert.kind,
            "value": cert.value,
            "vertices": list(cert.vertices),
            "forced": list(cert.forced),
        },
        "derived": args.derived,
        "graph": _graph_dict(g),
        "instance": inst.id,
    }
    _write(args, _json_out(payload))
    return 0


def _emit_report(args, report: Report) -> None:
    if args.format == "csv":
        _write(args, report.to_csv())
    else:
        _write(args, report.to_json(timings=args.timings))


def _cmd_verify(args) -> int:
    instances = _corpus(args)
    theorems = None
    if args.theorems and args.theorems != "all":
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    source = "default-corpus" if not (args.input or args.family) else "flags"
    report = run_checks(instances, theorems=theorems, budget=args.budget,
                        phi_cap=args.phi_cap, source=source)
    _emit_report(args, report)
    return report.exit_code(strict=args.strict)


def _cmd_explore(args) -> int:
    instances = _corpus(args)
    source = "default-corpus" if not (args.input or args.family) else "flags"
    report = explore(instances, target=args.target, budget=args.budget, source=source)
    _emit_report(args, report)
    return report.exit_code(strict=args.strict)


def _add_input_options(p: argparse.ArgumentParser, multiple: bool) -> None:
    if multiple:
        p.add_argument("--input", action="append", metavar="FILE",
                       help="graph file (graph6 or edge list); repeatable")
        p.add_argument("--family", action="append", metavar="SPEC",
                       help="family name (with --n/--cycles/--seed) or inline "
                            "spec like random_cactus:n=10,cycles=2,seed=1..30; repeatable")
    else:
        p.add_argument("--input", metavar="FILE", help="graph file (graph6 or edge list)")
        p.add_argument("--family", metavar="SPEC",
                       help="family name (with --n/--cycles/--seed) or inline spec")
    p.add_argument("--n", metavar="N", help="size or range A..B for --family")
    p.add_argument("--cycles", metavar="C", help="cycle count or range for random_cactus")
    p.add_argument("--seed", metavar="S", help="seed or range for random families")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdimlab",
        description="Exact metric, edge, and mixed metric dimension of graphs "
                    "and their subdivision, middle, and total derivatives.",
    )
    parser.add_argument("--version", action="version", version=f"mdimlab {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a family graph")
    _add_input_options(p, multiple=False)
    p.add_argument("--format", choices=[EDGE_LIST, GRAPH6, "dot", "json"], default=EDGE_LIST)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("transform", help="build a derived graph with provenance")
    _add_input_options(p, multiple=False)
    p.add_argument("--derived", choices=["s", "m", "t", "l"], required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("solve", help="exact dimension with a witness certificate")
    _add_input_options(p, multiple=False)
    p.add_argument("--kind", choices=list(KINDS), required=True)
    p.add_argument("--derived", choices=["none", "s", "m", "t"], default="none")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="run named checks over a corpus")
    _add_input_options(p, multiple=True)
    p.add_argument("--theorems", default="all",
                   help=f"comma list from: {', '.join(THEOREM_IDS)} (default all)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--phi-cap", type=int, default=DEFAULT_PHI_CAP)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero when any check was skipped for budget reasons")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings (breaks byte-identical output)")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="scan for subdivision-gap behavior")
    _add_input_options(p, multiple=True)
    p.add_argument("--target", choices=list(EXPLORE_TARGETS), required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"mdimlab: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"mdimlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
