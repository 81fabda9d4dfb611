"""Command-line interface.

Exit codes: 0 success, 1 invalid input or failed verification, 2 not
colourable / counterexample / irreducible input, 3 oracle budget exhausted,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from pototal.coloring.core import (
    ColoringError,
    HypothesisViolation,
    ListAssignment,
    ListFormatError,
    NotColorable,
    NotReducible,
    UndersizedLists,
    element_key,
    element_label,
    parse_element_label,
    parse_lists,
    verify_total_coloring,
)
from pototal.coloring.engine import OracleExhausted, color_list_total
from pototal.diagram import Diagram, DiagramError, parse_diagram, print_diagram, to_graph, validate_diagram
from pototal.generator import MAX_ENUMERATION_N, GenParams, InfeasibleParams, enumerate_diagrams, gen_random_diagram
from pototal.graph import Graph
from pototal.oracle import (
    BudgetExhausted,
    Counterexample,
    Found,
    OracleBudget,
    OracleBudgetError,
    brute_force_l_total,
    sample_choosability,
    total_chromatic_number,
)
from pototal.structure import find_configuration

OK, INVALID, NOT_COLORABLE, BUDGET, INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    """Bad input detected by the CLI; maps to exit code 1."""


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_diagram(path: str) -> tuple[Diagram, Graph]:
    try:
        d = parse_diagram(_read(path))
    except DiagramError as exc:
        raise UsageError(f"{path}: {exc}") from None
    report = validate_diagram(d)
    if not report.valid:
        raise UsageError(f"{path}: invalid diagram: " + "; ".join(report.problems))
    return d, to_graph(d)


def _load_lists(args, g: Graph) -> ListAssignment:
    if getattr(args, "uniform", None) is not None:
        if args.uniform < 1:
            raise UsageError("--uniform needs a positive list size")
        return ListAssignment.uniform(g, args.uniform)
    if not getattr(args, "lists", None):
        raise UsageError("give --lists FILE or --uniform K")
    try:
        return parse_lists(_read(args.lists), g)
    except ListFormatError as exc:
        raise UsageError(f"{args.lists}: {exc}") from None


def _budget(args) -> OracleBudget:
    if getattr(args, "budget", None) is not None:
        if args.budget < 1:
            raise UsageError("--budget must be at least 1")
        return OracleBudget(args.budget)
    try:
        return OracleBudget.from_env()
    except ValueError:
        raise UsageError("PO_COLOR_BUDGET must be a positive integer") from None


def coloring_to_json(phi: dict, *, valid: bool, trace: list | None = None) -> dict:
    doc = {element_label(x): c for x, c in sorted(phi.items(), key=lambda kv: element_key(kv[0]))}
    doc["valid"] = valid
    doc["algorithm_trace"] = trace or []
    return doc


def coloring_from_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"coloring is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("coloring JSON must be an object")
    phi = {}
    for key, value in doc.items():
        if key in ("valid", "algorithm_trace"):
            continue
        try:
            x = parse_element_label(key)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if isinstance(value, bool) or not isinstance(value, int):
            raise UsageError(f"colour of {key} must be an integer")
        phi[x] = value
    return phi


# -- commands -----------------------------------------------------------------


def cmd_color(args) -> int:
    d, g = _load_diagram(args.diagram)
    L = _load_lists(args, g)
    try:
        result = color_list_total(d, L, force_oracle=args.force_oracle, budget=_budget(args))
    except UndersizedLists as exc:
        _err(f"error: {exc}; pass --force-oracle to search exactly")
        return INVALID
    report = verify_total_coloring(g, L, result.coloring)
    if not report.valid:
        for line in report.lines():
            _err(line)
        return INTERNAL
    trace = result.trace if args.trace else None
    _emit(_dump(coloring_to_json(result.coloring, valid=True, trace=trace)), args.out)
    return OK


def cmd_verify(args) -> int:
    _, g = _load_diagram(args.diagram)
    L = _load_lists(args, g)
    phi = coloring_from_json(_read(args.coloring))
    report = verify_total_coloring(g, L, phi)
    for line in report.lines():
        print(line)
    if report.valid:
        print("valid")
        return OK
    return INVALID


def cmd_find_config(args) -> int:
    _, g = _load_diagram(args.diagram)
    if g.n_vertices and g.min_degree() < 2:
        low = next(v for v in g.vertices if g.degree(v) <= 1)
        sys.stdout.write(_dump({"reducible": "low-degree", "vertex": low}))
        return OK
    c = find_configuration(g)
    if c is None:
        _err("no configuration found although minimum degree is at least 2")
        return NOT_COLORABLE
    sys.stdout.write(_dump({"tag": c.tag, "bindings": c.bindings}))
    return OK


def cmd_gen(args) -> int:
    try:
        p = GenParams(
            n_vertices=args.n,
            n_blocks=args.blocks,
            chord_density=args.chord_density,
            crossing_density=args.crossing_density,
            boundary_edge_density=args.boundary_density,
            ensure_min_degree_2=args.min_degree_2,
            seed=args.seed,
        )
    except InfeasibleParams as exc:
        raise UsageError(str(exc)) from None
    _emit(print_diagram(gen_random_diagram(p)), args.out)
    return OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUMERATION_N:
        raise UsageError(f"--n must lie in 1..{MAX_ENUMERATION_N}")
    diagrams = enumerate_diagrams(args.n, min_degree_2_only=args.min_degree_2)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        count = 0
        for i, d in enumerate(diagrams):
            (out / f"n{args.n}_{i:05d}.pod").write_text(print_diagram(d), encoding="utf-8")
            count = i + 1
        print(count)
    else:
        for d in diagrams:
            sys.stdout.write(print_diagram(d) + "\n")
    return OK


def cmd_oracle(args) -> int:
    _, g = _load_diagram(args.diagram)
    b = _budget(args)
    if args.oracle_cmd == "color":
        L = _load_lists(args, g)
        result = brute_force_l_total(g, L, b)
        if isinstance(result, Found):
            sys.stdout.write(_dump({"result": "Found", "coloring": coloring_to_json(result.coloring, valid=True)}))
            return OK
        if isinstance(result, BudgetExhausted):
            sys.stdout.write(_dump({"result": "BudgetExhausted", "nodes": result.nodes}))
            return BUDGET
        sys.stdout.write(_dump({"result": "NotColorable", "nodes": result.nodes}))
        return NOT_COLORABLE
    if args.oracle_cmd == "chi":
        try:
            chi = total_chromatic_number(g, b)
        except OracleBudgetError as exc:
            _err(str(exc))
            return BUDGET
        sys.stdout.write(_dump({"total_chromatic_number": chi}))
        return OK
    if args.trials < 1 or args.k < 1 or args.palette < args.k:
        raise UsageError("need --trials >= 1 and 1 <= --k <= --palette")
    try:
        verdict = sample_choosability(g, args.k, args.trials, args.palette, args.seed, b)
    except OracleBudgetError as exc:
        _err(str(exc))
        return BUDGET
    if isinstance(verdict, Counterexample):
        lists = {element_label(x): sorted(verdict.lists[x]) for x in g.elements()}
        sys.stdout.write(_dump({"result": "Counterexample", "trial": verdict.trial, "lists": lists}))
        return NOT_COLORABLE
    sys.stdout.write(_dump({"result": "NoCounterexampleFound", "trials": verdict.trials}))
    return OK


def export_dot(d: Diagram, phi: dict | None = None) -> str:
    """DOT text with each block's boundary laid out on its own circle."""
    phi = phi or {}
    pos: dict[int, tuple[float, float]] = {}
    for i, block in enumerate(d.blocks):
        cx = 3.0 * i
        n = len(block)
        for j, v in enumerate(block.boundary):
            if v in pos:
                continue
            angle = 2 * math.pi * j / max(n, 1)
            pos[v] = (cx + math.cos(angle), math.sin(angle))
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(d.n_vertices):
        x, y = pos.get(v, (0.0, 0.0))
        label = f"{v}" if v not in phi else f"{v}:{phi[v]}"
        lines.append(f'  {v} [label="{label}", pos="{x:.3f},{y:.3f}!"];')
    for u, v in sorted(d.edges()):
        attr = f' [label="{phi[(u, v)]}"]' if (u, v) in phi else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    d, _ = _load_diagram(args.diagram)
    phi = coloring_from_json(_read(args.coloring)) if args.coloring else None
    _emit(export_dot(d, phi), args.out)
    return OK


# -- argument parsing ----------------------------------------------------------


def _add_lists(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--lists", metavar="FILE.lst")
    group.add_argument("--uniform", type=int, metavar="K", help="lists {1..K} on every element")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pototal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="list total colouring of a diagram")
    p.add_argument("--diagram", required=True, metavar="FILE.pod")
    _add_lists(p)
    p.add_argument("--out", metavar="FILE.json")
    p.add_argument("--trace", action="store_true", help="include the reduction sequence")
    p.add_argument("--force-oracle", action="store_true", help="use exact search for short lists")
    p.add_argument("--budget", type=int, help="oracle node budget")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a colouring")
    p.add_argument("--diagram", required=True, metavar="FILE.pod")
    _add_lists(p)
    p.add_argument("--coloring", required=True, metavar="FILE.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("find-config", help="least reducible configuration")
    p.add_argument("--diagram", required=True, metavar="FILE.pod")
    p.set_defaults(func=cmd_find_config)

    p = sub.add_parser("gen", help="random diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--chord-density", type=float, default=0.5)
    p.add_argument("--crossing-density", type=float, default=0.5)
    p.add_argument("--boundary-density", type=float, default=1.0)
    p.add_argument("--min-degree-2", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE.pod")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="all one-block diagrams on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree-2", action="store_true")
    p.add_argument("--out-dir", metavar="DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="exact brute-force queries")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("color")
    q.add_argument("--diagram", required=True, metavar="FILE.pod")
    _add_lists(q)
    q.add_argument("--budget", type=int)
    q = osub.add_parser("chi")
    q.add_argument("--diagram", required=True, metavar="FILE.pod")
    q.add_argument("--budget", type=int)
    q = osub.add_parser("sample")
    q.add_argument("--diagram", required=True, metavar="FILE.pod")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--palette", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export-dot", help="Graphviz rendering")
    p.add_argument("--diagram", required=True, metavar="FILE.pod")
    p.add_argument("--coloring", metavar="FILE.json")
    p.add_argument("--out", metavar="FILE.dot")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return OK if exc.code == 0 else INVALID
    try:
        return args.func(args)
    except UsageError as exc:
        _err(f"error: {exc}")
        return INVALID
    except NotColorable as exc:
        _err(f"not colourable: {exc}")
        return NOT_COLORABLE
    except (OracleExhausted, OracleBudgetError) as exc:
        _err(f"budget exhausted: {exc}")
        return BUDGET
    except NotReducible as exc:
        _err(f"internal: {exc}")
        return INTERNAL
    except (HypothesisViolation, ColoringError, AssertionError) as exc:
        _err(f"internal: {exc}")
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
