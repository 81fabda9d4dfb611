"""Reduce-then-extend list total colouring of pseudo-outerplanar graphs.

The engine repeatedly strips a vertex of degree at most one or reduces a
configuration, pushing each step on a stack. Once the graph is empty (or an
irreducible remainder has been handed to the oracle) the stack is replayed
in reverse, each extender colouring back what its reduction removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from pototal.coloring.core import (
    ColoringError,
    HypothesisViolation,
    NotColorable,
    NotReducible,
    UndersizedLists,
    element_key,
    in_graph,
    neighborhood,
    required_list_size,
    verify_total_coloring,
)
from pototal.coloring.extend import (
    EXTENDERS,
    claim_violations,
    extend_low_degree,
    reduced_graph,
    reopened_elements,
)
from pototal.coloring.gadget import SearchLimit, backtrack
from pototal.diagram import Diagram, DiagramError, to_graph, validate_diagram
from pototal.graph import Graph
from pototal.structure import Configuration, find_configuration, iter_configurations

DEFAULT_ORACLE_FALLBACK_N = 10
REPAIR_NODE_LIMIT = 200_000


class OracleExhausted(ColoringError):
    """The exact fallback ran out of search budget."""


@dataclass
class ColoringResult:
    coloring: dict
    trace: list[dict] = field(default_factory=list)


@dataclass(frozen=True)
class _Step:
    graph: Graph  # the graph before this reduction
    tag: str
    config: Configuration | None = None
    vertex: int | None = None


def _guaranteed(g: Graph, L: Mapping, c: Configuration) -> bool:
    """Whether degree counting alone ensures the extender's hypotheses.

    Only F and G can fail: their erased vertices keep at most
    ``|L| - 2(d - 3)`` colours, which drops below two once d is large.
    """
    b = c.bindings
    d = g.degree

    def room(v: int) -> int:
        return len(L[v]) - 2 * (d(v) - 3)

    if c.tag == "F":
        return room(b["u3"]) >= 2
    if c.tag == "G":
        u1, u3 = b["u1"], b["u3"]
        u1u3 = (min(u1, u3), max(u1, u3))
        return room(u1) >= 2 and room(u3) >= 2 and len(L[u1u3]) - (d(u1) + d(u3) - 6) >= 2
    return True


def choose_configuration(g: Graph, L: Mapping) -> Configuration | None:
    """The least configuration whose extension is guaranteed by counting.

    Falls back to the overall least configuration when none is.
    """
    first = find_configuration(g)
    if first is None or _guaranteed(g, L, first):
        return first
    for c in iter_configurations(g, tags=("F", "G")):
        if c > first and _guaranteed(g, L, c):
            return c
    return first


def _low_degree_vertex(g: Graph) -> int | None:
    return next((v for v in g.vertices if g.degree(v) <= 1), None)


def _oracle_color(g: Graph, L: Mapping, budget) -> dict:
    from pototal.oracle import BudgetExhausted, Found, brute_force_l_total

    result = brute_force_l_total(g, L, budget)
    if isinstance(result, Found):
        return result.coloring
    if isinstance(result, BudgetExhausted):
        raise OracleExhausted(f"oracle budget exhausted after {result.nodes} nodes")
    raise NotColorable("no total colouring exists from the given lists")


def repair_extension(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    """Extend ``phi`` over ``c`` when its extender's hypotheses do not hold.

    Recolours everything within distance 1, 2, then 3 of the reopened
    elements by exact search, and the whole graph as a last resort.
    """
    seeds = reopened_elements(g, c)
    core = {v for x in seeds for v in ((x,) if isinstance(x, int) else x)}
    ball = set(core)
    for _ in range(3):
        ball |= {w for v in ball for w in g.neighbors(v)}
        free = [x for x in g.elements() if (x in ball if isinstance(x, int) else bool(set(x) & ball))]
        result = _recolor(g, L, phi, free)
        if result is not None:
            return result
    result = _recolor(g, L, phi, list(g.elements()))
    if result is None:
        raise NotColorable("local repair and full search both failed")
    return result


def _recolor(g: Graph, L: Mapping, phi: Mapping, free: list) -> dict | None:
    freeset = set(free)
    fixed = {x: c for x, c in phi.items() if x not in freeset and in_graph(g, x)}
    domains = {x: set(L[x]) - {fixed[y] for y in neighborhood(g, x) if y in fixed} for x in free}
    nbrs = {x: {y for y in neighborhood(g, x) if y in freeset} for x in free}
    try:
        sol = backtrack(free, domains, nbrs, node_limit=REPAIR_NODE_LIMIT)
    except SearchLimit:
        return None
    return None if sol is None else {**fixed, **sol}


def _as_graph(d: Diagram | Graph) -> Graph:
    if isinstance(d, Graph):
        return d
    report = validate_diagram(d)
    if not report.valid:
        raise DiagramError("invalid diagram: " + "; ".join(report.problems))
    return to_graph(d)


def color_list_total(
    d: Diagram | Graph,
    L: Mapping,
    *,
    oracle_fallback_n: int = DEFAULT_ORACLE_FALLBACK_N,
    force_oracle: bool = False,
    budget=None,
) -> ColoringResult:
    """An ``L``-total colouring of the graph of ``d``.

    Raises :class:`UndersizedLists` when some list is shorter than
    ``max(6, Delta + 1)``, unless ``force_oracle`` asks for exact search.
    """
    g = _as_graph(d)
    missing = [x for x in g.elements() if x not in L]
    if missing:
        raise ColoringError(f"{len(missing)} elements have no list, first {missing[0]}")
    required = required_list_size(g)
    smallest = min((len(L[x]) for x in g.elements()), default=required)
    if smallest < required:
        if not force_oracle:
            raise UndersizedLists(required, smallest)
        phi = _oracle_color(g, L, budget)
        return ColoringResult(phi, [{"tag": "ORACLE", "bindings": {}}])

    stack: list[_Step] = []
    h = g
    base: dict = {}
    base_trace: list[dict] = []
    while h.n_vertices:
        v = _low_degree_vertex(h)
        if v is not None:
            stack.append(_Step(h, "LOW", vertex=v))
            h = h.without_vertices([v])
            continue
        c = choose_configuration(h, L)
        if c is None:
            if h.n_vertices > oracle_fallback_n:
                raise NotReducible(h)
            base = _oracle_color(h, L, budget)
            base_trace = [{"tag": "ORACLE", "bindings": {}}]
            break
        stack.append(_Step(h, c.tag, config=c))
        h = reduced_graph(h, c)

    phi = dict(base)
    trace: list[dict] = []
    for step in reversed(stack):
        if step.tag == "LOW":
            phi = extend_low_degree(step.graph, L, phi, step.vertex)
            trace.append({"tag": "LOW", "bindings": {"v": step.vertex}})
            continue
        c = step.config
        claims_ok = not claim_violations(step.graph, L, phi, c)
        repaired = False
        try:
            phi = EXTENDERS[c.tag](step.graph, L, phi, c)
        except HypothesisViolation:
            phi = repair_extension(step.graph, L, phi, c)
            repaired = True
        trace.append(
            {"tag": c.tag, "bindings": c.bindings, "claims_ok": claims_ok, "repaired": repaired}
        )
    trace.reverse()
    trace += base_trace

    report = verify_total_coloring(g, L, phi)
    if not report.valid:  # engine bug, never a user error
        raise AssertionError("engine produced an invalid colouring: " + "; ".join(report.lines()))
    return ColoringResult(dict(sorted(phi.items(), key=lambda kv: element_key(kv[0]))), trace)
