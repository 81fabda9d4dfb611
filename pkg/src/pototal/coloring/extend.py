"""Extenders: colour back the elements removed (or erased) by one reduction.

Every extender takes the graph ``g`` *before* the reduction, the lists, a
colouring ``phi`` of the reduced graph and the reduced configuration. It
returns a new colouring of all of ``g`` that agrees with ``phi`` on every
element the reduction did not erase.
"""

from __future__ import annotations

from typing import Mapping

from pototal.coloring import lemmas
from pototal.coloring.core import (
    Element,
    HypothesisViolation,
    available_list,
    element_key,
    element_label,
    in_graph,
)
from pototal.coloring.gadget import color_cycle_edges_2lists
from pototal.diagram import edge_key
from pototal.graph import Graph
from pototal.structure import Configuration


def reduced_graph(g: Graph, c: Configuration) -> Graph:
    """The smaller graph the engine recurses on after reducing ``c``."""
    b = c.bindings
    if c.tag == "A":
        return g.without_vertices([b["u"]])
    if c.tag == "B":
        return g.without_vertices([b[r] for r in ("u1", "u2", "u3", "v2", "v3")])
    h = g.without_vertices([b["u2"], b["u4"]])
    if c.tag == "E":
        h = h.without_edges([edge_key(b["u3"], b["v"])])
    return h


def erased_elements(c: Configuration) -> list[Element]:
    """Elements of the reduced graph whose colours are discarded before extending."""
    e = lemmas.element
    if c.tag == "E":
        return [e(c, "v")]
    if c.tag == "F":
        return [e(c, "u3"), e(c, "u3-v"), e(c, "v")]
    if c.tag == "G":
        return [e(c, "u1"), e(c, "u3"), e(c, "u1-u3")]
    return []


def reopened_elements(g: Graph, c: Configuration) -> list[Element]:
    """Everything left uncoloured when the extender starts."""
    h = reduced_graph(g, c)
    gone = [x for x in g.elements() if not in_graph(h, x)]
    return sorted(set(gone) | set(erased_elements(c)), key=element_key)


def _erase(phi: Mapping, c: Configuration) -> dict:
    out = dict(phi)
    for x in erased_elements(c):
        out.pop(x, None)
    return out


def _avail(g: Graph, L: Mapping, phi: Mapping, elems) -> dict[Element, set[int]]:
    return {x: available_list(g, L, phi, x) for x in elems}


def _least(g: Graph, L: Mapping, phi: dict, x: Element, lemma: str) -> None:
    options = available_list(g, L, phi, x)
    if not options:
        raise HypothesisViolation(lemma, [f"no colour left for {element_label(x)}"])
    phi[x] = min(options)


def extend_low_degree(g: Graph, L: Mapping, phi: Mapping, v: int) -> dict:
    """Colour the pendant edge (if any) and then the vertex ``v``."""
    out = dict(phi)
    for w in sorted(g.neighbors(v)):
        _least(g, L, out, edge_key(v, w), "low-degree extension")
    _least(g, L, out, v, "low-degree extension")
    return out


def extend_config_a(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    """Greedy order uw, uv, u for a 2-vertex u whose neighbour v has degree <= 4."""
    u, v = c["u"], c["v"]
    (w,) = g.neighbors(u) - {v}
    out = dict(phi)
    for x in (edge_key(u, w), edge_key(u, v), u):
        _least(g, L, out, x, "config A extension")
    return out


def extend_config_b(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    """Colour v1v3 and v2v4 first, then complete the path gadget."""
    e = lemmas.element
    v1v3, v2v4 = e(c, "v1-v3"), e(c, "v2-v4")
    a_opts = sorted(available_list(g, L, phi, v1v3))
    b_opts = sorted(available_list(g, L, phi, v2v4))
    common = [(a, a) for a in a_opts if a in set(b_opts)]
    others = [(a, b) for a in a_opts for b in b_opts if a != b]
    elems = [e(c, n) for n in lemmas.B_ELEMENTS]
    last: list[str] = ["no colours available for v1v3 or v2v4"]
    for a, b in common + others:
        prepared = {**phi, v1v3: a, v2v4: b}
        avail = _avail(g, L, prepared, elems)
        last = lemmas.lemma_b_violations(c, avail)
        if not last:
            return {**prepared, **lemmas.solve_lemma_b(g, c, avail)}
    raise HypothesisViolation("config B extension", last)


def extend_config_c(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    """Four cycle edges from 2-lists, then the two 2-vertices u2 and u4."""
    e = lemmas.element
    cycle = [e(c, n) for n in ("u1-u2", "u2-u3", "u3-u4", "u1-u4")]
    avail = _avail(g, L, phi, cycle)
    short = [f"|L_av({x})| = {len(avail[x])} < 2" for x in cycle if len(avail[x]) < 2]
    if short:
        raise HypothesisViolation("config C extension", short)
    out = {**phi, **color_cycle_edges_2lists(cycle, avail)}
    for x in (c["u2"], c["u4"]):
        _least(g, L, out, x, "config C extension")
    return out


def extend_config_d(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    avail = _avail(g, L, phi, [lemmas.element(c, n) for n in lemmas.D_ELEMENTS])
    return {**phi, **lemmas.solve_lemma_d(g, c, avail)}


def extend_config_e(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    base = _erase(phi, c)
    avail = _avail(g, L, base, [lemmas.element(c, n) for n in lemmas.E_ELEMENTS])
    return {**base, **lemmas.solve_case_e(g, c, avail)}


def extend_config_f(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    base = _erase(phi, c)
    avail = _avail(g, L, base, [lemmas.element(c, n) for n in lemmas.F_ELEMENTS])
    return {**base, **lemmas.solve_lemma_f(g, c, avail)}


def extend_config_g(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> dict:
    base = _erase(phi, c)
    avail = _avail(g, L, base, [lemmas.element(c, n) for n in lemmas.G_ELEMENTS])
    return {**base, **lemmas.solve_lemma_g(g, c, avail)}


EXTENDERS = {
    "A": extend_config_a,
    "B": extend_config_b,
    "C": extend_config_c,
    "D": extend_config_d,
    "E": extend_config_e,
    "F": extend_config_f,
    "G": extend_config_g,
}

# Counting claims made for each reduction, checked against the actual lists.
_CLAIMS = {
    "B": ((("v1-v2", "v1-v3", "v2-v4", "v3-v4"), 3),),
    "C": ((("u1-u2", "u2-u3", "u3-u4", "u1-u4"), 2), (("u2", "u4"), 4)),
    "D": (
        (("u2-u4",), 6),
        (("u2", "u4"), 4),
        (("u1-u2", "u1-u4"), 2),
        (("u2-u3", "u3-u4"), 3),
    ),
    "E": lemmas.E_BOUNDS,
    "F": lemmas.F_BOUNDS,
    "G": lemmas.G_BOUNDS,
}


def claim_violations(g: Graph, L: Mapping, phi: Mapping, c: Configuration) -> list[str]:
    """Which of the list-size claims for this reduction fail on ``phi``."""
    bounds = _CLAIMS.get(c.tag)
    if bounds is None:
        return []
    base = _erase(phi, c)
    names = [n for group, _ in bounds for n in group]
    avail = _avail(g, L, base, [lemmas.element(c, n) for n in names])
    return lemmas.bound_failures(c, avail, bounds)
