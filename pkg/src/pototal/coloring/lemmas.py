"""Extension contracts for configurations B, D, F and G.

Each ``*_violations`` function checks the list-size (and distinctness)
hypotheses under which the corresponding gadget is known to be completable.
Each ``solve_*`` function enforces those hypotheses, tries the staged
colouring order first and falls back to exhaustive search of the gadget.
"""

from __future__ import annotations

import itertools
from typing import Callable, Mapping, Sequence

from pototal.coloring.core import ColoringError, Element, HypothesisViolation, element_label
from pototal.coloring.gadget import GadgetProblem, gadget_from_avail, solve_gadget
from pototal.diagram import edge_key
from pototal.graph import Graph
from pototal.structure import Configuration


class ExtensionFailed(ColoringError):
    """A gadget satisfying its hypotheses had no completion."""


def element(c: Configuration, name: str) -> Element:
    """``"u2"`` names a bound vertex, ``"u2-u4"`` the edge between two of them."""
    if "-" in name:
        a, b = name.split("-")
        return edge_key(c[a], c[b])
    return c[name]


def _elements(c: Configuration, names: Sequence[str]) -> list[Element]:
    return [element(c, n) for n in names]


B_ELEMENTS = (
    "u1", "u2", "u3", "v2", "v3",
    "v1-v2", "v2-v3", "v3-v4",
    "v1-u1", "u1-v2", "v2-u2", "u2-v3", "v3-u3", "u3-v4",
)
B_BOUNDS = (
    (("v1-u1", "u3-v4", "v1-v2", "v3-v4"), 2),
    (("v2", "v3"), 3),
    (("v2-v3",), 4),
    (("u1-v2", "v2-u2", "u2-v3", "v3-u3"), 5),
    # Left implicit in the lemma: enough room to colour the 2-vertices last.
    (("u1", "u3"), 4),
    (("u2",), 5),
)

D_ELEMENTS = ("u2", "u4", "u2-u4", "u1-u2", "u2-u3", "u3-u4", "u1-u4")
D_BOUNDS = (
    (("u2-u4",), 6),
    (("u2", "u4"), 4),
    (("u1-u2", "u2-u3", "u3-u4", "u1-u4"), 2),
)

F_ELEMENTS = D_ELEMENTS + ("u3", "u3-v", "v")
F_BOUNDS = (
    (("u2-u4",), 6),
    (("u2", "u4"), 5),
    (("u2-u3", "u3-u4"), 4),
    (("u1-u2", "u1-u4", "u3-v", "u3", "v"), 2),
)

G_ELEMENTS = D_ELEMENTS + ("u1", "u3", "u1-u3")
G_BOUNDS = (
    (("u2", "u4", "u2-u4"), 6),
    (("u1-u2", "u2-u3", "u3-u4", "u1-u4"), 4),
    (("u1", "u3", "u1-u3"), 2),
)

# Case E: u3v and v get coloured first, then the D gadget is completed.
E_ELEMENTS = D_ELEMENTS + ("u3-v", "v")
E_BOUNDS = (
    (("u2-u4",), 6),
    (("u2", "u4"), 4),
    (("u1-u2", "u1-u4"), 2),
    (("u2-u3", "u3-u4"), 3),
    (("u3-v",), 2),
    (("v",), 3),
)


def bound_failures(c: Configuration, avail: Mapping, bounds) -> list[str]:
    failures = []
    for names, lo in bounds:
        for name in names:
            x = element(c, name)
            if len(avail[x]) < lo:
                failures.append(f"|L_av({name})| = {len(avail[x])} < {lo}")
    return failures


def _three_identical(c: Configuration, avail: Mapping, names: Sequence[str]) -> list[str]:
    sets = [frozenset(avail[element(c, n)]) for n in names]
    if all(len(s) == 2 for s in sets) and len(set(sets)) == 1:
        return [f"L_av({'), L_av('.join(names)}) are the same 2-list {sorted(sets[0])}"]
    return []


def lemma_b_violations(c: Configuration, avail: Mapping) -> list[str]:
    return bound_failures(c, avail, B_BOUNDS)


def lemma_d_violations(c: Configuration, avail: Mapping) -> list[str]:
    failures = bound_failures(c, avail, D_BOUNDS)
    a, b = set(avail[element(c, "u1-u2")]), set(avail[element(c, "u2-u3")])
    if len(a) == len(b) == 2 and a == b:
        failures.append(f"L_av(u1-u2) = L_av(u2-u3) = {sorted(a)}")
    return failures


def lemma_f_violations(c: Configuration, avail: Mapping) -> list[str]:
    return bound_failures(c, avail, F_BOUNDS) + _three_identical(c, avail, ("u3-v", "u3", "v"))


def lemma_g_violations(c: Configuration, avail: Mapping) -> list[str]:
    return bound_failures(c, avail, G_BOUNDS) + _three_identical(c, avail, ("u1", "u3", "u1-u3"))


def case_e_violations(c: Configuration, avail: Mapping) -> list[str]:
    return bound_failures(c, avail, E_BOUNDS)


def _proper_assignments(p: GadgetProblem):
    """All proper colourings of a (tiny) gadget in lexicographic order."""
    elems = p.uncolored
    for combo in itertools.product(*(sorted(p.avail[x]) for x in elems)):
        assignment = dict(zip(elems, combo))
        if all(assignment[a] != assignment[b] for a, b in map(tuple, p.conflicts)):
            yield assignment


def staged_solve(
    p: GadgetProblem,
    first: Sequence[Element],
    accept: Callable[[GadgetProblem], bool],
) -> dict | None:
    """Colour ``first`` so that the residual gadget passes ``accept``, then finish it."""
    head = p.restrict(first, {})
    tail_elems = [x for x in p.uncolored if x not in set(first)]
    for partial in _proper_assignments(head):
        tail = p.restrict(tail_elems, partial)
        if not accept(tail):
            continue
        rest = solve_gadget(tail)
        if rest is not None:
            return {**partial, **rest}
    return None


def _finish(p: GadgetProblem, staged: dict | None, lemma: str) -> dict:
    if staged is not None:
        return staged
    full = solve_gadget(p)
    if full is None:
        raise ExtensionFailed(
            f"{lemma}: no completion for gadget "
            + ", ".join(f"{element_label(x)}={sorted(p.avail[x])}" for x in p.uncolored)
        )
    return full


def _d_accept(c: Configuration) -> Callable[[GadgetProblem], bool]:
    return lambda tail: not lemma_d_violations(c, tail.avail)


def _stage1_accept(c: Configuration) -> Callable[[GadgetProblem], bool]:
    def accept(tail: GadgetProblem) -> bool:
        mid = tail.avail[element(c, "v2-v3")]
        v2 = tail.avail[element(c, "v2")]
        v1v2 = tail.avail[element(c, "v1-v2")]
        if len(mid) >= 3:
            return True
        if len(mid) != 2:
            return False
        return len(v2) != 2 or mid != v2 or v1v2 != v2

    return accept


def solve_lemma_b(g: Graph, c: Configuration, avail: Mapping) -> dict:
    failures = lemma_b_violations(c, avail)
    if failures:
        raise HypothesisViolation("config B extension", failures)
    p = gadget_from_avail(g, _elements(c, B_ELEMENTS), avail)
    first = _elements(c, ("v3", "v3-v4", "u3-v4", "v3-u3"))
    return _finish(p, staged_solve(p, first, _stage1_accept(c)), "config B extension")


def solve_lemma_d(g: Graph, c: Configuration, avail: Mapping) -> dict:
    failures = lemma_d_violations(c, avail)
    if failures:
        raise HypothesisViolation("config D extension", failures)
    p = gadget_from_avail(g, _elements(c, D_ELEMENTS), avail)
    return _finish(p, None, "config D extension")


def solve_case_e(g: Graph, c: Configuration, avail: Mapping) -> dict:
    failures = case_e_violations(c, avail)
    if failures:
        raise HypothesisViolation("config E extension", failures)
    p = gadget_from_avail(g, _elements(c, E_ELEMENTS), avail)
    first = _elements(c, ("u3-v", "v"))
    return _finish(p, staged_solve(p, first, _d_accept(c)), "config E extension")


def solve_lemma_f(g: Graph, c: Configuration, avail: Mapping) -> dict:
    failures = lemma_f_violations(c, avail)
    if failures:
        raise HypothesisViolation("config F extension", failures)
    p = gadget_from_avail(g, _elements(c, F_ELEMENTS), avail)
    first = _elements(c, ("u3", "u3-v", "v"))
    return _finish(p, staged_solve(p, first, _d_accept(c)), "config F extension")


def solve_lemma_g(g: Graph, c: Configuration, avail: Mapping) -> dict:
    failures = lemma_g_violations(c, avail)
    if failures:
        raise HypothesisViolation("config G extension", failures)
    p = gadget_from_avail(g, _elements(c, G_ELEMENTS), avail)
    first = _elements(c, ("u1", "u3", "u1-u3"))
    return _finish(p, staged_solve(p, first, _d_accept(c)), "config G extension")
