"""Small exact completion problems left behind by a reduction.

A gadget is a handful of uncoloured elements, each with a precomputed
available list, plus the pairs among them that must get distinct colours.
Colours on already-coloured elements are folded into the available lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from pototal.coloring.core import (
    Element,
    GadgetTooLarge,
    available_list,
    element_key,
    neighborhood,
)
from pototal.graph import Graph

MAX_GADGET = 16


@dataclass(frozen=True)
class GadgetProblem:
    uncolored: tuple[Element, ...]
    avail: Mapping[Element, frozenset[int]]
    conflicts: frozenset[frozenset]

    def neighbors(self) -> dict[Element, set[Element]]:
        nbrs: dict[Element, set[Element]] = {x: set() for x in self.uncolored}
        for pair in self.conflicts:
            a, b = tuple(pair)
            nbrs[a].add(b)
            nbrs[b].add(a)
        return nbrs

    def restrict(self, elements: Iterable[Element], fixed: Mapping[Element, int]) -> "GadgetProblem":
        """Sub-problem on ``elements`` after fixing the colours in ``fixed``."""
        keep = tuple(sorted(set(elements), key=element_key))
        nbrs = self.neighbors()
        avail = {
            x: frozenset(self.avail[x] - {fixed[y] for y in nbrs[x] if y in fixed}) for x in keep
        }
        conflicts = frozenset(p for p in self.conflicts if p <= set(keep))
        return GadgetProblem(keep, avail, conflicts)

    def is_solution(self, assignment: Mapping[Element, int]) -> bool:
        if set(assignment) != set(self.uncolored):
            return False
        if any(assignment[x] not in self.avail[x] for x in self.uncolored):
            return False
        return all(len({assignment[x] for x in pair}) == 2 for pair in self.conflicts)


def gadget_from_avail(g: Graph, uncolored: Iterable[Element], avail: Mapping[Element, Iterable[int]]) -> GadgetProblem:
    """Gadget whose conflicts are the adjacencies/incidences of ``g``."""
    elems = tuple(sorted(set(uncolored), key=element_key))
    members = set(elems)
    conflicts = set()
    for x in elems:
        for y in neighborhood(g, x):
            if y in members:
                conflicts.add(frozenset((x, y)))
    return GadgetProblem(elems, {x: frozenset(avail[x]) for x in elems}, frozenset(conflicts))


def build_gadget(g: Graph, L: Mapping, phi: Mapping, uncolored: Iterable[Element]) -> GadgetProblem:
    uncolored = list(uncolored)
    avail = {x: available_list(g, L, phi, x) for x in uncolored}
    return gadget_from_avail(g, uncolored, avail)


class SearchLimit(Exception):
    pass


def backtrack(
    elements: Sequence[Element],
    domains: Mapping[Element, Iterable[int]],
    nbrs: Mapping[Element, set[Element]],
    node_limit: int | None = None,
) -> dict[Element, int] | None:
    """Most-constrained-first backtracking with forward checking.

    Ties are broken by canonical element order and values are tried in
    increasing order, so the result is deterministic. Raises
    :class:`SearchLimit` once more than ``node_limit`` nodes are visited.
    """
    order = {x: i for i, x in enumerate(sorted(elements, key=element_key))}
    live = {x: set(domains[x]) for x in elements}
    assignment: dict[Element, int] = {}
    nodes = 0

    def pick():
        best = None
        for x in live:
            if x not in assignment:
                key = (len(live[x]), order[x])
                if best is None or key < best[0]:
                    best = (key, x)
        return best[1]

    def rec() -> bool:
        nonlocal nodes
        if len(assignment) == len(live):
            return True
        x = pick()
        for c in sorted(live[x]):
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise SearchLimit
            pruned = []
            ok = True
            for y in nbrs[x]:
                if y not in assignment and c in live[y]:
                    live[y].discard(c)
                    pruned.append(y)
                    if not live[y]:
                        ok = False
            assignment[x] = c
            if ok and rec():
                return True
            del assignment[x]
            for y in pruned:
                live[y].add(c)
        return False

    if any(not live[x] for x in live):
        return None
    return dict(assignment) if rec() else None


def solve_gadget(p: GadgetProblem, max_size: int = MAX_GADGET) -> dict[Element, int] | None:
    """Exhaustively complete ``p``; ``None`` when no completion exists."""
    if len(p.uncolored) > max_size:
        raise GadgetTooLarge(f"gadget has {len(p.uncolored)} elements, limit is {max_size}")
    return backtrack(p.uncolored, p.avail, p.neighbors())


def color_cycle_edges_2lists(cycle: Sequence, avail: Mapping) -> dict:
    """Properly colour the four edges of a 4-cycle from lists of size >= 2.

    ``cycle`` lists the edges in cyclic order, so consecutive entries (and the
    last with the first) share a vertex.
    """
    if len(cycle) != 4:
        raise ValueError("expected the four edges of a 4-cycle")
    lists = []
    for e in cycle:
        options = sorted(avail[e])
        if len(options) < 2:
            raise ValueError(f"edge {e} has fewer than two available colours")
        lists.append(options[:2])
    n = len(cycle)
    if all(lst == lists[0] for lst in lists):
        a, b = lists[0]
        return {e: (a if i % 2 == 0 else b) for i, e in enumerate(cycle)}
    # Start at an edge owning a colour its predecessor lacks and walk forward;
    # the predecessor, coloured last, then has only one real constraint.
    for start in range(n):
        prev = lists[start - 1]
        spare = [c for c in lists[start] if c not in prev]
        if spare:
            break
    colors = {start: spare[0]}
    for step in range(1, n):
        i = (start + step) % n
        colors[i] = next(
            c for c in lists[i] if c != colors[(i - 1) % n] and (step < n - 1 or c != colors[start])
        )
    return {cycle[i]: colors[i] for i in range(n)}
