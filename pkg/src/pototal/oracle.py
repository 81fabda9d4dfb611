"""Brute-force reference solver for list total colourings of small graphs.

The search is deliberately plain: a fixed element order (vertices, then
edges, canonically sorted), colours tried in increasing order, and forward
checking as the only pruning. It is slow but easy to audit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping

from pototal.coloring.core import Element, ListAssignment, neighborhood, verify_total_coloring
from pototal.graph import Graph

DEFAULT_MAX_NODES = 2_000_000


@dataclass(frozen=True)
class OracleBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    timeout_hint: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")

    @classmethod
    def from_env(cls, default: int = DEFAULT_MAX_NODES) -> "OracleBudget":
        raw = os.environ.get("PO_COLOR_BUDGET")
        return cls(int(raw) if raw else default)


@dataclass(frozen=True)
class Found:
    coloring: dict
    nodes: int = 0


@dataclass(frozen=True)
class NotColorable:
    nodes: int = 0


@dataclass(frozen=True)
class BudgetExhausted:
    nodes: int = 0


OracleResult = Found | NotColorable | BudgetExhausted


class OracleBudgetError(RuntimeError):
    """Raised by the derived queries when the underlying search runs out of budget."""


def brute_force_l_total(g: Graph, L: Mapping, b: OracleBudget | None = None) -> OracleResult:
    """Decide whether ``g`` has a total colouring from the lists ``L``."""
    b = b or OracleBudget()
    order: list[Element] = list(g.elements())
    nbrs = {x: [y for y in neighborhood(g, x)] for x in order}
    live = {x: set(L[x]) for x in order}
    phi: dict[Element, int] = {}
    nodes = 0

    if any(not live[x] for x in order):
        return NotColorable(0)

    class _Out(Exception):
        pass

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        x = order[i]
        for c in sorted(live[x]):
            nodes += 1
            if nodes > b.max_nodes:
                raise _Out
            pruned = []
            ok = True
            for y in nbrs[x]:
                if y not in phi and c in live[y]:
                    live[y].discard(c)
                    pruned.append(y)
                    if not live[y]:
                        ok = False
            phi[x] = c
            if ok and rec(i + 1):
                return True
            del phi[x]
            for y in pruned:
                live[y].add(c)
        return False

    try:
        solved = rec(0)
    except _Out:
        return BudgetExhausted(nodes)
    if not solved:
        return NotColorable(nodes)
    result = dict(phi)
    assert verify_total_coloring(g, L, result).valid
    return Found(result, nodes)


def total_chromatic_number(g: Graph, b: OracleBudget | None = None) -> int:
    """Least ``k`` such that ``g`` has a total colouring from ``{1..k}``."""
    b = b or OracleBudget()
    k = g.max_degree() + 1
    while True:
        result = brute_force_l_total(g, ListAssignment.uniform(g, k), b)
        if isinstance(result, Found):
            return k
        if isinstance(result, BudgetExhausted):
            raise OracleBudgetError(f"budget of {b.max_nodes} nodes exhausted at k = {k}")
        k += 1


@dataclass(frozen=True)
class NoCounterexampleFound:
    trials: int


@dataclass(frozen=True)
class Counterexample:
    lists: ListAssignment
    trial: int = field(default=0)


def sample_choosability(
    g: Graph,
    k: int,
    trials: int,
    palette: int,
    seed: int,
    b: OracleBudget | None = None,
) -> NoCounterexampleFound | Counterexample:
    """Look for a ``k``-list assignment without a total colouring by random sampling.

    Trial ``i`` draws its lists with seed ``seed + i``.
    """
    from pototal.generator import gen_random_lists

    if trials < 1:
        raise ValueError("trials must be at least 1")
    if palette < k:
        raise ValueError("palette must be at least k")
    b = b or OracleBudget()
    for i in range(trials):
        lists = gen_random_lists(g, k, palette, seed + i)
        result = brute_force_l_total(g, lists, b)
        if isinstance(result, NotColorable):
            return Counterexample(lists, i)
        if isinstance(result, BudgetExhausted):
            raise OracleBudgetError(f"budget of {b.max_nodes} nodes exhausted on trial {i}")
    return NoCounterexampleFound(trials)
