from __future__ import annotations

import itertools
import random

import pytest

from conftest import C4_EDGES, K4_EDGES, graph
from pototal.coloring import ListAssignment, color_list_total, required_list_size, verify_total_coloring
from pototal.diagram import to_graph
from pototal.generator import enumerate_diagrams, gen_random_lists
from pototal.oracle import (
    BudgetExhausted,
    Counterexample,
    Found,
    NoCounterexampleFound,
    NotColorable,
    OracleBudget,
    OracleBudgetError,
    brute_force_l_total,
    sample_choosability,
    total_chromatic_number,
)

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


def _exhaustive(g, L):
    """Try every assignment; only usable on very small graphs."""
    elems = g.elements()
    for combo in itertools.product(*(sorted(L[x]) for x in elems)):
        phi = dict(zip(elems, combo))
        if verify_total_coloring(g, L, phi).valid:
            return True
    return False


def test_k4_from_five_colours():
    g = graph(K4_EDGES)
    result = brute_force_l_total(g, ListAssignment.uniform(g, 5))
    assert isinstance(result, Found)
    assert verify_total_coloring(g, ListAssignment.uniform(g, 5), result.coloring).valid
    assert result.nodes >= len(g.elements())


def test_single_vertex():
    g = graph([], n=1)
    assert brute_force_l_total(g, {0: {1}}).coloring == {0: 1}


def test_triangle_from_two_colours():
    g = graph(TRIANGLE)
    assert isinstance(brute_force_l_total(g, ListAssignment.uniform(g, 2)), NotColorable)


@pytest.mark.parametrize(
    "edges, chi",
    [
        ([(0, 1)], 3),
        ([(0, 1), (1, 2)], 3),
        (TRIANGLE, 3),
        ([(i, (i + 1) % 6) for i in range(6)], 3),  # C6
        (C4_EDGES, 4),
        (K4_EDGES, 5),
        ([(0, i) for i in range(1, 5)], 5),  # star K_{1,4}
        ([(i, (i + 1) % 5) for i in range(5)], 4),  # C5
    ],
)
def test_total_chromatic_numbers(edges, chi):
    assert total_chromatic_number(graph(edges)) == chi


def test_k5_total_chromatic_number():
    k5 = graph([(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert total_chromatic_number(k5) == 5


def test_budget_exhaustion():
    g = graph(K4_EDGES)
    result = brute_force_l_total(g, ListAssignment.uniform(g, 4), OracleBudget(max_nodes=5))
    assert isinstance(result, BudgetExhausted) and result.nodes >= 5
    with pytest.raises(OracleBudgetError):
        total_chromatic_number(g, OracleBudget(max_nodes=5))
    with pytest.raises(ValueError):
        OracleBudget(max_nodes=0)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("PO_COLOR_BUDGET", "123")
    assert OracleBudget.from_env().max_nodes == 123
    monkeypatch.delenv("PO_COLOR_BUDGET")
    assert OracleBudget.from_env(77).max_nodes == 77


def test_sampling():
    k4 = graph(K4_EDGES)
    assert sample_choosability(k4, 6, 100, 9, seed=0) == NoCounterexampleFound(100)
    tri = graph(TRIANGLE)
    found = sample_choosability(tri, 2, 20, 2, seed=0)
    assert isinstance(found, Counterexample) and found.trial == 0
    assert isinstance(sample_choosability(graph(C4_EDGES), 4, 60, 6, seed=3), NoCounterexampleFound)
    with pytest.raises(ValueError):
        sample_choosability(tri, 3, 1, 2, seed=0)
    with pytest.raises(ValueError):
        sample_choosability(tri, 3, 0, 5, seed=0)


def test_agrees_with_exhaustive_search_on_tiny_graphs():
    rng = random.Random(8)
    shapes = [[(0, 1)], [(0, 1), (1, 2)], TRIANGLE, [(0, 1), (2, 3)]]
    for _ in range(300):
        g = graph(rng.choice(shapes))
        L = {x: set(rng.sample(range(1, 5), rng.randint(1, 3))) for x in g.elements()}
        result = brute_force_l_total(g, L)
        assert isinstance(result, Found) == _exhaustive(g, L)
        if isinstance(result, Found):
            assert verify_total_coloring(g, L, result.coloring).valid


def test_adding_colours_never_hurts():
    rng = random.Random(9)
    g = graph(C4_EDGES)
    for _ in range(100):
        L = {x: set(rng.sample(range(1, 6), 2)) for x in g.elements()}
        before = isinstance(brute_force_l_total(g, L), Found)
        x = rng.choice(g.elements())
        L[x] = L[x] | {rng.randint(1, 6)}
        after = isinstance(brute_force_l_total(g, L), Found)
        assert after or not before


def test_agrees_with_engine_on_enumerated_diagrams():
    for n in range(1, 7):
        for d in enumerate_diagrams(n):
            g = to_graph(d)
            L = ListAssignment.uniform(g, required_list_size(g))
            assert isinstance(brute_force_l_total(g, L), Found)
            assert verify_total_coloring(g, L, color_list_total(d, L).coloring).valid


def test_random_lists_on_enumerated_diagrams():
    for i, d in enumerate(enumerate_diagrams(6, min_degree_2_only=True)):
        if i % 10:
            continue
        g = to_graph(d)
        L = gen_random_lists(g, 6, 8, seed=i)
        assert isinstance(brute_force_l_total(g, L), Found)
