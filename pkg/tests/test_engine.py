from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph, k4, k23
from pototal.coloring import (
    ListAssignment,
    color_list_total,
    required_list_size,
    verify_total_coloring,
)
from pototal.coloring.core import ColoringError, NotReducible, UndersizedLists
from pototal.diagram import DiagramError, single_block, to_graph
from pototal.generator import GenParams, gen_random_diagram, gen_random_lists
from pototal.oracle import Found, brute_force_l_total
from pototal.structure import find_configuration


def _circulant(n, steps):
    return graph([(i, (i + s) % n) for i in range(n) for s in steps], n)


def test_single_edge():
    d = single_block([0, 1], [(0, 1)])
    g = to_graph(d)
    L = ListAssignment.uniform(g, 6)
    phi = color_list_total(d, L).coloring
    assert len({phi[0], phi[1], phi[(0, 1)]}) == 3


def test_k4_uniform_six():
    g = to_graph(k4())
    L = ListAssignment.uniform(g, 6)
    result = color_list_total(k4(), L)
    assert verify_total_coloring(g, L, result.coloring).valid
    assert result.trace[0]["tag"] == "D"
    assert list(result.coloring) == sorted(result.coloring, key=lambda x: (isinstance(x, tuple), x))


def test_k23_random_lists_agree_with_oracle():
    g = to_graph(k23())
    for seed in range(40):
        L = gen_random_lists(g, 6, 9, seed)
        assert isinstance(brute_force_l_total(g, L), Found)
        assert verify_total_coloring(g, L, color_list_total(k23(), L).coloring).valid


def test_undersized_lists_rejected():
    g = to_graph(k4())
    with pytest.raises(UndersizedLists) as exc:
        color_list_total(k4(), ListAssignment.uniform(g, 5))
    assert exc.value.required == 6 and exc.value.smallest == 5


def test_force_oracle_accepts_small_lists():
    g = to_graph(k4())
    L = ListAssignment.uniform(g, 5)
    result = color_list_total(k4(), L, force_oracle=True)
    assert result.trace == [{"tag": "ORACLE", "bindings": {}}]
    assert verify_total_coloring(g, L, result.coloring).valid


def test_missing_lists_rejected():
    g = to_graph(k4())
    L = dict(ListAssignment.uniform(g, 6))
    del L[(0, 2)]
    with pytest.raises(ColoringError, match="no list"):
        color_list_total(k4(), L)


def test_invalid_diagram_rejected():
    bad = single_block(range(6), [(0, 3), (1, 4), (2, 5)])  # 0-3 is crossed twice
    with pytest.raises(DiagramError):
        color_list_total(bad, {})


def test_regular_graph_outside_the_class_is_not_reducible():
    g = _circulant(12, (1, 2))
    assert g.degree_sequence() == [4] * 12
    assert find_configuration(g) is None
    with pytest.raises(NotReducible):
        color_list_total(g, ListAssignment.uniform(g, 6))


def test_small_irreducible_graph_uses_oracle():
    g = graph([(i, j) for i in range(5) for j in range(i + 1, 5)])
    L = ListAssignment.uniform(g, 6)
    result = color_list_total(g, L)
    assert result.trace[-1]["tag"] == "ORACLE"
    assert verify_total_coloring(g, L, result.coloring).valid
    with pytest.raises(NotReducible):
        color_list_total(g, L, oracle_fallback_n=4)


def test_trace_is_bounded_and_deterministic():
    d = gen_random_diagram(GenParams(30, 3, 0.8, 0.5, 0.9, True, 17))
    g = to_graph(d)
    L = gen_random_lists(g, required_list_size(g), required_list_size(g) + 3, 5)
    a = color_list_total(d, L)
    b = color_list_total(d, L)
    assert a.coloring == b.coloring and a.trace == b.trace
    assert len(a.trace) <= g.n_vertices + g.n_edges


def test_non_contiguous_palette():
    g = to_graph(k4())
    L = ListAssignment({x: {3, 17, 40, 41, 99, 1000} for x in g.elements()})
    phi = color_list_total(k4(), L).coloring
    assert verify_total_coloring(g, L, phi).valid


def test_lists_may_be_longer_than_required():
    g = to_graph(k23())
    rng = random.Random(3)
    L = ListAssignment({x: rng.sample(range(1, 30), rng.randint(6, 12)) for x in g.elements()})
    assert verify_total_coloring(g, L, color_list_total(k23(), L).coloring).valid


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 35),
    st.integers(1, 5),
    st.floats(0, 1),
    st.floats(0, 1),
    st.floats(0, 1),
    st.booleans(),
    st.integers(0, 2**32),
)
def test_random_diagrams_are_coloured(n, blocks, cd, xd, bd, ensure, seed):
    blocks = 1 if n == 1 else min(blocks, n - 1)
    d = gen_random_diagram(GenParams(n, blocks, cd, xd, bd, ensure, seed))
    g = to_graph(d)
    k = required_list_size(g)
    L = gen_random_lists(g, k, k + 3, seed)
    result = color_list_total(d, L)
    assert verify_total_coloring(g, L, result.coloring).valid
    if g.max_degree() <= 5:
        for step in result.trace:
            if "claims_ok" in step:
                assert step["claims_ok"] and not step["repaired"]
