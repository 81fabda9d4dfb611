from __future__ import annotations

import random

import pytest

from conftest import DATA, graph, k4, k23
from pototal.coloring import ListAssignment, color_list_total, required_list_size, verify_total_coloring
from pototal.coloring.core import HypothesisViolation, available_list
from pototal.coloring.engine import repair_extension
from pototal.coloring.extend import (
    EXTENDERS,
    claim_violations,
    erased_elements,
    extend_config_a,
    extend_config_c,
    extend_config_d,
    extend_config_f,
    extend_low_degree,
    reduced_graph,
)
from pototal.diagram import parse_diagram, to_graph
from pototal.generator import gen_random_lists
from pototal.oracle import Found, brute_force_l_total
from pototal.structure import Configuration, find_configuration


def _colour(g, L):
    """Any total colouring of ``g`` from ``L`` (the oracle serves as the source)."""
    result = brute_force_l_total(g, L)
    assert isinstance(result, Found)
    return result.coloring


def _assert_extends(g, L, phi, out, keep_out=()):
    assert verify_total_coloring(g, L, out).valid
    for x, c in phi.items():
        if x not in keep_out:
            assert out[x] == c


# -- low degree / A / C / D ------------------------------------------------------


def test_isolated_vertex_gets_least_colour():
    g = graph([], n=1)
    out = extend_low_degree(g, {0: {4, 5, 6, 7, 8, 9}}, {}, 0)
    assert out == {0: 4}


def test_pendant_at_maximum_degree_vertex():
    # Star centre 0 with five leaves; vertex 5 is the pendant being restored.
    g = graph([(0, i) for i in range(1, 6)])
    L = ListAssignment.uniform(g, 6)
    h = g.without_vertices([5])
    phi = _colour(h, L)
    out = extend_low_degree(g, L, phi, 5)
    _assert_extends(g, L, phi, out)
    assert out[(0, 5)] in available_list(g, L, phi, (0, 5))


def test_pendant_on_k4_corner():
    g = graph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3), (3, 4)])
    L = ListAssignment.uniform(g, 6)
    phi = _colour(g.without_vertices([4]), L)
    _assert_extends(g, L, phi, extend_low_degree(g, L, phi, 4))


def test_config_a_on_c4():
    g = to_graph(k4()).without_edges([(0, 2), (1, 3)])
    L = ListAssignment.uniform(g, 6)
    c = Configuration("A", (0, 1))
    phi = _colour(reduced_graph(g, c), L)
    _assert_extends(g, L, phi, extend_config_a(g, L, phi, c))


def test_config_a_dense_precolouring():
    # u = 0 between v = 1 (degree 4) and w = 2 (degree 5 = Delta).
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 6), (2, 7), (2, 8), (3, 4), (3, 6)]
    g = graph(edges)
    assert g.degree(1) == 4 and g.degree(2) == 5 == g.max_degree()
    c = Configuration("A", (0, 1))
    for seed in range(30):
        L = gen_random_lists(g, 6, 9, seed)
        phi = _colour(reduced_graph(g, c), L)
        _assert_extends(g, L, phi, extend_config_a(g, L, phi, c))


def test_k23_final_step():
    g = to_graph(k23())
    L = ListAssignment.uniform(g, 6)
    result = color_list_total(k23(), L)
    assert result.trace[0]["tag"] == "A"
    assert verify_total_coloring(g, L, result.coloring).valid


def test_config_c_on_k23():
    g = to_graph(k23())
    c = Configuration("C", (0, 1, 2, 3))
    for seed in range(50):
        L = gen_random_lists(g, 6, 9, seed)
        phi = _colour(reduced_graph(g, c), L)
        assert claim_violations(g, L, phi, c) == []
        _assert_extends(g, L, phi, extend_config_c(g, L, phi, c))


def test_config_d_on_k4():
    g = to_graph(k4())
    c = find_configuration(g)
    L = ListAssignment.uniform(g, 6)
    h = reduced_graph(g, c)
    assert h.edges() == [(0, 2)] and h.n_vertices == 2
    phi = _colour(h, L)
    _assert_extends(g, L, phi, extend_config_d(g, L, phi, c))


def test_config_d_rejects_bad_lists():
    g = to_graph(k4())
    c = find_configuration(g)
    h = reduced_graph(g, c)
    L = dict(ListAssignment.uniform(g, 6))
    L[(1, 3)] = frozenset({1, 2, 3})
    phi = _colour(h, ListAssignment.uniform(h, 6))
    with pytest.raises(HypothesisViolation, match="u2-u4"):
        extend_config_d(g, L, phi, c)


# -- corpus gadgets --------------------------------------------------------------


def _corpus():
    for path in sorted((DATA / "corpus").glob("*.pod")):
        yield path.stem, parse_diagram(path.read_text())


@pytest.mark.parametrize("name, d", list(_corpus()))
def test_corpus_extension_after_reduction(name, d):
    g = to_graph(d)
    c = find_configuration(g)
    assert c.tag == name[0].upper()
    k = required_list_size(g)
    h = reduced_graph(g, c)
    for seed in range(25):
        L = gen_random_lists(g, k, k + 3, seed)
        phi = color_list_total(h, L).coloring
        assert claim_violations(g, L, phi, c) == []
        out = EXTENDERS[c.tag](g, L, phi, c)
        _assert_extends(g, L, phi, out, keep_out=erased_elements(c))


# -- the high-degree gap in configuration F -------------------------------------


def _greedy_colourings(g, L, rng):
    while True:
        order = list(g.elements())
        rng.shuffle(order)
        phi = {}
        for x in order:
            options = sorted(available_list(g, L, phi, x))
            if not options:
                break
            phi[x] = rng.choice(options)
        else:
            yield phi


def test_f_high_degree_can_break_hypothesis_but_repair_succeeds():
    d = parse_diagram((DATA / "f_high_degree.pod").read_text())
    g = to_graph(d)
    c = find_configuration(g)
    assert c.tag == "F" and g.degree(c["u3"]) == 7
    k = required_list_size(g)
    L = ListAssignment.uniform(g, k)
    h = reduced_graph(g, c)
    rng = random.Random(0)
    for phi in _greedy_colourings(h, L, rng):
        if claim_violations(g, L, phi, c):
            break
    assert verify_total_coloring(h, L, phi).valid
    with pytest.raises(HypothesisViolation, match="u3"):
        extend_config_f(g, L, phi, c)
    out = repair_extension(g, L, phi, c)
    assert verify_total_coloring(g, L, out).valid
    # The engine itself avoids the unguaranteed F and still succeeds.
    result = color_list_total(d, L)
    assert verify_total_coloring(g, L, result.coloring).valid
