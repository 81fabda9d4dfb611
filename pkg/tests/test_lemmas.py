from __future__ import annotations

import random

import pytest

from gadget_factory import (
    SOLVERS,
    VIOLATIONS,
    distinctness_violating_avail,
    pattern,
    tight_avail,
)
from pototal.coloring.core import HypothesisViolation
from pototal.coloring.gadget import gadget_from_avail
from pototal.coloring.lemmas import (
    D_ELEMENTS,
    element,
    lemma_d_violations,
    solve_case_e,
    solve_lemma_d,
    solve_lemma_f,
    solve_lemma_g,
    staged_solve,
)


def _check(tag, g, c, avail, sol):
    p = gadget_from_avail(g, list(avail), avail)
    assert p.is_solution(sol)


@pytest.mark.parametrize("tag", ["B", "D", "E", "F", "G"])
@pytest.mark.parametrize("palette", [6, 7, 9])
def test_tight_instances_extend(tag, palette):
    g, c = pattern(tag)
    rng = random.Random(f"{tag}-{palette}")
    for _ in range(150):
        avail = tight_avail(tag, c, rng, palette)
        _check(tag, g, c, avail, SOLVERS[tag](g, c, avail))


@pytest.mark.parametrize("tag", ["B", "D", "E", "F", "G"])
def test_slack_instances_extend(tag):
    g, c = pattern(tag)
    avail = {x: set(range(1, 7)) for x in tight_avail(tag, c, random.Random(0), 9)}
    _check(tag, g, c, avail, SOLVERS[tag](g, c, avail))


@pytest.mark.parametrize("tag", ["D", "F", "G"])
def test_distinctness_violations_rejected(tag):
    g, c = pattern(tag)
    rng = random.Random(7)
    for _ in range(100):
        avail = distinctness_violating_avail(tag, c, rng, 9)
        failures = VIOLATIONS[tag](c, avail)
        assert len(failures) == 1 and not failures[0].startswith("|L_av(")
        with pytest.raises(HypothesisViolation):
            SOLVERS[tag](g, c, avail)


def test_d_distinct_two_lists_succeed():
    g, c = pattern("D")
    avail = {element(c, n): set(range(1, 7)) for n in D_ELEMENTS}
    for n in ("u2", "u4"):
        avail[element(c, n)] = {1, 2, 3, 4}
    avail[element(c, "u1-u2")] = {1, 2}
    avail[element(c, "u2-u3")] = {1, 3}
    avail[element(c, "u3-u4")] = {2, 3}
    avail[element(c, "u1-u4")] = {1, 2}
    sol = solve_lemma_d(g, c, avail)
    _check("D", g, c, avail, sol)


def test_d_equal_two_lists_rejected_before_search():
    g, c = pattern("D")
    avail = {element(c, n): set(range(1, 7)) for n in D_ELEMENTS}
    avail[element(c, "u1-u2")] = {1, 2}
    avail[element(c, "u2-u3")] = {1, 2}
    with pytest.raises(HypothesisViolation) as exc:
        solve_lemma_d(g, c, avail)
    assert "u1-u2" in str(exc.value)


def test_d_short_list_reported():
    g, c = pattern("D")
    avail = {element(c, n): set(range(1, 7)) for n in D_ELEMENTS}
    avail[element(c, "u2-u4")] = {1, 2, 3, 4, 5}
    assert lemma_d_violations(c, avail) == ["|L_av(u2-u4)| = 5 < 6"]


def test_f_two_of_three_distinct():
    g, c = pattern("F")
    avail = tight_avail("F", c, random.Random(3), 9)
    avail[element(c, "u3-v")] = {1, 2}
    avail[element(c, "u3")] = {1, 2}
    avail[element(c, "v")] = {1, 3}
    _check("F", g, c, avail, solve_lemma_f(g, c, avail))
    avail[element(c, "v")] = {1, 2}
    with pytest.raises(HypothesisViolation):
        solve_lemma_f(g, c, avail)


def test_g_example_lists():
    g, c = pattern("G")
    avail = tight_avail("G", c, random.Random(4), 9)
    avail[element(c, "u1-u3")] = {1, 3}
    avail[element(c, "u3")] = {1, 2}
    avail[element(c, "u1")] = {2, 3}
    _check("G", g, c, avail, solve_lemma_g(g, c, avail))


def test_e_needs_the_right_u3v_choice():
    # L_av(u2u3) = {1, 2, 3} and L_av(u1u2) = {1, 2}. Colouring u3v with 3
    # leaves the two 2-lists equal; colouring it with 4 does not.
    g, c = pattern("E")
    avail = {x: set(range(1, 7)) for x in tight_avail("E", c, random.Random(0), 9)}
    avail[element(c, "u1-u2")] = {1, 2}
    avail[element(c, "u2-u3")] = {1, 2, 3}
    avail[element(c, "u3-u4")] = {4, 5, 6}
    avail[element(c, "u3-v")] = {3, 4}
    avail[element(c, "v")] = {1, 5, 6}
    p = gadget_from_avail(g, list(avail), avail)
    first = [element(c, "u3-v"), element(c, "v")]
    sol = staged_solve(p, first, lambda tail: not lemma_d_violations(c, tail.avail))
    assert sol[element(c, "u3-v")] == 4
    _check("E", g, c, avail, solve_case_e(g, c, avail))
