from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge import (BudgetExceededError, SearchBudget, build_graph,
                        check_proposition_small_delta, conflict_graph,
                        generate, GenSpec, list_strong_colorable,
                        strong_chromatic_index_exact, uniform_lists,
                        verify_strong)

from tests.helpers import dp_chromatic, naive_strong_ok, random_graph


def test_cycle_values():
    c5 = build_graph([(i, (i + 1) % 5) for i in range(5)])
    r5 = strong_chromatic_index_exact(c5)
    assert r5.chi_s == 5
    c7 = build_graph([(i, (i + 1) % 7) for i in range(7)])
    assert strong_chromatic_index_exact(c7).chi_s == 4
    c6 = build_graph([(i, (i + 1) % 6) for i in range(6)])
    assert strong_chromatic_index_exact(c6).chi_s == 3


def test_witness_is_checked_and_optimal():
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
    r = strong_chromatic_index_exact(g)
    assert not verify_strong(g, r.witness)
    assert len(set(r.witness.values())) == r.chi_s
    assert r.lower_bound_clique <= r.chi_s


def test_blowup_needs_quadratic_colors():
    g = generate(GenSpec("c5-blowup", 0, delta=4)).graph
    r = strong_chromatic_index_exact(g)
    assert r.chi_s == 20  # (5/4) * 4^2, every edge pair in conflict
    assert r.lower_bound_clique == 20  # so no search beyond the clique


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10_000))
def test_matches_independent_chromatic_dp(n, seed):
    edges = random_graph(random.Random(seed), n, 0.45)
    if not edges:
        return
    g = build_graph(edges, vertices=range(n))
    h = conflict_graph(g)
    masks = [0] * h.n
    for u, v in h.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    assert strong_chromatic_index_exact(g).chi_s == dp_chromatic(h.n, masks)
    assert naive_strong_ok(list(g.edges),
                           strong_chromatic_index_exact(g).witness)


def test_edge_cap_refusal_mentions_knob():
    g = generate(GenSpec("sparse-mad3", 30, seed=1)).graph
    assert g.m > 28
    with pytest.raises(ValueError, match="edge_cap"):
        strong_chromatic_index_exact(g)


def test_node_budget_raises_instead_of_lying():
    g = generate(GenSpec("c5-blowup", 0, delta=4)).graph
    tiny = SearchBudget(max_nodes=3, edge_cap=28)
    with pytest.raises(BudgetExceededError):
        # force actual search below the clique bound answer
        list_strong_colorable(g, uniform_lists(g, 19), tiny)


def test_list_solver_roundtrip():
    g = build_graph([(0, 1), (1, 2), (2, 3)])
    got = list_strong_colorable(g, uniform_lists(g, 3))
    assert got is not None and not verify_strong(g, got)
    # two conflicting edges sharing a singleton list is unsolvable
    lists = {0: frozenset({7}), 1: frozenset({7}), 2: frozenset({1, 2})}
    assert list_strong_colorable(g, lists) is None


def test_list_solver_requires_full_lists():
    g = build_graph([(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="1"):
        list_strong_colorable(g, {0: frozenset({1})})


def test_proposition_small_delta():
    for n in range(2, 10):
        path = build_graph([(i, i + 1) for i in range(n - 1)])
        r = check_proposition_small_delta(path)
        assert r.ok and r.chi_s <= r.bound
    for n in range(3, 10):
        cyc = build_graph([(i, (i + 1) % n) for i in range(n)])
        r = check_proposition_small_delta(cyc)
        assert r.ok
        assert (r.chi_s == 5) == (n == 5)
    single = build_graph([(0, 1)])
    r = check_proposition_small_delta(single)
    assert r.ok and r.bound == 1
    with pytest.raises(ValueError):
        check_proposition_small_delta(
            build_graph([(0, 1), (0, 2), (0, 3)]))
