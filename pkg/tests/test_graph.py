from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongedge import Graph, GraphError, build_graph, degree_class, girth

from tests.helpers import bfs_girth, random_graph


def edge_lists(max_n=10):
    return st.builds(
        lambda n, seed: (n, random_graph(random.Random(seed), n, 0.35)),
        st.integers(2, max_n), st.integers(0, 10_000))


def test_build_basic():
    g = build_graph([(0, 1), (1, 2), (2, 0)])
    assert (g.n, g.m) == (3, 3)
    assert g.adj[0] == (1, 2)
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.edge_id(2, 1) == 2
    assert g.endpoints(0) == (0, 1)
    assert g.max_degree() == 2


def test_labels_survive_sparse_ids():
    g = build_graph([(10, 30), (30, 20)])
    assert g.labels == (10, 20, 30)
    assert g.vertex_of_label(30) == 2
    assert g.label_pair(g.edge_id(g.vertex_of_label(10),
                                  g.vertex_of_label(30))) == (10, 30)


def test_explicit_vertices_allow_isolated():
    g = build_graph([(0, 1)], vertices=range(4))
    assert g.n == 4
    assert g.degree(3) == 0
    assert len(g.components()) == 3


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="3"):
        build_graph([(3, 3)])


def test_duplicate_edges_collapse():
    g = build_graph([(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_missing_edge_and_label_raise():
    g = build_graph([(0, 1)])
    with pytest.raises(GraphError):
        g.edge_id(0, 0)
    with pytest.raises(GraphError):
        g.vertex_of_label(9)


def test_delete_vertex_keeps_labels():
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])
    h = g.delete_vertex(1)
    assert h.labels == (0, 2, 3)
    assert h.m == 2
    # deleting from the subgraph still refers to original names
    assert h.label_pair(0) == (0, 3)


def test_components_partition():
    g = build_graph([(0, 1), (2, 3), (3, 4)], vertices=range(6))
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(6))
    assert {len(c) for c in comps} == {1, 2, 3}


def test_induced_subgraph():
    g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    h = g.induced([0, 1, 2])
    assert (h.n, h.m) == (3, 3)


def test_degree_class_counts():
    # hub with one pendant, one 2-path, and two degree-3 neighbors
    g = build_graph([(0, 1), (0, 2), (2, 9), (0, 3), (0, 4),
                     (3, 5), (3, 6), (4, 7), (4, 8)])
    dc = degree_class(g, 0)
    assert (dc.k, dc.t, dc.n1, dc.n3plus) == (4, 1, 1, 2)
    assert dc.n1 + dc.t + dc.n3plus == dc.k


def test_girth_known_values():
    assert girth(build_graph([(0, 1), (1, 2)])) == float("inf")
    assert girth(build_graph([(i, (i + 1) % 5) for i in range(5)])) == 5
    k4 = build_graph([(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert girth(k4) == 3
    petersen = build_graph(
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)])
    assert girth(petersen) == 5


@settings(max_examples=150, deadline=None)
@given(edge_lists())
def test_degree_sum_and_girth_match_reference(case):
    n, edges = case
    g = build_graph(edges, vertices=range(n))
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    assert girth(g) == bfs_girth(edges, n)


@settings(max_examples=60, deadline=None)
@given(edge_lists(8), st.integers(0, 7))
def test_delete_vertex_matches_induced(case, which):
    n, edges = case
    g = build_graph(edges, vertices=range(n))
    v = which % g.n
    h = g.delete_vertex(v)
    keep = [w for w in range(g.n) if w != v]
    assert h.labels == tuple(g.labels[w] for w in keep)
    assert h.m == sum(1 for u, w in g.edges if v not in (u, w))
