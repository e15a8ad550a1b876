"""Reducible-configuration detectors.

Each detector looks for a local configuration that is guaranteed to be
"unwindable": delete one vertex, color the smaller graph recursively,
possibly erase a couple of edge colors, then re-color the affected edges
in a fixed order — with a counting argument bounding how many colored
edges can conflict with each re-colored edge at its turn.

Two families exist, one per solving pipeline: ``M1``..``M5`` for the
sparse pipeline (max degree <= 4, maximum average degree < 3) and
``G1``..``G8`` for the planar girth-7 pipeline (degree cap >= 4).
Detectors are pure queries: they never mutate the graph, and they are
meaningful on any graph — whether the governing hypotheses hold is the
caller's business.  Earlier tags win; ties go to the smallest vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .conflicts import edges_within_distance_two
from .graph import Graph, degree_class


class ClaimTag(str, Enum):
    """Which reducible configuration a plan came from."""

    M1_PENDANT = "M1"
    M2_TWO_WEAK = "M2"
    M3_TWO_TWOS = "M3"
    M4_ALL_TWOS = "M4"
    M5_THREE_TWOS = "M5"
    G1_PENDANT = "G1"
    G2_TWO_WEAK = "G2"
    G3_ALL_WEAK = "G3"
    G4_FOUR_AND_TWO = "G4"
    G5_FOUR_AND_THREE = "G5"
    G6_THREE_WITH_TWO_TWOS = "G6"
    G7_ONE_STRONG_NEIGHBOR = "G7"
    G8_TWO_STRONG_NEIGHBORS = "G8"


@dataclass(frozen=True)
class ExtensionStep:
    """One edge to re-color, with its guaranteed conflict bound.

    When this step runs, at most ``bound`` colored edges lie within
    distance two of ``edge`` — so any list longer than ``bound`` has a
    spare color.
    """

    edge: int
    bound: int


@dataclass(frozen=True)
class ReductionPlan:
    """Recipe produced by a detector, in the detected graph's edge ids.

    Apply by deleting ``delete_vertex``, coloring the rest (recursively),
    un-coloring every edge in ``erase_edges``, then coloring the edges of
    ``extension_order`` first to last.  Every erased edge shows up later
    in the extension order, so the final coloring is total.
    """

    claim_tag: ClaimTag
    delete_vertex: int
    erase_edges: tuple[int, ...]
    extension_order: tuple[ExtensionStep, ...]


def _plan(g: Graph, tag: ClaimTag, delete_vertex: int,
          erase_pairs: list[tuple[int, int]],
          extension: list[tuple[tuple[int, int], int]]) -> ReductionPlan:
    """Assemble a plan, tightening each formula bound structurally.

    ``extension`` lists ``((u, v), formula_bound)`` in coloring order.
    The recorded bound is ``min(formula, possible)`` where ``possible``
    counts the edges within distance two that can actually be colored when
    the step runs (everything except strictly later extension edges).
    The formula comes from the configuration's counting argument; keeping
    the minimum makes the runtime check both tight and safe.
    """
    erase_ids = tuple(g.edge_id(u, v) for (u, v) in erase_pairs)
    ext_ids = [g.edge_id(u, v) for ((u, v), _) in extension]
    steps = []
    for i, (eid, (_, formula)) in enumerate(zip(ext_ids, extension)):
        later = set(ext_ids[i + 1:])
        possible = len(edges_within_distance_two(g, eid) - later)
        steps.append(ExtensionStep(eid, min(formula, possible)))
    return ReductionPlan(tag, delete_vertex, erase_ids, tuple(steps))


def _other_neighbor(g: Graph, v: int, not_this: int) -> int:
    """The neighbor of a degree-2 vertex ``v`` other than ``not_this``."""
    a, b = g.adj[v]
    return b if a == not_this else a


# ---------------------------------------------------------------------
# sparse pipeline (max degree <= 4, mad < 3): tags M1..M5
# ---------------------------------------------------------------------

def find_reducible_mad(g: Graph) -> ReductionPlan | None:
    """First reducible configuration for the sparse pipeline, or None.

    Tag priority M1 > M2 > M3 > M4 > M5, smallest vertex id first within
    a tag.  Bound formulas are evaluated at the maximum degree of ``g``
    itself; their validity rests on it being at most 4.
    """
    delta = g.max_degree()

    # M1: an isolated or pendant vertex.
    for v in range(g.n):
        if g.degree(v) <= 1:
            ext = [((v, u), 3 * delta) for u in g.adj[v]]
            return _plan(g, ClaimTag.M1_PENDANT, v, [], ext)

    # M2: a 2-vertex whose both neighbors have degree <= 3.
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        u, w = g.adj[v]
        if g.degree(u) <= 3 and g.degree(w) <= 3:
            return _plan(g, ClaimTag.M2_TWO_WEAK, v, [],
                         [((v, u), 2 * delta + 2), ((v, w), 2 * delta + 3)])

    # M3: a 2-vertex v1 ~ {v, w1} where v has two or more degree-2
    # neighbors yet w1 still has degree <= 3.
    for v1 in range(g.n):
        if g.degree(v1) != 2:
            continue
        for v, w1 in (g.adj[v1], g.adj[v1][::-1]):
            if g.degree(w1) <= 3 and degree_class(g, v).t >= 2:
                return _plan(g, ClaimTag.M3_TWO_TWOS, v1, [],
                             [((v, v1), 2 * delta + 4),
                              ((v1, w1), 2 * delta + 4)])

    # M4: a 4-vertex with four degree-2 neighbors.
    for v in range(g.n):
        if g.degree(v) == 4 and all(g.degree(u) == 2 for u in g.adj[v]):
            ext = [((v, u), delta + 3 + i) for i, u in enumerate(g.adj[v])]
            return _plan(g, ClaimTag.M4_ALL_TWOS, v, [], ext)

    # M5: a 4-vertex with exactly three degree-2 neighbors, one of which
    # has its far endpoint outside the "4-vertex with a single degree-2
    # neighbor" class.
    for v in range(g.n):
        if g.degree(v) != 4:
            continue
        twos = [u for u in g.adj[v] if g.degree(u) == 2]
        if len(twos) != 3:
            continue
        for v1 in twos:
            w1 = _other_neighbor(g, v1, v)
            if g.degree(w1) == 4 and degree_class(g, w1).t == 1:
                continue
            v2 = min(u for u in twos if u != v1)
            return _plan(g, ClaimTag.M5_THREE_TWOS, v1, [(v, v2)],
                         [((v1, w1), 2 * delta + 4),
                          ((v, v1), 2 * delta + 3),
                          ((v, v2), 2 * delta + 4)])

    return None


# ---------------------------------------------------------------------
# planar girth-7 pipeline (degree cap >= 4): tags G1..G8
# ---------------------------------------------------------------------

def find_reducible_girth7(g: Graph, delta_cap: int) -> ReductionPlan | None:
    """First reducible configuration for the girth-7 pipeline, or None.

    ``delta_cap`` is the degree cap the governing color budget
    ``3 * delta_cap`` is computed from; it must be at least 4 and at least
    the maximum degree of ``g``.  Tag priority G1 > ... > G8.
    """
    if delta_cap < 4:
        raise ValueError(f"delta_cap must be >= 4, got {delta_cap}")
    if g.max_degree() > delta_cap:
        raise ValueError(
            f"maximum degree {g.max_degree()} exceeds delta_cap {delta_cap}")
    d = delta_cap

    # G1: an isolated vertex, or a pendant edge with fewer than 3*cap
    # edges within distance two (counted directly, not via structure).
    for v in range(g.n):
        if g.degree(v) == 0:
            return _plan(g, ClaimTag.G1_PENDANT, v, [], [])
        if g.degree(v) == 1:
            u = g.adj[v][0]
            nearby = len(edges_within_distance_two(g, g.edge_id(u, v)))
            if nearby < 3 * d:
                return _plan(g, ClaimTag.G1_PENDANT, v, [],
                             [((u, v), nearby)])

    # G2: a 2-vertex whose both neighbors have degree <= 3.
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        u, w = g.adj[v]
        if g.degree(u) <= 3 and g.degree(w) <= 3:
            return _plan(g, ClaimTag.G2_TWO_WEAK, v, [],
                         [((v, u), 2 * d + 2), ((v, w), 2 * d + 3)])

    # G3: a vertex all of whose neighbors have degree <= 2.
    for v in range(g.n):
        tau = g.degree(v)
        if tau >= 1 and all(g.degree(u) <= 2 for u in g.adj[v]):
            ext = [((v, u), d + tau - 1 + i) for i, u in enumerate(g.adj[v])]
            return _plan(g, ClaimTag.G3_ALL_WEAK, v, [], ext)

    # G4: a 2-vertex between a 4-vertex u and a 2-vertex w, where u has
    # more degree-2 neighbors than just v.
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        for u, w in (g.adj[v], g.adj[v][::-1]):
            if (g.degree(u) == 4 and g.degree(w) == 2
                    and degree_class(g, u).t != 1):
                return _plan(g, ClaimTag.G4_FOUR_AND_TWO, v, [],
                             [((u, v), 2 * d + 3), ((w, v), d + 4)])

    # G5: a 2-vertex between a 4-vertex u with three degree-2 neighbors
    # and a 3-vertex w.
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        for u, w in (g.adj[v], g.adj[v][::-1]):
            if (g.degree(u) == 4 and g.degree(w) == 3
                    and degree_class(g, u).t == 3):
                return _plan(g, ClaimTag.G5_FOUR_AND_THREE, v, [],
                             [((w, v), 2 * d + 3), ((u, v), d + 7)])

    # G6: a 2-vertex v1 ~ {v, w1} where v is a 3-vertex with two degree-2
    # neighbors and w1 is neither a 5-or-more-vertex nor a 4-vertex with a
    # single degree-2 neighbor.
    for v1 in range(g.n):
        if g.degree(v1) != 2:
            continue
        for v, w1 in (g.adj[v1], g.adj[v1][::-1]):
            if g.degree(v) != 3 or degree_class(g, v).t != 2:
                continue
            if g.degree(w1) >= 5:
                continue
            if g.degree(w1) == 4 and degree_class(g, w1).t == 1:
                continue
            v2 = next(u for u in g.adj[v]
                      if u != v1 and g.degree(u) == 2)
            return _plan(g, ClaimTag.G6_THREE_WITH_TWO_TWOS, v1, [(v, v2)],
                         [((v1, w1), 2 * d + 3),
                          ((v, v1), d + 5),
                          ((v, v2), 2 * d + 2)])

    # G7: a vertex of degree k >= 5 with exactly one neighbor of degree
    # >= 3.  Reducible at a pendant neighbor, or at a degree-2 neighbor
    # whose far endpoint has degree <= 3.
    for v in range(g.n):
        k = g.degree(v)
        if k < 5:
            continue
        strong = [u for u in g.adj[v] if g.degree(u) >= 3]
        if len(strong) != 1:
            continue
        pendants = [u for u in g.adj[v] if g.degree(u) == 1]
        if pendants:
            u = pendants[0]
            return _plan(g, ClaimTag.G7_ONE_STRONG_NEIGHBOR, u, [],
                         [((u, v), d + 2 * k - 4)])
        for v1 in g.adj[v]:
            if g.degree(v1) != 2:
                continue
            w1 = _other_neighbor(g, v1, v)
            if g.degree(w1) <= 3:
                return _plan(g, ClaimTag.G7_ONE_STRONG_NEIGHBOR, v1, [],
                             [((v1, w1), 2 * d + k - 1),
                              ((v, v1), d + 2 * k - 1)])

    # G8: a vertex of degree k >= 5 with exactly two neighbors of degree
    # >= 3 and ell pendant neighbors.  Reducible at a pendant neighbor
    # when ell >= k-4; when ell == k-5 (so exactly three degree-2
    # neighbors) it reduces if every far endpoint is a 2-vertex or a
    # 3-vertex with two degree-2 neighbors.
    for v in range(g.n):
        k = g.degree(v)
        if k < 5:
            continue
        strong = [u for u in g.adj[v] if g.degree(u) >= 3]
        if len(strong) != 2:
            continue
        ell = sum(1 for u in g.adj[v] if g.degree(u) == 1)
        if ell >= k - 4:
            u = next(x for x in g.adj[v] if g.degree(x) == 1)
            return _plan(g, ClaimTag.G8_TWO_STRONG_NEIGHBORS, u, [],
                         [((u, v), 2 * d + 2 * k - ell - 5)])
        if ell == k - 5:
            twos = [u for u in g.adj[v] if g.degree(u) == 2]
            fars = [_other_neighbor(g, u, v) for u in twos]
            if all(g.degree(w) == 2
                   or (g.degree(w) == 3 and degree_class(g, w).t == 2)
                   for w in fars):
                (v1, v2, v3), (w1, w2, w3) = twos, fars
                return _plan(g, ClaimTag.G8_TWO_STRONG_NEIGHBORS, v1,
                             [(v2, w2), (v3, w3)],
                             [((v, v1), 2 * d + k - 1),
                              ((v1, w1), d + k + 2),
                              ((v2, w2), d + k + 2),
                              ((v3, w3), d + k + 2)])

    return None
