"""Immutable simple graphs with dense vertex ids and stable edge ids.

Vertices are the integers ``0 .. n-1`` internally.  When a graph is built
from arbitrary integer labels the original labels are kept in a side table
(``Graph.labels``) so reports can speak the caller's language.  Edges get
ids ``0 .. m-1`` assigned in sorted order of their endpoint pairs, which
makes the id assignment canonical: it does not depend on the order edges
were supplied in.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

INFINITY = float("inf")
"""Sentinel girth for forests (graphs with no cycle)."""


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad vertex refs)."""


class Graph:
    """A finite undirected simple graph, immutable after construction.

    Use :func:`build_graph` to create instances.  Attributes:

    - ``n``: number of vertices (dense ids ``0..n-1``)
    - ``labels``: tuple mapping dense id -> original label
    - ``adj``: tuple of sorted neighbor tuples, indexed by vertex id
    - ``edges``: tuple of ``(u, v)`` pairs with ``u < v``, indexed by edge id
    """

    __slots__ = ("n", "labels", "adj", "edges", "_pair_index", "_label_index")

    def __init__(self, n: int, labels: tuple[int, ...],
                 edges: tuple[tuple[int, int], ...]):
        self.n = n
        self.labels = labels
        self.edges = edges
        adj: list[list[int]] = [[] for _ in range(n)]
        for (u, v) in edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._pair_index = {pair: i for i, pair in enumerate(edges)}
        self._label_index = {lab: i for i, lab in enumerate(labels)}

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._pair_index

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of the pair ``{u, v}``; raises GraphError if absent."""
        try:
            return self._pair_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge between vertices {u} and {v}") from None

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def vertex_of_label(self, label: int) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def label_pair(self, e: int) -> tuple[int, int]:
        """Endpoints of edge ``e`` expressed as original labels, sorted."""
        u, v = self.edges[e]
        a, b = self.labels[u], self.labels[v]
        return (a, b) if a <= b else (b, a)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(self.edge_id(v, w) for w in self.adj[v])

    def delete_vertex(self, v: int) -> "Graph":
        """New graph with vertex ``v`` (and its edges) removed.

        Dense ids are reassigned; original labels are preserved, so the
        deleted graph's vertices can be matched back to this graph's.
        """
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        keep_labels = [lab for i, lab in enumerate(self.labels) if i != v]
        pairs = [(self.labels[a], self.labels[b]) for (a, b) in self.edges
                 if a != v and b != v]
        return build_graph(pairs, vertices=keep_labels)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted tuples of vertex ids."""
        seen = [False] * self.n
        out: list[tuple[int, ...]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertex ids (labels preserved)."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
        inset = set(vs)
        pairs = [(self.labels[a], self.labels[b]) for (a, b) in self.edges
                 if a in inset and b in inset]
        return build_graph(pairs, vertices=[self.labels[v] for v in vs])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edge_pairs: Iterable[tuple[int, int]],
                vertices: Sequence[int] | None = None) -> Graph:
    """Build a :class:`Graph` from labeled edge pairs.

    The vertex set is the union of all endpoints plus the optional explicit
    ``vertices`` list (which is how isolated vertices get in).  Labels may
    be any integers; internally they are mapped to dense ids in sorted
    label order.  Duplicate edges are merged; a self-loop is rejected with
    an error naming the offending pair.
    """
    label_set = set(vertices) if vertices is not None else set()
    pair_set: set[tuple[int, int]] = set()
    for (a, b) in edge_pairs:
        if a == b:
            raise GraphError(f"self-loop at vertex {a} (pair ({a}, {b}))")
        label_set.add(a)
        label_set.add(b)
        pair_set.add((a, b) if a < b else (b, a))
    labels = tuple(sorted(label_set))
    index = {lab: i for i, lab in enumerate(labels)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b]))
                   for (a, b) in pair_set)
    return Graph(len(labels), labels, tuple(edges))


@dataclass(frozen=True)
class DegreeClass:
    """Degree profile of one vertex: its degree and neighbor-degree counts.

    ``k`` is the vertex degree and ``t`` the number of degree-2 neighbors,
    so a vertex with ``k=4, t=1`` is a 4-vertex with exactly one degree-2
    neighbor.  The remaining counts slice the neighborhood by degree:
    ``n1`` neighbors of degree 1, ``n3plus``/``n4plus``/``n5plus`` of
    degree at least 3/4/5, and ``ndelta`` of degree exactly the graph's
    maximum.  ``n1 + t + n3plus == k`` always.
    """

    k: int
    t: int
    n1: int
    n3plus: int
    n4plus: int
    n5plus: int
    ndelta: int


def degree_class(g: Graph, v: int) -> DegreeClass:
    """Classify vertex ``v`` by its degree and its neighbors' degrees."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    delta = g.max_degree()
    n1 = t = n3 = n4 = n5 = nd = 0
    for w in g.adj[v]:
        d = g.degree(w)
        if d == 1:
            n1 += 1
        elif d == 2:
            t += 1
        if d >= 3:
            n3 += 1
        if d >= 4:
            n4 += 1
        if d >= 5:
            n5 += 1
        if d == delta:
            nd += 1
    return DegreeClass(k=g.degree(v), t=t, n1=n1, n3plus=n3,
                       n4plus=n4, n5plus=n5, ndelta=nd)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``INFINITY`` for forests.

    Runs a breadth-first search from every vertex; the shortest cycle
    estimate over all start vertices and all non-tree edges is exact.
    """
    best: int | float = INFINITY
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best - 1:
                continue
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cycle = dist[x] + dist[y] + 1
                    if cycle < best:
                        best = cycle
    return best
