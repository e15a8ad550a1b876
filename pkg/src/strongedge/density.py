"""Maximum average degree, exactly.

``mad(g)`` is the maximum of ``2*|E(H)| / |V(H)|`` over nonempty vertex
subsets ``H``.  Everything here is exact rational arithmetic — thresholds
and densities are :class:`fractions.Fraction` values, and the subgraph
decision problem is solved by an integer-capacity maximum flow after
clearing denominators, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError

ExactRational = Fraction
"""Alias used in signatures: reduced-form exact rationals."""


@dataclass(frozen=True)
class DensityWitness:
    """A vertex set together with its exact density ``2e(H)/|H|``."""

    vertices: frozenset[int]
    density: Fraction

    def check(self, g: Graph) -> bool:
        """Recompute the density from ``g`` and compare."""
        h = self.vertices
        e = sum(1 for (a, b) in g.edges if a in h and b in h)
        return bool(h) and Fraction(2 * e, len(h)) == self.density


class _Dinic:
    """Small deterministic Dinic max-flow on integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else []

    def _dfs(self, u: int, t: int, f: int, level: list[int],
             it: list[int]) -> int:
        if u == t:
            return f
        while it[u] < len(self.head[u]):
            i = self.head[u][it[u]]
            v = self.to[i]
            if self.cap[i] > 0 and level[v] == level[u] + 1:
                d = self._dfs(v, t, min(f, self.cap[i]), level, it)
                if d > 0:
                    self.cap[i] -= d
                    self.cap[i ^ 1] += d
                    return d
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._bfs(s, t)
            if not level:
                return flow
            it = [0] * self.n
            while True:
                f = self._dfs(s, t, 1 << 62, level, it)
                if f == 0:
                    break
                flow += f

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the final residual network.

        This is the inclusion-minimal min-cut source side, which makes the
        extracted witness canonical for a given network.
        """
        seen = {s}
        queue = [s]
        for u in queue:
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def density_exceeds(g: Graph, threshold: Fraction | int
                    ) -> DensityWitness | None:
    """Does some subgraph have average degree strictly above ``threshold``?

    Returns a :class:`DensityWitness` with ``density > threshold`` when one
    exists, else ``None`` (meaning ``mad(g) <= threshold``).  Decided by a
    max-flow network with integer capacities: one node per edge fed from
    the source, infinite arcs from each edge node to its endpoints, and a
    sink arc per vertex scaled by the threshold.
    """
    threshold = Fraction(threshold)
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    if g.m == 0:
        return None  # every density is 0
    p, q = threshold.numerator, threshold.denominator
    m, n = g.m, g.n
    # edge-node supply 2q, vertex sink demand p: a vertex set H profits
    # 2q*e(H) - p*|H|, positive iff 2e(H)/|H| > p/q.
    total = 2 * q * m
    inf = total + p * n + 1
    net = _Dinic(2 + m + n)
    s, t = 0, 1
    enode = lambda e: 2 + e
    vnode = lambda v: 2 + m + v
    for e, (u, v) in enumerate(g.edges):
        net.add(s, enode(e), 2 * q)
        net.add(enode(e), vnode(u), inf)
        net.add(enode(e), vnode(v), inf)
    for v in range(n):
        net.add(vnode(v), t, p)
    flow = net.max_flow(s, t)
    if flow >= total:
        return None
    side = net.source_side(s)
    hverts = frozenset(v for v in range(n) if vnode(v) in side)
    e_in = sum(1 for (a, b) in g.edges if a in hverts and b in hverts)
    witness = DensityWitness(hverts, Fraction(2 * e_in, len(hverts)))
    if witness.density <= threshold:  # pragma: no cover - flow invariant
        raise AssertionError("max-flow witness does not exceed threshold")
    return witness


def mad(g: Graph) -> DensityWitness:
    """Maximum average degree of ``g`` with a witness subgraph.

    Exact: binary search over dyadic thresholds narrows the answer to an
    interval shorter than ``1/n**2``, which isolates a unique member of the
    finite density lattice ``{p/q : q <= n}``; a final flow run at a point
    just below it extracts a canonical witness of exactly that density.
    """
    if g.n == 0:
        raise GraphError("mad is undefined on the empty graph")
    if g.m == 0:
        return DensityWitness(frozenset({0}), Fraction(0))
    n = g.n
    gap = Fraction(1, n * n)
    lo, hi = Fraction(0), Fraction(g.max_degree())
    if density_exceeds(g, hi) is not None:  # pragma: no cover - impossible
        raise AssertionError("density above the maximum degree")
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if density_exceeds(g, mid) is not None:
            lo = mid
        else:
            hi = mid
    # unique fraction with denominator <= n in (lo, hi]
    value: Fraction | None = None
    for q in range(1, n + 1):
        num = (hi.numerator * q) // hi.denominator  # floor(hi * q)
        cand = Fraction(num, q)
        if lo < cand <= hi:
            value = cand
            break
    if value is None:  # pragma: no cover - lattice invariant
        raise AssertionError("no achievable density isolated by the search")
    witness = density_exceeds(g, value - gap / 2)
    if witness is None or witness.density != value:  # pragma: no cover
        raise AssertionError("witness extraction disagrees with the search")
    return witness


def mad_deficit_sum(g: Graph) -> int:
    """``sum(deg(v) - 3) = 2|E| - 3|V|``; negative whenever ``mad(g) < 3``."""
    return 2 * g.m - 3 * g.n
