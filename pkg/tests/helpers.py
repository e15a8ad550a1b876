"""Independent reference implementations used to validate the package.

Everything here is deliberately written with *different* algorithms than
the library: brute-force subset enumeration instead of max-flow,
edge-deletion BFS instead of cross-edge girth detection, independent-set
DP instead of backtracking color search, and the textbook definition of
a strong edge coloring instead of precomputed conflict sets.  Slow but
obviously correct, and only run on small inputs.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import combinations

Edge = tuple[int, int]


def naive_conflicts(edges: list[Edge], e: int) -> set[int]:
    """Edges at distance <= 2 from ``edges[e]``, straight from the definition."""
    pairs = {frozenset(x) for x in edges}
    u, v = edges[e]
    out = set()
    for f, (x, y) in enumerate(edges):
        if f == e:
            continue
        if {x, y} & {u, v}:
            out.add(f)
            continue
        if any(frozenset((a, b)) in pairs
               for a in (u, v) for b in (x, y)):
            out.add(f)
    return out


def naive_strong_ok(edges: list[Edge], coloring: dict[int, int]) -> bool:
    """Is ``coloring`` (edge index -> color) a valid strong edge coloring?"""
    if set(coloring) != set(range(len(edges))):
        return False
    for e, f in combinations(range(len(edges)), 2):
        if coloring[e] == coloring[f] and f in naive_conflicts(edges, e):
            return False
    return True


def subset_mad(edges: list[Edge], n: int) -> Fraction:
    """Maximum average degree by trying every nonempty vertex subset."""
    best = Fraction(0)
    verts = sorted({x for e in edges for x in e} | set(range(n)))
    for size in range(1, len(verts) + 1):
        for sub in combinations(verts, size):
            inside = set(sub)
            k = sum(1 for u, v in edges if u in inside and v in inside)
            best = max(best, Fraction(2 * k, size))
    return best


def bfs_girth(edges: list[Edge], n: int) -> float:
    """Shortest cycle by deleting each edge and finding the detour."""
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    best = float("inf")
    for skip, (s, t) in enumerate(edges):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y, i in adj[x]:
                if i != skip and y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        if t in dist:
            best = min(best, dist[t] + 1)
    return best


def dp_chromatic(n: int, neighbors: list[int]) -> int:
    """Chromatic number via DP over vertex subsets (bitmask independent sets).

    ``neighbors[v]`` is a bitmask of v's neighbors.  Exponential; keep
    n small.
    """
    if n == 0:
        return 0
    full = (1 << n) - 1
    # all independent subsets of each mask are explored lazily
    best = {0: 0}
    frontier = {0}
    colors = 0
    while full not in best:
        colors += 1
        new_frontier = set()
        for state in frontier:
            rest = full & ~state
            low = rest & -rest
            v = low.bit_length() - 1
            # every maximal independent subset of `rest` containing v
            stack = [(low, rest & ~low & ~neighbors[v])]
            while stack:
                chosen, avail = stack.pop()
                if not avail:
                    nxt = state | chosen
                    if nxt not in best:
                        best[nxt] = colors
                        new_frontier.add(nxt)
                    continue
                w = (avail & -avail).bit_length() - 1
                stack.append((chosen | (1 << w),
                              avail & ~(1 << w) & ~neighbors[w]))
                stack.append((chosen, avail & ~(1 << w)))
        frontier = new_frontier
        if not frontier and full not in best:  # pragma: no cover
            raise AssertionError("chromatic DP wedged")
    return best[full]


def random_graph(rng: random.Random, n: int, p: float) -> list[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)
            if rng.random() < p]
