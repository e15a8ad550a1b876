"""Exact strong-edge-coloring oracles for small graphs.

Ground truth for tests and cross-validation: an exact strong chromatic
index by backtracking on the conflict graph, and a complete list-coloring
search.  Both are budgeted — blowing the node budget raises, it never
returns a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conflicts import conflict_graph
from .graph import Graph


class BudgetExceededError(RuntimeError):
    """The search hit its node ceiling before reaching an answer."""


@dataclass
class SearchBudget:
    """Limits for the exact searches.

    ``edge_cap`` bounds the size of graphs accepted by
    :func:`strong_chromatic_index_exact`; ``max_nodes`` bounds the number
    of search-tree nodes explored before giving up with an error.
    """

    max_nodes: int = 2_000_000
    edge_cap: int = 28
    nodes_used: int = field(default=0, init=False)

    def tick(self) -> None:
        self.nodes_used += 1
        if self.nodes_used > self.max_nodes:
            raise BudgetExceededError(
                f"search exceeded {self.max_nodes} nodes")


@dataclass(frozen=True)
class OracleResult:
    """Exact strong chromatic index with a witness coloring.

    ``witness`` maps edge id -> color id and uses exactly ``chi_s``
    colors; ``lower_bound_clique`` is the size of a greedily grown clique
    in the conflict graph (always <= ``chi_s``).
    """

    chi_s: int
    witness: dict[int, int]
    lower_bound_clique: int


def _greedy_clique(h: Graph) -> list[int]:
    """Deterministic greedy clique: high degree first, ties by id."""
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    clique: list[int] = []
    members: set[int] = set()
    for v in order:
        if all(w in set(h.adj[v]) for w in clique):
            clique.append(v)
            members.add(v)
    return clique


def _color_with_k(h: Graph, k: int, budget: SearchBudget
                  ) -> dict[int, int] | None:
    """Proper-color ``h`` with colors ``0..k-1`` or return None.

    New colors are introduced in index order (a node may only use a color
    at most one above the largest used so far), which kills the color
    permutation symmetry.  Branching picks the vertex with the fewest
    admissible colors, ties broken by lowest id.
    """
    n = h.n
    if n == 0:
        return {}
    colors: dict[int, int] = {}
    neighbor_sets = [set(h.adj[v]) for v in range(n)]

    def admissible(v: int, max_used: int) -> list[int]:
        forbidden = {colors[w] for w in neighbor_sets[v] if w in colors}
        top = min(k, max_used + 2)
        return [c for c in range(top) if c not in forbidden]

    def solve(max_used: int) -> bool:
        budget.tick()
        if len(colors) == n:
            return True
        best_v = -1
        best_opts: list[int] = []
        for v in range(n):
            if v in colors:
                continue
            opts = admissible(v, max_used)
            if best_v < 0 or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    return False
        for c in best_opts:
            colors[best_v] = c
            if solve(max(max_used, c)):
                return True
            del colors[best_v]
        return False

    return dict(colors) if solve(-1) else None


def strong_chromatic_index_exact(g: Graph,
                                 budget: SearchBudget | None = None
                                 ) -> OracleResult:
    """Exact strong chromatic index of ``g`` by complete search.

    Iterates candidate color counts upward from a greedy clique lower
    bound on the conflict graph, so the first success is optimal.  Refuses
    graphs above ``budget.edge_cap`` edges.
    """
    if budget is None:
        budget = SearchBudget()
    if g.m > budget.edge_cap:
        raise ValueError(
            f"graph has {g.m} edges, above the oracle cap of "
            f"{budget.edge_cap}; raise SearchBudget.edge_cap to insist")
    if g.m == 0:
        return OracleResult(0, {}, 0)
    h = conflict_graph(g)
    clique = _greedy_clique(h)
    for k in range(len(clique), h.n + 1):
        witness = _color_with_k(h, k, budget)
        if witness is not None:
            return OracleResult(k, witness, len(clique))
    raise AssertionError("coloring with one color per edge cannot fail")


def list_strong_colorable(g: Graph, lists: dict[int, frozenset[int]],
                          budget: SearchBudget | None = None
                          ) -> dict[int, int] | None:
    """Complete search for a strong edge coloring from per-edge lists.

    Returns a coloring (edge id -> color) or ``None`` if none exists.
    Every edge of ``g`` must have a list.
    """
    if budget is None:
        budget = SearchBudget()
    missing = [e for e in range(g.m) if e not in lists]
    if missing:
        raise ValueError(f"edges without a color list: {missing}")
    h = conflict_graph(g)
    neighbor_sets = [set(h.adj[v]) for v in range(h.n)]
    colors: dict[int, int] = {}

    def admissible(e: int) -> list[int]:
        forbidden = {colors[f] for f in neighbor_sets[e] if f in colors}
        return sorted(c for c in lists[e] if c not in forbidden)

    def solve() -> bool:
        budget.tick()
        if len(colors) == g.m:
            return True
        best_e = -1
        best_opts: list[int] = []
        for e in range(g.m):
            if e in colors:
                continue
            opts = admissible(e)
            if best_e < 0 or len(opts) < len(best_opts):
                best_e, best_opts = e, opts
                if not opts:
                    return False
        for c in best_opts:
            colors[best_e] = c
            if solve():
                return True
            del colors[best_e]
        return False

    return dict(colors) if solve() else None


@dataclass(frozen=True)
class PropositionCheck:
    """Outcome of the small-maximum-degree sanity check."""

    ok: bool
    chi_s: int
    bound: int


def check_proposition_small_delta(g: Graph,
                                  budget: SearchBudget | None = None
                                  ) -> PropositionCheck:
    """Verify the tiny-degree bounds: chi'_s <= 1 when the maximum degree
    is at most 1, and chi'_s <= 5 when it equals 2."""
    delta = g.max_degree()
    if delta > 2:
        raise ValueError(f"maximum degree {delta} is out of scope (need <= 2)")
    bound = 1 if delta <= 1 else 5
    result = strong_chromatic_index_exact(g, budget)
    return PropositionCheck(result.chi_s <= bound, result.chi_s, bound)
