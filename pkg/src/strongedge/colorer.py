"""Constructive list strong edge coloring.

Two certified pipelines plus a greedy baseline:

- :func:`solve_mad3` — graphs with maximum degree at most 4 and maximum
  average degree below 3, color budget ``3*max_degree + 1``;
- :func:`solve_girth7` — planar graphs of girth at least 7 under a degree
  cap of at least 4, color budget ``3*delta_cap`` (planarity is trusted,
  never machine-checked);
- :func:`greedy_color` — no guarantees, works on anything.

The certified pipelines peel one vertex at a time following detector
plans, then re-color the peeled edges on the way back up, checking at
every step that the plan's conflict bound held and that a list color was
spare.  A detector miss is a hard "theorem violation" error on the sparse
pipeline and a documented fallback on the girth-7 pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .conflicts import ConflictIndex, edges_within_distance_two
from .density import mad
from .graph import Graph, girth as graph_girth
from .oracle import SearchBudget, list_strong_colorable
from .reducer import (ClaimTag, ReductionPlan, find_reducible_girth7,
                      find_reducible_mad)

ColorLists = dict[int, frozenset[int]]
"""Per-edge allowed colors: edge id -> set of color ids."""

PartialColoring = dict[int, int]
"""Partial assignment: edge id -> color id."""


class HypothesisError(ValueError):
    """The input violates a documented precondition of the pipeline."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolationError(RuntimeError):
    """A guarantee the pipelines rest on failed at runtime.

    Either the detector found no configuration although the hypotheses
    were verified, or an extension step found its promise broken.  Both
    mean a bug — here or in the guarantee — and are never swallowed.
    """


class ExtensionError(TheoremViolationError):
    """An extension step could not honor its conflict bound."""

    def __init__(self, message: str, *, claim_tag: ClaimTag, edge: int,
                 bound: int, actual: int):
        super().__init__(message)
        self.claim_tag = claim_tag
        self.edge = edge
        self.bound = bound
        self.actual = actual


@dataclass(frozen=True)
class Violation:
    """One reason a coloring is not a (total) strong edge coloring."""

    kind: str  # "conflict" | "uncolored" | "unknown-edge"
    edges: tuple[int, ...]
    color: int | None = None


@dataclass(frozen=True)
class ExtensionRecord:
    """Instrumentation for one extension step (labels, not dense ids)."""

    claim_tag: ClaimTag
    edge: tuple[int, int]
    bound: int
    actual: int
    color: int


@dataclass
class SolveReport:
    """Outcome of a solve: the coloring plus how it was obtained.

    ``certified`` is True only when every edge was colored through the
    reduction machinery with every per-step conflict bound verified;
    ``fallback`` carries a note whenever a component had to fall back to
    the exact oracle or to greedy.  ``trace`` records every extension
    step that ran (edge as a label pair, promised bound, actual count).
    """

    coloring: PartialColoring
    path: str
    colors_used: int
    certified: bool
    fallback: str | None = None
    failed_edge: int | None = None
    trace: tuple[ExtensionRecord, ...] = ()

    @property
    def complete(self) -> bool:
        return self.failed_edge is None


def uniform_lists(g: Graph, n_colors: int) -> ColorLists:
    """The default lists: every edge may use colors ``0..n_colors-1``."""
    palette = frozenset(range(n_colors))
    return {e: palette for e in range(g.m)}


def verify_strong(g: Graph, coloring: PartialColoring,
                  require_total: bool = True) -> list[Violation]:
    """All the ways ``coloring`` fails to be a strong edge coloring.

    Returns an empty list on success.  A color on an unknown edge id is a
    violation entry, not a crash.  With ``require_total`` every uncolored
    edge is also reported.
    """
    out: list[Violation] = []
    for e in sorted(coloring):
        if not 0 <= e < g.m:
            out.append(Violation("unknown-edge", (e,), coloring[e]))
    if require_total:
        for e in range(g.m):
            if e not in coloring:
                out.append(Violation("uncolored", (e,)))
    idx = ConflictIndex(g)
    for e in range(g.m):
        c = coloring.get(e)
        if c is None:
            continue
        for f in sorted(idx.conflicts(e)):
            if f > e and coloring.get(f) == c:
                out.append(Violation("conflict", (e, f), c))
    return out


def greedy_color(g: Graph, lists: ColorLists,
                 order: Iterable[int] | None = None) -> SolveReport:
    """Color edges in order with the smallest spare list color.

    No guarantees: returns a report with ``failed_edge`` set on the first
    edge whose list is exhausted.  Never certified.
    """
    lists = _normalize_lists(g, lists)
    idx = ConflictIndex(g)
    coloring: PartialColoring = {}
    for e in (list(order) if order is not None else range(g.m)):
        used = {coloring[f] for f in idx.conflicts(e) if f in coloring}
        spare = sorted(lists[e] - used)
        if not spare:
            return SolveReport(coloring, "greedy",
                               len(set(coloring.values())),
                               certified=False, failed_edge=e)
        coloring[e] = spare[0]
    return SolveReport(coloring, "greedy", len(set(coloring.values())),
                       certified=False)


def extend(g: Graph, partial: PartialColoring, plan: ReductionPlan,
           lists: ColorLists,
           trace: list[ExtensionRecord] | None = None) -> PartialColoring:
    """Run a plan's extension steps on top of ``partial``.

    ``partial`` must already be erased according to the plan (its erased
    edges uncolored).  Each step recounts the colored conflicts of its
    edge, checks the plan's bound and the list margin, then takes the
    smallest admissible color.  Violated promises raise
    :class:`ExtensionError` — loudly, because they mean the machinery's
    guarantee failed.
    """
    out = dict(partial)
    for step in plan.extension_order:
        e = step.edge
        nearby = edges_within_distance_two(g, e)
        used = {out[f] for f in nearby if f in out}
        actual = sum(1 for f in nearby if f in out)
        if actual > step.bound:
            raise ExtensionError(
                f"extension of edge {g.label_pair(e)} under {plan.claim_tag.value}: "
                f"{actual} colored conflicts exceed the promised bound "
                f"{step.bound}", claim_tag=plan.claim_tag, edge=e,
                bound=step.bound, actual=actual)
        if len(lists[e]) - step.bound < 1:
            raise ExtensionError(
                f"edge {g.label_pair(e)} under {plan.claim_tag.value}: list of "
                f"size {len(lists[e])} cannot guarantee a spare color "
                f"against bound {step.bound}", claim_tag=plan.claim_tag,
                edge=e, bound=step.bound, actual=actual)
        spare = sorted(c for c in lists[e] if c not in used)
        if not spare:  # unreachable if the two checks above pass
            raise ExtensionError(
                f"edge {g.label_pair(e)} under {plan.claim_tag.value}: no "
                f"admissible color left", claim_tag=plan.claim_tag, edge=e,
                bound=step.bound, actual=actual)
        out[e] = spare[0]
        if trace is not None:
            trace.append(ExtensionRecord(plan.claim_tag, g.label_pair(e),
                                         step.bound, actual, spare[0]))
    return out


# ---------------------------------------------------------------------
# the reduction engine shared by both pipelines
# ---------------------------------------------------------------------

class _NoPlan(Exception):
    """Internal: the detector came up empty at some recursion level."""

    def __init__(self, graph: Graph):
        self.graph = graph


def _normalize_lists(g: Graph, lists: dict[int, Iterable[int]]) -> ColorLists:
    missing = sorted(e for e in range(g.m) if e not in lists)
    if missing:
        raise HypothesisError(
            f"edges without a color list: ids {missing}")
    return {e: frozenset(lists[e]) for e in range(g.m)}


def _child_lists(parent: Graph, child: Graph, lists: ColorLists) -> ColorLists:
    out: ColorLists = {}
    for e in range(child.m):
        a, b = child.label_pair(e)
        pe = parent.edge_id(parent.vertex_of_label(a),
                            parent.vertex_of_label(b))
        out[e] = lists[pe]
    return out


def _reduce_and_unwind(g: Graph, lists: ColorLists,
                       detect: Callable[[Graph], ReductionPlan | None],
                       trace: list[ExtensionRecord]) -> PartialColoring:
    """Peel vertices by detector plans, then extend back up.

    The recursion is an explicit stack of (graph, lists, plan) levels.
    Raises :class:`_NoPlan` if the detector misses at any level.
    """
    stack: list[tuple[Graph, ColorLists, ReductionPlan]] = []
    cur, cur_lists = g, lists
    while cur.n > 0:
        plan = detect(cur)
        if plan is None:
            raise _NoPlan(cur)
        stack.append((cur, cur_lists, plan))
        child = cur.delete_vertex(plan.delete_vertex)
        cur_lists = _child_lists(cur, child, cur_lists)
        cur = child

    by_labels: dict[tuple[int, int], int] = {}
    for level, level_lists, plan in reversed(stack):
        partial: PartialColoring = {
            level.edge_id(level.vertex_of_label(a), level.vertex_of_label(b)): c
            for (a, b), c in by_labels.items()}
        for e in plan.erase_edges:
            partial.pop(e, None)
        partial = extend(level, partial, plan, level_lists, trace)
        by_labels = {level.label_pair(e): c for e, c in partial.items()}
    return {g.edge_id(g.vertex_of_label(a), g.vertex_of_label(b)): c
            for (a, b), c in by_labels.items()}


def _final_checks(g: Graph, lists: ColorLists,
                  coloring: PartialColoring) -> None:
    """Soundness gate run on every complete solve, certified or not."""
    bad = verify_strong(g, coloring, require_total=True)
    if bad:
        raise TheoremViolationError(
            f"solver produced an invalid coloring: {bad[:3]}")
    for e, c in coloring.items():
        if c not in lists[e]:
            raise TheoremViolationError(
                f"solver used color {c} outside the list of edge "
                f"{g.label_pair(e)}")


def _solve_components(g: Graph, lists: ColorLists, path: str,
                      detect: Callable[[Graph], ReductionPlan | None],
                      fallback_threshold: int | None) -> SolveReport:
    """Solve per connected component and merge.

    ``fallback_threshold`` None means a detector miss is fatal (sparse
    pipeline); otherwise it is the component edge count up to which the
    exact oracle is used as fallback, greedy beyond.
    """
    trace: list[ExtensionRecord] = []
    coloring: PartialColoring = {}
    notes: list[str] = []
    certified = True
    failed: int | None = None

    for comp in g.components():
        sub = g.induced(comp)
        if sub.m == 0:
            continue
        sub_lists = _child_lists(g, sub, lists)
        if sub.m == 1:
            sub_coloring = {0: min(sub_lists[0])}
        else:
            try:
                sub_coloring = _reduce_and_unwind(sub, sub_lists, detect,
                                                  trace)
            except _NoPlan as miss:
                if fallback_threshold is None:
                    raise TheoremViolationError(
                        f"no reducible configuration found on a "
                        f"hypothesis-satisfying graph with "
                        f"{miss.graph.n} vertices — the guarantee this "
                        f"pipeline rests on failed") from None
                certified = False
                if sub.m <= fallback_threshold:
                    notes.append(
                        f"component {list(comp)}: no reducible "
                        f"configuration at {miss.graph.n} vertices; exact "
                        f"search fallback")
                    found = list_strong_colorable(
                        sub, sub_lists,
                        SearchBudget(edge_cap=max(sub.m, 28)))
                    if found is None:
                        notes.append(
                            f"component {list(comp)}: lists admit no "
                            f"strong coloring")
                        failed = g.edge_id(*[g.vertex_of_label(x)
                                             for x in sub.label_pair(0)])
                        continue
                    sub_coloring = found
                else:
                    notes.append(
                        f"component {list(comp)}: no reducible "
                        f"configuration at {miss.graph.n} vertices; greedy "
                        f"fallback (component too large for exact search)")
                    rep = greedy_color(sub, sub_lists)
                    sub_coloring = rep.coloring
                    if rep.failed_edge is not None:
                        failed = g.edge_id(*[
                            g.vertex_of_label(x)
                            for x in sub.label_pair(rep.failed_edge)])
        for e, c in sub_coloring.items():
            a, b = sub.label_pair(e)
            coloring[g.edge_id(g.vertex_of_label(a),
                               g.vertex_of_label(b))] = c

    if failed is None:
        _final_checks(g, lists, coloring)
    return SolveReport(coloring, path, len(set(coloring.values())),
                       certified=certified and failed is None,
                       fallback="; ".join(notes) if notes else None,
                       failed_edge=failed, trace=tuple(trace))


# ---------------------------------------------------------------------
# public pipelines
# ---------------------------------------------------------------------

def solve_mad3(g: Graph, lists: dict[int, Iterable[int]]) -> SolveReport:
    """Certified coloring for sparse graphs: max degree <= 4, mad < 3.

    Every list must have at least ``3*max_degree(g) + 1`` colors (the
    guaranteed-sufficient budget).  Hypotheses are checked up front — the
    density certificate exactly, via max flow — and a detector miss after
    they passed is a hard error, because the theory says it cannot happen.
    """
    delta = g.max_degree()
    if delta > 4:
        raise HypothesisError(
            f"maximum degree {delta} exceeds 4; the sparse pipeline does "
            f"not apply")
    if g.n > 0 and g.m > 0:
        witness = mad(g)
        if witness.density >= 3:
            raise HypothesisError(
                f"maximum average degree is {witness.density} >= 3 on "
                f"vertices {sorted(witness.vertices)}", witness=witness)
    if g.m == 0:
        return SolveReport({}, "mad3", 0, certified=True)
    lists = _normalize_lists(g, lists)
    if any(not lst for lst in lists.values()):
        raise HypothesisError("every edge needs a nonempty color list")
    if g.m == 1:
        return SolveReport({0: min(lists[0])}, "mad3", 1, certified=True)
    budget = 3 * delta + 1
    short = sorted(e for e in range(g.m) if len(lists[e]) < budget)
    if short:
        raise HypothesisError(
            f"lists must have at least 3*max_degree+1 = {budget} colors; "
            f"too short on edge ids {short}")
    return _solve_components(g, lists, "mad3", find_reducible_mad,
                             fallback_threshold=None)


def solve_girth7(g: Graph, lists: dict[int, Iterable[int]], delta_cap: int,
                 fallback_threshold: int = 24) -> SolveReport:
    """Coloring for planar graphs of girth >= 7 under a degree cap.

    Planarity is trusted, not machine-checked; girth and the degree cap
    are verified.  Every list needs at least ``3*delta_cap`` colors.  On
    genuinely planar inputs the detectors never miss; if one does (the
    input lied about planarity), small components fall back to the exact
    oracle and large ones to greedy, with ``certified=False`` and a note.
    """
    if delta_cap < 4:
        raise ValueError(f"delta_cap must be >= 4, got {delta_cap}")
    delta = g.max_degree()
    if delta > delta_cap:
        raise HypothesisError(
            f"maximum degree {delta} exceeds the cap {delta_cap}")
    got_girth = graph_girth(g)
    if got_girth < 7:
        raise HypothesisError(
            f"girth {got_girth} is below 7; the girth-7 pipeline does "
            f"not apply")
    if g.m == 0:
        return SolveReport({}, "girth7", 0, certified=True)
    lists = _normalize_lists(g, lists)
    if any(not lst for lst in lists.values()):
        raise HypothesisError("every edge needs a nonempty color list")
    if g.m == 1:
        return SolveReport({0: min(lists[0])}, "girth7", 1, certified=True)
    budget = 3 * delta_cap
    short = sorted(e for e in range(g.m) if len(lists[e]) < budget)
    if short:
        raise HypothesisError(
            f"lists must have at least 3*delta_cap = {budget} colors; "
            f"too short on edge ids {short}")
    return _solve_components(
        g, lists, "girth7",
        lambda h: find_reducible_girth7(h, delta_cap),
        fallback_threshold=fallback_threshold)
