"""Exhaustive equivalent-visiting search.

Both engines enumerate every maximal path from a start vertex under the
equivalent-visiting discipline: each appearance of a vertex on the current
path consumes one unit of weight from every arc entering it, so the path can
be extended to a vertex only while some arc into it has weight left.
Self-loops are stored but never traversed.

``bots_search`` realises the discipline literally, copying the weight table
for every pending path and decrementing it arc by arc.  ``obots_search``
reaches the same result by comparing stored weights against per-path
occurrence counts, with no table copies.  Both push children in ascending id
order onto a LIFO stack, so repeated runs are bit-identical and the two
engines emit identical path sequences.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Mapping

from .core import (
    GraphClass,
    MultipleVisitingSet,
    MultiTraversalRelation,
    VertexId,
    WeightedUnitSubgraph,
    classify,
    is_connected,
)
from .errors import DomainError

PathSink = Callable[[tuple[VertexId, ...]], None]


@dataclass(frozen=True)
class SearchPath:
    """A maximal path emitted by the search."""

    vertices: tuple[VertexId, ...]

    @cached_property
    def occurrence(self) -> dict[VertexId, int]:
        counts: dict[VertexId, int] = {}
        for v in self.vertices:
            counts[v] = counts.get(v, 0) + 1
        return counts

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class TraversalResult:
    """Outcome of one exhaustive search.

    ``loop_count`` is the number of partial paths popped and expanded, the
    root included; ``breadth`` is the number of maximal paths.  With
    ``counts_only`` the paths tuple is left empty.
    """

    paths: tuple[SearchPath, ...]
    loop_count: int
    breadth: int
    counts_only: bool = False
    disconnected: bool = False


@dataclass(frozen=True)
class HamiltonStats:
    """Spanning-path tallies of one search.

    ``hamiltonian_paths`` counts every maximal path that visits all vertices
    exactly once; ``hamiltonian_cycles`` counts the subset whose final vertex
    has an arc back to the start, so cycles are contained in the path tally.
    """

    hamiltonian_paths: int
    hamiltonian_cycles: int

    @property
    def undirected_cycle_count(self) -> int:
        # each undirected Hamiltonian cycle is found once per direction
        return self.hamiltonian_cycles // 2


def characteristic(
    table: MultiTraversalRelation | Mapping[tuple[int, int], int],
    u: VertexId,
    v: VertexId,
) -> int:
    """1 iff arc (u, v) is present with remaining weight, else 0."""
    weights = table.arcs if isinstance(table, MultiTraversalRelation) else table
    return 1 if weights.get((u, v), 0) > 0 else 0


def equivalent_visit(nu: MultipleVisitingSet) -> MultipleVisitingSet:
    """One visit of the head: every source weight drops by 1, floored at 0."""
    return MultipleVisitingSet(
        head=nu.head,
        sources={source: max(0, weight - 1) for source, weight in nu.sources.items()},
    )


def enumerate_next(
    subgraph: WeightedUnitSubgraph, occurrence: Mapping[VertexId, int]
) -> tuple[VertexId, ...]:
    """Leaves still open for extension, ascending by id.

    A leaf is open while its stored weight exceeds the number of times it
    already appears on the current path.  The root's own self-loop is never
    offered.
    """
    return tuple(
        leaf
        for leaf, weight in sorted(subgraph.leaves.items())
        if leaf != subgraph.root and weight > occurrence.get(leaf, 0)
    )


# ---------------------------------------------------------------------------
# Indexed engine internals (vertex ids remapped to 0..n-1, ascending)
# ---------------------------------------------------------------------------

IndexedAdjacency = tuple[tuple[tuple[int, int], ...], ...]


def _index_graph(
    g: MultiTraversalRelation,
) -> tuple[list[VertexId], dict[VertexId, int], IndexedAdjacency]:
    """Weighted out-adjacency over remapped indices, self-loops dropped."""
    ids = sorted(g.vertices)
    index = {v: i for i, v in enumerate(ids)}
    rows: list[list[tuple[int, int]]] = [[] for _ in ids]
    for (tail, head), weight in g.arcs.items():
        if tail != head:
            rows[index[tail]].append((index[head], weight))
    adj = tuple(tuple(sorted(row)) for row in rows)
    return ids, index, adj


def _obots_run(
    adj: IndexedAdjacency,
    prefix: tuple[int, ...],
    emit: Callable[[list[int]], None] | None,
) -> tuple[int, int]:
    """Depth-first expansion from ``prefix``; ``~v`` frames undo path state.

    ``emit`` receives the live index path of each maximal path; callers copy
    if they keep it.  Returns (loops, breadth) for the explored subtree,
    counting one loop for the prefix itself.
    """
    occ = [0] * len(adj)
    path = list(prefix[:-1])
    for v in path:
        occ[v] += 1
    loops = 0
    breadth = 0
    stack = [prefix[-1]]
    push = stack.append
    pop = stack.pop
    while stack:
        v = pop()
        if v < 0:
            path.pop()
            occ[~v] -= 1
            continue
        path.append(v)
        occ[v] += 1
        loops += 1
        push(~v)
        extended = False
        for w, weight in adj[v]:
            if weight > occ[w]:
                push(w)
                extended = True
        if not extended:
            breadth += 1
            if emit is not None:
                emit(path)
    return loops, breadth


def _bots_run(
    arcs: dict[tuple[int, int], int],
    n: int,
    prefix: tuple[int, ...],
    emit: Callable[[tuple[int, ...]], None] | None,
) -> tuple[int, int]:
    """Literal table search: pop a path, rebuild the decremented table, scan."""
    out_rows: list[list[int]] = [[] for _ in range(n)]
    in_rows: list[list[int]] = [[] for _ in range(n)]
    for t, h in arcs:
        out_rows[t].append(h)
        in_rows[h].append(t)
    for row in out_rows:
        row.sort()

    loops = 0
    breadth = 0
    stack: list[tuple[int, ...]] = [prefix]
    while stack:
        path = stack.pop()
        loops += 1
        table = dict(arcs)
        for v in path:  # one equivalent visit per appearance on the path
            for u in in_rows[v]:
                w = table[(u, v)]
                if w > 0:
                    table[(u, v)] = w - 1
        end = path[-1]
        extensions = [w for w in out_rows[end] if w != end and table[(end, w)] > 0]
        if not extensions:
            breadth += 1
            if emit is not None:
                emit(path)
        else:
            stack.extend(path + (w,) for w in extensions)
    return loops, breadth


def _run_engine(
    engine: str,
    adj: IndexedAdjacency,
    arcs_by_index: dict[tuple[int, int], int],
    prefix: tuple[int, ...],
    emit,
) -> tuple[int, int]:
    if engine == "obots":
        return _obots_run(adj, prefix, emit)
    if engine == "bots":
        return _bots_run(arcs_by_index, len(adj), prefix, emit)
    raise DomainError(f"unknown engine {engine!r}")


def _subtree_worker(args) -> tuple[int, int, list[tuple[int, ...]] | None, int, int]:
    """Process-pool unit: search one root subtree, return merged counters."""
    engine, adj, arcs_by_index, prefix, keep_paths, span, closure_rows = args
    paths: list[tuple[int, ...]] | None = [] if keep_paths else None
    hp = hc = 0

    def emit(path) -> None:
        nonlocal hp, hc
        if paths is not None:
            paths.append(tuple(path))
        if span and len(path) == span and len(set(path)) == span:
            hp += 1
            if path[0] in closure_rows[path[-1]]:
                hc += 1

    sink = emit if (keep_paths or span) else None
    loops, breadth = _run_engine(engine, adj, arcs_by_index, prefix, sink)
    return loops, breadth, paths, hp, hc


def _search(
    g: MultiTraversalRelation,
    start: VertexId,
    engine: str,
    sink: PathSink | None,
    counts_only: bool,
    threads: int,
    hamilton: bool,
) -> tuple[TraversalResult, HamiltonStats]:
    if start not in g.vertices:
        raise DomainError(f"start vertex {start} is not on the instance")
    ids, index, adj = _index_graph(g)
    arcs_by_index = {(index[t], index[h]): w for (t, h), w in g.arcs.items()}
    n = len(ids)
    start_idx = index[start]
    keep_paths = not counts_only
    span = n if hamilton else 0
    # closure is judged on the full stored relation, weights untouched
    closure_rows: tuple[frozenset[int], ...] = tuple(
        frozenset(w for w, _ in row) for row in adj
    )

    collected: list[tuple[int, ...]] = []
    hp = hc = 0

    def count_path(tpl: tuple[int, ...]) -> None:
        nonlocal hp, hc
        if keep_paths:
            collected.append(tpl)
        if span and len(tpl) == span and len(set(tpl)) == span:
            hp += 1
            if start_idx in closure_rows[tpl[-1]]:
                hc += 1
        if sink is not None:
            sink(tuple(ids[i] for i in tpl))

    if threads <= 1:
        emit = (lambda path: count_path(tuple(path))) if (keep_paths or span or sink) else None
        loops, breadth = _run_engine(engine, adj, arcs_by_index, (start_idx,), emit)
    else:
        # the root is on the path once and self-loops are absent from adj, so
        # every stored out-arc of the start is an open child
        children = [w for w, _ in adj[start_idx]]
        loops, breadth = 1, 0
        if not children:
            breadth = 1
            count_path((start_idx,))
        else:
            jobs = [
                (engine, adj, arcs_by_index, (start_idx, child), keep_paths, span, closure_rows)
                for child in children
            ]
            with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
                for sub_loops, sub_breadth, paths, sub_hp, sub_hc in pool.map(
                    _subtree_worker, jobs
                ):
                    loops += sub_loops
                    breadth += sub_breadth
                    hp += sub_hp
                    hc += sub_hc
                    if paths is not None:
                        collected.extend(paths)
                        if sink is not None:
                            for p in paths:
                                sink(tuple(ids[i] for i in p))

    result = TraversalResult(
        paths=tuple(SearchPath(tuple(ids[i] for i in p)) for p in collected),
        loop_count=loops,
        breadth=breadth,
        counts_only=counts_only,
        disconnected=not is_connected(g),
    )
    return result, HamiltonStats(hamiltonian_paths=hp, hamiltonian_cycles=hc)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def obots_search(
    g: MultiTraversalRelation,
    start: VertexId,
    *,
    sink: PathSink | None = None,
    counts_only: bool = False,
    threads: int = 1,
) -> TraversalResult:
    """Occurrence-counting exhaustive search from ``start``.

    ``sink`` receives each maximal path as a vertex tuple as it is found;
    with ``counts_only`` the result keeps loop and breadth counters but no
    paths.  ``threads`` > 1 searches root subtrees in parallel processes;
    the emitted path set is the same, delivered in subtree order.
    """
    result, _ = _search(g, start, "obots", sink, counts_only, threads, hamilton=False)
    return result


def bots_search(
    g: MultiTraversalRelation,
    start: VertexId,
    *,
    sink: PathSink | None = None,
    counts_only: bool = False,
    threads: int = 1,
) -> TraversalResult:
    """Table-copying exhaustive search; same contract as :func:`obots_search`."""
    result, _ = _search(g, start, "bots", sink, counts_only, threads, hamilton=False)
    return result


def hamilton_stats(
    result: TraversalResult, g: MultiTraversalRelation, start: VertexId
) -> HamiltonStats:
    """Tally spanning maximal paths and the subset closing back to ``start``.

    Every maximal path visiting each vertex exactly once counts as a
    Hamiltonian path; those whose final vertex has an arc back to the start
    additionally count as Hamiltonian cycles.
    """
    if result.counts_only:
        raise DomainError("hamilton_stats needs retained paths; use search_report instead")
    n = g.n
    hp = hc = 0
    for path in result.paths:
        verts = path.vertices
        if len(verts) == n and len(set(verts)) == n:
            hp += 1
            if verts[-1] != start and g.multiplicity(verts[-1], start) > 0:
                hc += 1
    return HamiltonStats(hamiltonian_paths=hp, hamiltonian_cycles=hc)


def search_report(
    g: MultiTraversalRelation,
    start: VertexId,
    *,
    engine: str = "obots",
    threads: int = 1,
) -> tuple[TraversalResult, HamiltonStats]:
    """Counts-only search plus streaming Hamilton tallies; safe for huge breadths."""
    return _search(g, start, engine, None, True, threads, hamilton=True)


def traversal_invariant(g: MultiTraversalRelation) -> dict[VertexId, int]:
    """Hamiltonian-cycle count per start vertex; the counts agree on any instance.

    Requires a connected simple instance.  Rotating any Hamiltonian cycle
    re-roots it at every vertex, so each start sees the same number of them;
    the shared count is the instance's traversal invariant.
    """
    if classify(g) is not GraphClass.SIMPLE:
        raise DomainError("traversal invariant is defined on simple instances")
    if not is_connected(g):
        raise DomainError("traversal invariant needs a connected instance")
    counts: dict[VertexId, int] = {}
    for start in sorted(g.vertices):
        _, stats = search_report(g, start)
        counts[start] = stats.hamiltonian_cycles
    return counts
