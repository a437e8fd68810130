"""Brute-force ground truth for 2-periodic configuration counts.

Nothing here uses the orientation or multiplier theory; membership is decided
by firing alone (two firings must reproduce the configuration exactly, one
firing must not). Configurations are generated from the pinned root outward
as bounded stack differences along a breadth-first spanning tree.

The search prunes: once every vertex within distance two of v has a stack,
the second-firing value at v is fixed, so a prefix that already breaks
periodicity at v is abandoned. That check is a direct consequence of the
firing rule, which only reads a radius-two neighbourhood, so the pruned walk
visits exactly the survivors of the full (2b+1)^(V-1) iteration.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from pardiff.errors import CeilingError, DomainError, WindowNotStabilizedError
from pardiff.graphs import (
    Configuration,
    Graph,
    PathGraph,
    PathOrientation,
    SimpleGraph,
    is_connected,
)
from pardiff.engine import orientation_of_stacks

DEFAULT_CANDIDATE_CEILING = 7**10
DEFAULT_BRIDGE_VERTEX_CEILING = 12
_CANDIDATE_CEILING_ENV = "PARDIFF_ORACLE_CEILING"
_BRIDGE_CEILING_ENV = "PARDIFF_BRIDGE_CEILING"


@dataclass(frozen=True)
class OracleResult:
    """Every canonical 2-periodic configuration found within the difference bound."""

    n: int
    diff_bound: int
    configurations: tuple[Configuration, ...]
    count: int

    def to_dict(self, include_configurations: bool = True) -> dict:
        out = {"n": self.n, "diff_bound": self.diff_bound, "count": self.count}
        if include_configurations:
            out["configurations"] = [list(c.stacks) for c in self.configurations]
        return out

    @staticmethod
    def csv_header() -> str:
        return "n,count,diff_bound,wall_time_seconds"

    def to_csv_row(self, wall_time_seconds: float) -> str:
        return f"{self.n},{self.count},{self.diff_bound},{wall_time_seconds}"


def _bfs_plan(adj0: list[list[int]], root: int):
    """BFS order plus per-prefix-length firing and checking schedules.

    Everything is remapped into BFS-position space. ready1[p] is the prefix
    length at which the one-step value of the vertex at position p is fixed;
    ready2[p] the length at which its two-step value can be tested.
    """
    V = len(adj0)
    pos = [-1] * V
    order = [root]
    parent_pos = [0] * V
    pos[root] = 0
    dq = deque([root])
    while dq:
        u = dq.popleft()
        for w in adj0[u]:
            if pos[w] < 0:
                pos[w] = len(order)
                parent_pos[pos[w]] = pos[u]
                order.append(w)
                dq.append(w)
    if len(order) != V:
        raise DomainError("graph is not connected")
    adj_pos = [tuple(sorted(pos[w] for w in adj0[order[p]])) for p in range(V)]
    ready1 = [max(p, *adj_pos[p]) if adj_pos[p] else p for p in range(V)]
    ready2 = [max(ready1[p], *(ready1[q] for q in adj_pos[p])) if adj_pos[p] else p for p in range(V)]
    fires_at = [[] for _ in range(V)]
    checks_at = [[] for _ in range(V)]
    for p in range(V):
        fires_at[ready1[p]].append((p, adj_pos[p]))
        checks_at[ready2[p]].append((p, adj_pos[p]))
    fires_at = [tuple(row) for row in fires_at]
    checks_at = [tuple(row) for row in checks_at]
    return order, parent_pos, fires_at, checks_at


def _window_search(vertex_count, edges, root0, window, collect, prefix=()):
    """Count (and optionally collect) 2-periodic configurations with the root
    pinned at zero and every tree-edge stack difference in [-window, window].

    ``prefix`` fixes the differences of the first BFS positions, which is how
    the search space is split across worker processes.
    """
    adj0 = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adj0[u - 1].append(v - 1)
        adj0[v - 1].append(u - 1)
    for row in adj0:
        row.sort()
    order, parent_pos, fires_at, checks_at = _bfs_plan(adj0, root0)
    V = vertex_count
    if V == 1:
        return 0, []
    stacks = [0] * V
    f1 = [0] * V
    lo, hi = -window, window
    out: list[tuple[int, ...]] = []

    def apply_level(p: int) -> bool:
        for u, nbrs in fires_at[p]:
            su = stacks[u]
            f = su
            for w in nbrs:
                sw = stacks[w]
                if sw > su:
                    f += 1
                elif sw < su:
                    f -= 1
            f1[u] = f
        for x, nbrs in checks_at[p]:
            fx = f1[x]
            g = fx
            for w in nbrs:
                fw = f1[w]
                if fw > fx:
                    g += 1
                elif fw < fx:
                    g -= 1
            if g != stacks[x]:
                return False
        return True

    def record() -> int:
        # fire^2 is the identity here; keep only genuine 2-periods.
        for q in range(V):
            if f1[q] != stacks[q]:
                if collect:
                    by_vertex = [0] * V
                    for p in range(V):
                        by_vertex[order[p]] = stacks[p]
                    out.append(tuple(by_vertex))
                return 1
        return 0

    for idx, d in enumerate(prefix, start=1):
        stacks[idx] = stacks[parent_pos[idx]] + d
        if not apply_level(idx):
            return 0, []
    floor = len(prefix) + 1
    if floor > V - 1:
        return record(), out

    count = 0
    pending = [lo] * V
    p = floor
    while p >= floor:
        d = pending[p]
        if d > hi:
            pending[p] = lo
            p -= 1
            continue
        pending[p] = d + 1
        stacks[p] = stacks[parent_pos[p]] + d
        if not apply_level(p):
            continue
        if p == V - 1:
            count += record()
            continue
        p += 1
    return count, out


def _search_task(args):
    return _window_search(*args)


def _run_search(graph: Graph, root0: int, window: int, collect: bool, workers: int):
    edges = tuple(sorted(graph.edges))
    V = graph.vertex_count
    branches = 2 * window + 1
    if workers <= 1 or V < 3 or branches ** (V - 1) < 10**5:
        return _window_search(V, edges, root0, window, collect)
    tasks = [
        (V, edges, root0, window, collect, (d,)) for d in range(-window, window + 1)
    ]
    count = 0
    configs: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        for c, cfgs in pool.map(_search_task, tasks):
            count += c
            if collect:
                configs.extend(cfgs)
    return count, configs


def _candidate_ceiling(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(_CANDIDATE_CEILING_ENV, DEFAULT_CANDIDATE_CEILING))


def enumerate_p2_configurations(
    n: int,
    diff_bound: int = 3,
    workers: int = 1,
    candidate_ceiling: int | None = None,
) -> OracleResult:
    """All 2-periodic configurations on the n-path with v_1 = 0 and adjacent
    stack differences within diff_bound, ordered by difference vector.
    """
    if n < 2:
        raise ValueError("the oracle needs n >= 2")
    if diff_bound < 1:
        raise ValueError("diff_bound must be positive")
    ceiling = _candidate_ceiling(candidate_ceiling)
    candidates = (2 * diff_bound + 1) ** (n - 1)
    if candidates > ceiling:
        raise CeilingError(
            f"{candidates} raw candidates exceed the oracle ceiling {ceiling}"
        )
    graph = PathGraph(n)
    count, raw = _run_search(graph, 0, diff_bound, collect=True, workers=workers)
    configs = tuple(Configuration(s, graph) for s in raw)
    return OracleResult(n=n, diff_bound=diff_bound, configurations=configs, count=count)


def orientations_realized(result: OracleResult) -> set[PathOrientation]:
    """Distinct orientations induced by the oracle's configurations."""
    return {orientation_of_stacks(c.stacks) for c in result.configurations}


def bound_stability_check(
    n: int, diff_bound: int = 3, workers: int = 1, candidate_ceiling: int | None = None
) -> bool:
    """True iff widening the difference bound by one finds nothing new."""
    base = enumerate_p2_configurations(n, diff_bound, workers, candidate_ceiling)
    wider = enumerate_p2_configurations(n, diff_bound + 1, workers, candidate_ceiling)
    return base.count == wider.count


def build_bridge_graph(g0: Graph, base_vertex: int, k: int) -> SimpleGraph:
    """Attach a k-vertex path to base_vertex of g0 through a bridge edge.

    The attachment vertices are numbered m+1..m+k beyond g0's m vertices,
    with m+1 on the bridge and m+k the far-end leaf.
    """
    m = g0.vertex_count
    if not 1 <= base_vertex <= m:
        raise DomainError(f"base vertex {base_vertex} outside [1, {m}]")
    if k < 1:
        raise ValueError("path length k must be >= 1")
    edges = set(g0.edges)
    edges.add((base_vertex, m + 1))
    for i in range(1, k):
        edges.add((m + i, m + i + 1))
    return SimpleGraph(vertex_count=m + k, edges=frozenset(edges))


def enumerate_p2_on_bridge_graph(
    g0: Graph,
    base_vertex: int,
    k: int,
    diff_bound: int = 3,
    workers: int = 1,
    max_escalations: int = 4,
    vertex_ceiling: int | None = None,
) -> int:
    """Exploratory count of 2-periodic configurations on g0 plus a bridged path.

    The far-end path leaf is pinned at zero and stacks are windowed along a
    breadth-first spanning tree. Off the path no bound on stack differences
    is proven, so the window is widened until two consecutive sizes agree;
    failing to stabilize raises instead of returning a silently low count.
    """
    if not is_connected(g0):
        raise DomainError("g0 must be connected")
    ceiling = vertex_ceiling if vertex_ceiling is not None else int(
        os.environ.get(_BRIDGE_CEILING_ENV, DEFAULT_BRIDGE_VERTEX_CEILING)
    )
    graph = build_bridge_graph(g0, base_vertex, k)
    if graph.vertex_count > ceiling:
        raise CeilingError(
            f"{graph.vertex_count} vertices exceed the bridge-oracle ceiling {ceiling}"
        )
    root0 = graph.vertex_count - 1  # far-end leaf, 0-based
    window = diff_bound
    prev, _ = _run_search(graph, root0, window, collect=False, workers=workers)
    for _ in range(max_escalations):
        cur, _ = _run_search(graph, root0, window + 1, collect=False, workers=workers)
        if cur == prev:
            return cur
        prev = cur
        window += 1
    raise WindowNotStabilizedError(
        f"count still changing at window {window}; raise max_escalations"
    )
