"""Local and global arc connectivity via unit-capacity max flow.

``max_flow_unit`` packs the maximum number of arc-disjoint s->t paths with
breadth-first augmentation and returns the matching minimum cut, so the
path/cut duality is checkable on every call.  ``arc_connectivity`` reduces the
global arc-strong connectivity to ``2 (n - 1)`` local computations against a
fixed pivot vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .digraph import Arc, Digraph, DigraphError, degrees, is_strong


@dataclass(frozen=True)
class LocalArcConnectivity:
    """Max arc-disjoint s->t paths: their number, a minimum cut, and the paths."""

    source: int
    sink: int
    value: int
    cut: frozenset[Arc]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConnectivityReport:
    """Global arc-strong connectivity with the degree context and a witness cut.

    ``strong`` is False when the digraph is not strongly connected; then the
    value is 0 and the cut is empty.
    """

    value: int
    delta_out: int
    delta_in: int
    min_cut: frozenset[Arc]
    strong: bool


def _bfs_parent(n: int, residual: dict[int, dict[int, int]], s: int, t: int) -> list[int] | None:
    parent = [-1] * n
    parent[s] = s
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, cap in residual[u].items():
            if cap > 0 and parent[v] == -1:
                parent[v] = u
                if v == t:
                    return parent
                queue.append(v)
    return None


def max_flow_unit(d: Digraph, s: int, t: int) -> LocalArcConnectivity:
    """Maximum number of arc-disjoint s->t paths, with minimum cut and path list."""
    if s == t:
        raise DigraphError("source and sink must differ")
    if not (0 <= s < d.n and 0 <= t < d.n):
        raise DigraphError(f"terminals ({s}, {t}) outside 0..{d.n - 1}")
    residual: dict[int, dict[int, int]] = {v: {} for v in range(d.n)}
    for u, v in d.arcs:
        residual[u][v] = residual[u].get(v, 0) + 1
        residual[v].setdefault(u, 0)
    value = 0
    while True:
        parent = _bfs_parent(d.n, residual, s, t)
        if parent is None:
            break
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= 1
            residual[v][u] += 1
            v = u
        value += 1

    # minimum cut: original arcs leaving the residual-reachable side
    reach = [False] * d.n
    reach[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, cap in residual[u].items():
            if cap > 0 and not reach[v]:
                reach[v] = True
                queue.append(v)
    cut = frozenset((u, v) for u, v in d.arcs if reach[u] and not reach[v])

    # decompose the flow into s->t paths, excising any flow cycles on the way
    flow_out: dict[int, list[int]] = {v: [] for v in range(d.n)}
    for u, v in d.arcs:
        used = 1 - residual[u].get(v, 0)
        if used > 0:
            flow_out[u].append(v)
    for heads in flow_out.values():
        heads.sort(reverse=True)  # pop() then yields smallest head first
    paths: list[tuple[int, ...]] = []
    for _ in range(value):
        walk = [s]
        pos = {s: 0}
        while walk[-1] != t:
            u = walk[-1]
            v = flow_out[u].pop()
            if v in pos:
                # a flow cycle: drop it and continue from its entry point
                walk = walk[: pos[v] + 1]
                pos = {w: k for k, w in enumerate(walk)}
            else:
                pos[v] = len(walk)
                walk.append(v)
        paths.append(tuple(walk))
    return LocalArcConnectivity(s, t, value, cut, tuple(paths))


def arc_connectivity(d: Digraph) -> ConnectivityReport:
    """Global arc-strong connectivity: min over local values against pivot 0."""
    if d.n < 2:
        raise DigraphError("arc connectivity needs at least two vertices")
    d_out, d_in = degrees(d)
    if not is_strong(d):
        return ConnectivityReport(0, d_out, d_in, frozenset(), strong=False)
    best_value: int | None = None
    best_cut: frozenset[Arc] = frozenset()
    for u in range(1, d.n):
        for s, t in ((0, u), (u, 0)):
            local = max_flow_unit(d, s, t)
            if best_value is None or local.value < best_value:
                best_value = local.value
                best_cut = local.cut
    assert best_value is not None
    return ConnectivityReport(best_value, d_out, d_in, best_cut, strong=True)


def verify_cut(d: Digraph, cut: Iterable[Arc]) -> bool:
    """True iff deleting ``cut`` destroys strong connectivity."""
    cut_set = frozenset(cut)
    if not cut_set <= d.arcs:
        raise DigraphError("cut contains arcs not present in the digraph")
    return not is_strong(d.remove_arcs(cut_set))
