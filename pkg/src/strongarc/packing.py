"""Packing arc-disjoint strong subgraphs through a seed vertex pair.

For a seed pair S = {x, y} the quantity of interest is the largest number of
pairwise arc-disjoint strong subgraphs of D that all contain x and y.  Every
such subgraph can be shrunk to the union of one x->y path and one y->x path,
so the exact solver packs path-pair unions: classes are built one at a time,
paths are tried shortest-first in a fixed lexicographic order, and failed
states are memoized on the bitmask of consumed arcs.  Two independent
brute-force oracles (arc-subset enumeration and path-union enumeration) cross
check the solver on small instances.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .digraph import Arc, Digraph, DigraphError, is_strong
from .flow import max_flow_unit

_INF = float("inf")


class OracleRefusal(RuntimeError):
    """An oracle declined because the instance exceeds its brute-force budget."""


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class CertificateFamily:
    """A family of arc sets, each meant to induce a strong subgraph through the seed pair."""

    n: int
    seed: tuple[int, int]
    members: tuple[frozenset[Arc], ...]
    origin: str = "search"


@dataclass(frozen=True)
class CertificateReport:
    """Per-member verification outcome; ``valid`` only when every check passes."""

    valid: bool
    member_in_host: tuple[bool, ...]
    member_strong: tuple[bool, ...]
    member_has_seed: tuple[bool, ...]
    overlaps: tuple[tuple[int, int, frozenset[Arc]], ...]


@dataclass(frozen=True)
class PackingResult:
    """Seed-pair packing number with witness family and the reason it is optimal.

    When a node budget interrupts the search, ``exact`` is False and
    ``lower``/``upper`` bracket the true value (witness proves ``lower``).
    """

    value: int
    witness: CertificateFamily
    optimality: str
    exact: bool
    lower: int
    upper: int


@dataclass(frozen=True)
class Lambda2Result:
    """Minimum seed-pair packing number over sampled or all pairs."""

    value: int
    pair: tuple[int, int]
    witness: CertificateFamily
    exact: bool


def _validate_pair(d: Digraph, seed: Iterable[int]) -> tuple[int, int]:
    pair = tuple(seed)
    if len(pair) != 2:
        raise DigraphError(f"seed pair must have two vertices, got {pair}")
    x, y = pair
    if x == y:
        raise DigraphError("seed vertices must be distinct")
    if not (0 <= x < d.n and 0 <= y < d.n):
        raise DigraphError(f"seed pair {pair} outside 0..{d.n - 1}")
    return (x, y) if x < y else (y, x)


# --- verification ------------------------------------------------------------


def verify_certificate(d: Digraph, cert: CertificateFamily) -> CertificateReport:
    """Check membership, strongness, seed coverage and pairwise disjointness.

    Violations are reported, never raised, so a broken certificate can be
    inspected in full.
    """
    x, y = _validate_pair(d, cert.seed)
    in_host: list[bool] = []
    strong: list[bool] = []
    has_seed: list[bool] = []
    for member in cert.members:
        arcs = frozenset(tuple(a) for a in member)
        ok_host = arcs <= d.arcs
        in_host.append(ok_host)
        endpoints = {w for arc in arcs for w in arc}
        has_seed.append(x in endpoints and y in endpoints)
        if not arcs or not all(0 <= w < d.n for w in endpoints):
            strong.append(False)
            continue
        verts = sorted(endpoints)
        remap = {old: new for new, old in enumerate(verts)}
        sub = Digraph(len(verts), frozenset((remap[u], remap[v]) for u, v in arcs))
        strong.append(is_strong(sub))
    overlaps: list[tuple[int, int, frozenset[Arc]]] = []
    mem = [frozenset(tuple(a) for a in member) for member in cert.members]
    for i in range(len(mem)):
        for j in range(i + 1, len(mem)):
            shared = mem[i] & mem[j]
            if shared:
                overlaps.append((i, j, shared))
    valid = all(in_host) and all(strong) and all(has_seed) and not overlaps
    return CertificateReport(valid, tuple(in_host), tuple(strong), tuple(has_seed), tuple(overlaps))


# --- lazy path spaces ---------------------------------------------------------


class _PathSpace:
    """Simple s->t paths as arc bitmasks, generated in (length, lexicographic) order."""

    def __init__(
        self,
        n: int,
        adj_bits: Sequence[Sequence[tuple[int, int]]],
        rev_heads: Sequence[Sequence[int]],
        s: int,
        t: int,
        ticker: list[int],
    ) -> None:
        self.n = n
        self.adj = adj_bits  # per vertex: sorted (head, arc_bit)
        self.s, self.t = s, t
        self.ticker = ticker
        dist = [_INF] * n
        dist[t] = 0
        queue = deque([t])
        while queue:
            u = queue.popleft()
            for v in rev_heads[u]:
                if dist[v] is _INF:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        self.dist = dist
        self.paths: list[int] = []
        if dist[s] is _INF:
            self.done = True
            self.length = 0
        else:
            self.done = False
            self.length = int(dist[s])

    def get(self, idx: int) -> int | None:
        while len(self.paths) <= idx and not self.done:
            self._extend()
        return self.paths[idx] if idx < len(self.paths) else None

    def _extend(self) -> None:
        target_len = self.length
        sink = self.t
        dist = self.dist
        adj = self.adj
        out = self.paths
        on_path = [False] * self.n
        ticker = self.ticker

        def dfs(v: int, depth: int, mask: int) -> None:
            ticker[0] += 1
            if ticker[0] > ticker[1]:
                raise _BudgetExhausted
            if v == sink:
                if depth == target_len:
                    out.append(mask)
                return
            if depth + dist[v] > target_len:
                return
            on_path[v] = True
            for head, bit in adj[v]:
                if not on_path[head]:
                    dfs(head, depth + 1, mask | bit)
            on_path[v] = False

        dfs(self.s, 0, 0)
        self.length += 1
        if self.length > self.n - 1:
            self.done = True


# --- exact packing search -----------------------------------------------------


class _SeedPacker:
    """Depth-first packer for arc-disjoint (x->y path, y->x path) unions."""

    def __init__(self, d: Digraph, x: int, y: int, budget: int | None = None) -> None:
        self.d = d
        self.x, self.y = x, y
        arcs = d.sorted_arcs
        self.arcs = arcs
        adj_bits: list[list[tuple[int, int]]] = [[] for _ in range(d.n)]
        rev_heads: list[list[int]] = [[] for _ in range(d.n)]
        for i, (u, v) in enumerate(arcs):
            adj_bits[u].append((v, 1 << i))
            rev_heads[v].append(u)
        for row in adj_bits:
            row.sort()
        self.adj_bits = tuple(tuple(r) for r in adj_bits)
        self.arc_table = tuple((1 << i, u, v) for i, (u, v) in enumerate(arcs))
        self.ticker = [0, budget if budget is not None else float("inf")]
        self.space_xy = _PathSpace(d.n, self.adj_bits, rev_heads, x, y, self.ticker)
        self.space_yx = _PathSpace(d.n, self.adj_bits, rev_heads, y, x, self.ticker)

        def side_mask(pred) -> int:
            m = 0
            for bit, u, v in self.arc_table:
                if pred(u, v):
                    m |= bit
            return m

        self.out_x = side_mask(lambda u, v: u == x)
        self.in_x = side_mask(lambda u, v: v == x)
        self.out_y = side_mask(lambda u, v: u == y)
        self.in_y = side_mask(lambda u, v: v == y)
        self.fail_memo: dict[tuple[int, int], int] = {}
        self.stack: list[int] = []
        self.best_partial: list[int] = []

    def masks_to_arcs(self, masks: Iterable[int]) -> tuple[frozenset[Arc], ...]:
        out = []
        for mask in masks:
            member = set()
            m = mask
            while m:
                low = m & -m
                member.add(self.arcs[low.bit_length() - 1])
                m ^= low
            out.append(frozenset(member))
        return tuple(out)

    def _bounded_flow(self, used: int, s: int, t: int, need: int) -> int:
        residual: dict[int, dict[int, int]] = {v: {} for v in range(self.d.n)}
        for bit, u, v in self.arc_table:
            if bit & used == 0:
                residual[u][v] = residual[u].get(v, 0) + 1
                residual[v].setdefault(u, 0)
        value = 0
        n = self.d.n
        while value < need:
            parent = [-1] * n
            parent[s] = s
            queue = deque([s])
            found = False
            while queue and not found:
                u = queue.popleft()
                for v, cap in residual[u].items():
                    if cap > 0 and parent[v] == -1:
                        parent[v] = u
                        if v == t:
                            found = True
                            break
                        queue.append(v)
            if not found:
                break
            v = t
            while v != s:
                u = parent[v]
                residual[u][v] -= 1
                residual[v][u] += 1
                v = u
            value += 1
        return value

    def feasible(self, k: int) -> tuple[frozenset[Arc], ...] | None:
        """A packing of exactly k classes, or None when impossible."""
        masks = self._rec(0, k, 0)
        return None if masks is None else self.masks_to_arcs(masks)

    def _rec(self, used: int, remaining: int, min_rank: int) -> list[int] | None:
        if remaining == 0:
            return []
        self.ticker[0] += 1
        if self.ticker[0] > self.ticker[1]:
            raise _BudgetExhausted
        if (self.out_x & ~used).bit_count() < remaining:
            return None
        if (self.in_x & ~used).bit_count() < remaining:
            return None
        if (self.out_y & ~used).bit_count() < remaining:
            return None
        if (self.in_y & ~used).bit_count() < remaining:
            return None
        memo_rank = self.fail_memo.get((used, remaining))
        if memo_rank is not None and memo_rank <= min_rank:
            return None
        if self._bounded_flow(used, self.x, self.y, remaining) < remaining:
            return None
        if self._bounded_flow(used, self.y, self.x, remaining) < remaining:
            return None
        rank = min_rank
        while True:
            pmask = self.space_xy.get(rank)
            if pmask is None:
                break
            if pmask & used == 0:
                qrank = 0
                while True:
                    qmask = self.space_yx.get(qrank)
                    if qmask is None:
                        break
                    if qmask & used == 0:
                        member = pmask | qmask
                        self.stack.append(member)
                        if len(self.stack) > len(self.best_partial):
                            self.best_partial = list(self.stack)
                        sub = self._rec(used | member, remaining - 1, rank + 1)
                        self.stack.pop()
                        if sub is not None:
                            return [member] + sub
                    qrank += 1
            rank += 1
        prev = self.fail_memo.get((used, remaining))
        if prev is None or min_rank < prev:
            self.fail_memo[(used, remaining)] = min_rank
        return None


def lambda_s_upper_bound(d: Digraph, seed: Iterable[int]) -> int:
    """Cheap upper bound: seed degrees and both local connectivities."""
    x, y = _validate_pair(d, seed)
    deg = min(d.out_degree(x), d.in_degree(x), d.out_degree(y), d.in_degree(y))
    if deg == 0:
        return 0
    f_xy = max_flow_unit(d, x, y).value
    f_yx = max_flow_unit(d, y, x).value
    return min(deg, f_xy, f_yx)


def _exact(d: Digraph, x: int, y: int, cap: int | None = None, budget: int | None = None) -> PackingResult:
    """Largest feasible packing size, iterating k downward from the upper bound.

    With ``cap`` set the result value is min(true value, cap); callers use the
    cap only when the true value is already known to lie below it.
    """
    deg_bound = min(d.out_degree(x), d.in_degree(x), d.out_degree(y), d.in_degree(y))
    if deg_bound == 0:
        empty = CertificateFamily(d.n, (x, y), ())
        return PackingResult(0, empty, "unreachable", True, 0, 0)
    flow_bound = min(max_flow_unit(d, x, y).value, max_flow_unit(d, y, x).value)
    ub = min(deg_bound, flow_bound)
    if cap is not None:
        ub = min(ub, cap)
    if ub == 0:
        empty = CertificateFamily(d.n, (x, y), ())
        return PackingResult(0, empty, "unreachable", True, 0, 0)
    packer = _SeedPacker(d, x, y, budget)
    for k in range(ub, 0, -1):
        try:
            members = packer.feasible(k)
        except _BudgetExhausted:
            lower = len(packer.best_partial)
            witness = CertificateFamily(d.n, (x, y), packer.masks_to_arcs(packer.best_partial))
            return PackingResult(lower, witness, "budget", False, lower, k)
        if members is not None:
            if k == deg_bound:
                why = "degree-bound"
            elif k == flow_bound:
                why = "flow-bound"
            else:
                why = "search-closed"
            witness = CertificateFamily(d.n, (x, y), members)
            return PackingResult(k, witness, why, True, k, k)
    empty = CertificateFamily(d.n, (x, y), ())
    return PackingResult(0, empty, "search-closed", True, 0, 0)


def lambda_s_exact(d: Digraph, seed: Iterable[int], budget: int | None = None) -> PackingResult:
    """Exact seed-pair packing number with a verified witness family."""
    x, y = _validate_pair(d, seed)
    return _exact(d, x, y, budget=budget)


def lambda_2(d: Digraph, samples: int | None = None, seed: int | None = None) -> Lambda2Result:
    """Minimum seed-pair packing number over all pairs (or a seeded sample).

    The exhaustive sweep screens each pair for feasibility at the running
    minimum before paying for an exact computation, and reports the
    lexicographically least minimizing pair.  Sampled sweeps yield an upper
    bound and are flagged inexact.
    """
    if d.n < 2:
        raise DigraphError("pair sweep needs at least two vertices")
    all_pairs = [(x, y) for x in range(d.n) for y in range(x + 1, d.n)]
    if samples is None:
        pairs = all_pairs
        exact = True
    else:
        if seed is None:
            raise DigraphError("sampled sweep needs an explicit seed")
        import random

        rng = random.Random(seed)
        pairs = sorted(rng.sample(all_pairs, min(samples, len(all_pairs))))
        exact = False
    best: PackingResult | None = None
    best_pair: tuple[int, int] = pairs[0]
    for x, y in pairs:
        if best is None:
            best = _exact(d, x, y)
            best_pair = (x, y)
            continue
        if best.value == 0:
            break
        deg_bound = min(d.out_degree(x), d.in_degree(x), d.out_degree(y), d.in_degree(y))
        if deg_bound >= best.value:
            if _SeedPacker(d, x, y).feasible(best.value) is not None:
                continue
            cap = best.value - 1
        else:
            cap = deg_bound
        result = _exact(d, x, y, cap=cap)
        if result.value < best.value:
            best, best_pair = result, (x, y)
    assert best is not None
    return Lambda2Result(best.value, best_pair, best.witness, exact)


# --- brute-force oracles -------------------------------------------------------


@lru_cache(maxsize=64)
def _strong_arc_masks(d: Digraph) -> tuple[tuple[int, int], ...]:
    """All non-empty arc subsets (as bitmasks) inducing strong subgraphs.

    Returns (arc mask, endpoint-vertex mask) pairs; pure brute force over
    every subset, so callers must keep |A(D)| small.
    """
    arcs = d.sorted_arcs
    a = len(arcs)
    end_bits = [(1 << u) | (1 << v) for u, v in arcs]
    out: list[tuple[int, int]] = []
    for mask in range(1, 1 << a):
        verts = 0
        out_map: dict[int, int] = {}
        in_map: dict[int, int] = {}
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            u, v = arcs[i]
            verts |= end_bits[i]
            out_map[u] = out_map.get(u, 0) | (1 << v)
            in_map[v] = in_map.get(v, 0) | (1 << u)
            m ^= low
        start_v = (verts & -verts).bit_length() - 1
        # forward closure from the smallest endpoint
        seen = 1 << start_v
        frontier = [start_v]
        while frontier:
            nxt: list[int] = []
            for w in frontier:
                reach = out_map.get(w, 0) & ~seen
                while reach:
                    lowb = reach & -reach
                    seen |= lowb
                    nxt.append(lowb.bit_length() - 1)
                    reach ^= lowb
            frontier = nxt
        if seen != verts:
            continue
        seen = 1 << start_v
        frontier = [start_v]
        while frontier:
            nxt = []
            for w in frontier:
                reach = in_map.get(w, 0) & ~seen
                while reach:
                    lowb = reach & -reach
                    seen |= lowb
                    nxt.append(lowb.bit_length() - 1)
                    reach ^= lowb
            frontier = nxt
        if seen == verts:
            out.append((mask, verts))
    return tuple(out)


def _minimal_antichain(masks: Sequence[int]) -> list[int]:
    """Inclusion-minimal masks, input order irrelevant."""
    minimal: list[int] = []
    for mask in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(kept & mask == kept for kept in minimal):
            minimal.append(mask)
    return minimal


def _max_disjoint_packing(members: Sequence[int]) -> int:
    """Largest number of pairwise disjoint masks, exhaustively."""
    members = sorted(members, key=lambda m: (m.bit_count(), m))
    memo: dict[tuple[int, int], int] = {}

    def rec(i: int, used: int) -> int:
        key = (i, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best = 0
        for j in range(i, len(members)):
            if members[j] & used == 0:
                cand = 1 + rec(j + 1, used | members[j])
                if cand > best:
                    best = cand
        memo[key] = best
        return best

    return rec(0, 0)


def lambda_s_oracle_subsets(d: Digraph, seeds: Iterable[int], max_arcs: int = 16) -> int:
    """Oracle: enumerate every arc subset inducing a strong subgraph over the seeds.

    Exact for any seed set of size >= 2; refuses digraphs with more than
    ``max_arcs`` arcs.
    """
    seed_set = sorted(set(seeds))
    if len(seed_set) < 2:
        raise DigraphError(f"seed set needs at least two vertices, got {seed_set}")
    if not all(0 <= v < d.n for v in seed_set):
        raise DigraphError(f"seed set {seed_set} outside 0..{d.n - 1}")
    if len(d.arcs) > max_arcs:
        raise OracleRefusal(f"{len(d.arcs)} arcs exceed the subset-oracle cap of {max_arcs}")
    want = 0
    for v in seed_set:
        want |= 1 << v
    candidates = [mask for mask, verts in _strong_arc_masks(d) if verts & want == want]
    return _max_disjoint_packing(_minimal_antichain(candidates))


def _all_simple_path_masks(d: Digraph, s: int, t: int, cap: int) -> list[int]:
    arcs = d.sorted_arcs
    bit_of = {a: 1 << i for i, a in enumerate(arcs)}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(d.n)]
    for a in arcs:
        adj[a[0]].append((a[1], bit_of[a]))
    for row in adj:
        row.sort()
    out: list[int] = []
    on_path = [False] * d.n

    def dfs(v: int, mask: int) -> None:
        if v == t:
            out.append(mask)
            if len(out) > cap:
                raise OracleRefusal(f"more than {cap} simple paths between seed vertices")
            return
        on_path[v] = True
        for head, bit in adj[v]:
            if not on_path[head]:
                dfs(head, mask | bit)
        on_path[v] = False

    dfs(s, 0)
    return out


def lambda_s_oracle_paths(d: Digraph, seed: Iterable[int], path_cap: int = 100_000) -> int:
    """Oracle: pack unions of one x->y and one y->x simple path, exhaustively.

    Refuses when either simple-path count exceeds ``path_cap``.
    """
    x, y = _validate_pair(d, seed)
    forward = _all_simple_path_masks(d, x, y, path_cap)
    backward = _all_simple_path_masks(d, y, x, path_cap)
    if len(forward) * len(backward) > 2_000_000:
        raise OracleRefusal("path-pair universe too large to enumerate")
    unions = {p | q for p in forward for q in backward}
    return _max_disjoint_packing(_minimal_antichain(sorted(unions)))


# --- certificate serialization --------------------------------------------------


def certificate_to_json(cert: CertificateFamily) -> str:
    payload = {
        "n": cert.n,
        "s": cert.seed[0],
        "t": cert.seed[1],
        "members": [sorted([list(a) for a in member]) for member in cert.members],
        "origin": cert.origin,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def certificate_from_json(text: str) -> CertificateFamily:
    try:
        payload = json.loads(text)
        members = tuple(
            frozenset((int(u), int(v)) for u, v in member) for member in payload["members"]
        )
        return CertificateFamily(
            int(payload["n"]),
            (int(payload["s"]), int(payload["t"])),
            members,
            str(payload.get("origin", "search")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DigraphError(f"malformed certificate JSON: {exc}") from exc
