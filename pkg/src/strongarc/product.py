"""Cartesian products of digraphs and fiber bookkeeping.

The product of G (order n) and H (order m) lives on pairs (i, j) encoded as
the flat index ``i * m + j``.  An arc joins (i, j) to (k, l) iff either
``i -> k`` is an arc of G and ``j == l``, or ``i == k`` and ``j -> l`` is an
arc of H.  A *G-fiber* is the copy of G obtained by fixing the H-coordinate;
an *H-fiber* fixes the G-coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Arc, Digraph, DigraphError


@dataclass(frozen=True)
class ProductDigraph:
    """A digraph together with its factor dimensions and coordinate codecs."""

    digraph: Digraph
    g_order: int
    h_order: int

    def encode(self, i: int, j: int) -> int:
        if not (0 <= i < self.g_order and 0 <= j < self.h_order):
            raise DigraphError(f"coordinates ({i}, {j}) outside {self.g_order} x {self.h_order}")
        return i * self.h_order + j

    def decode(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.digraph.n:
            raise DigraphError(f"vertex {v} outside product of order {self.digraph.n}")
        return divmod(v, self.h_order)


@dataclass(frozen=True)
class FiberRef:
    """One fiber of a product: ``axis`` is 'g' or 'h', ``index`` the fixed coordinate."""

    axis: str
    index: int
    vertices: tuple[int, ...]


def cartesian_product(g: Digraph, h: Digraph) -> ProductDigraph:
    """Cartesian product; arc count is ``n * |A(H)| + m * |A(G)|``."""
    n, m = g.n, h.n
    arcs: list[Arc] = []
    for u, v in g.arcs:
        for j in range(m):
            arcs.append((u * m + j, v * m + j))
    for u, v in h.arcs:
        for i in range(n):
            arcs.append((i * m + u, i * m + v))
    return ProductDigraph(Digraph(n * m, frozenset(arcs)), n, m)


def g_fiber(p: ProductDigraph, j: int) -> FiberRef:
    """The copy of G with H-coordinate fixed to ``j``."""
    if not 0 <= j < p.h_order:
        raise DigraphError(f"H-coordinate {j} outside 0..{p.h_order - 1}")
    return FiberRef("g", j, tuple(p.encode(i, j) for i in range(p.g_order)))


def h_fiber(p: ProductDigraph, i: int) -> FiberRef:
    """The copy of H with G-coordinate fixed to ``i``."""
    if not 0 <= i < p.g_order:
        raise DigraphError(f"G-coordinate {i} outside 0..{p.g_order - 1}")
    return FiberRef("h", i, tuple(p.encode(i, j) for j in range(p.h_order)))


def lift_g_arcs(p: ProductDigraph, factor_arcs: Iterable[Arc], j: int) -> frozenset[Arc]:
    """Map arcs of the factor G into the G-fiber with H-coordinate ``j``."""
    return frozenset((p.encode(a, j), p.encode(b, j)) for a, b in factor_arcs)


def lift_h_arcs(p: ProductDigraph, factor_arcs: Iterable[Arc], i: int) -> frozenset[Arc]:
    """Map arcs of the factor H into the H-fiber with G-coordinate ``i``."""
    return frozenset((p.encode(i, a), p.encode(i, b)) for a, b in factor_arcs)


def translate_subgraph(p: ProductDigraph, arcs: Iterable[Arc], target: FiberRef) -> frozenset[Arc]:
    """Move an arc set lying inside one fiber to the parallel fiber ``target``.

    All arcs must share the fixed coordinate of the source fiber; arcs that
    span two fibers are rejected.
    """
    arcs = list(arcs)
    if target.axis not in ("g", "h"):
        raise DigraphError(f"unknown fiber axis {target.axis!r}")
    fixed_pos = 1 if target.axis == "g" else 0
    fixed_vals = set()
    for u, v in arcs:
        cu, cv = p.decode(u), p.decode(v)
        if cu[fixed_pos] != cv[fixed_pos]:
            raise DigraphError(f"arc ({u}, {v}) spans two fibers of axis {target.axis!r}")
        fixed_vals.add(cu[fixed_pos])
    if len(fixed_vals) > 1:
        raise DigraphError(f"arcs lie in several fibers with fixed coordinates {sorted(fixed_vals)}")
    out: set[Arc] = set()
    for u, v in arcs:
        cu, cv = p.decode(u), p.decode(v)
        if target.axis == "g":
            out.add((p.encode(cu[0], target.index), p.encode(cv[0], target.index)))
        else:
            out.add((p.encode(target.index, cu[1]), p.encode(target.index, cv[1])))
    return frozenset(out)
