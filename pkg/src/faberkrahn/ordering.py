"""
Spiral-like (SLO) orderings and related structural checks.

An ordering is stored as the tuple of vertex ids in rank order; the first
entry is the root and depths are BFS distances from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .graph import Layering, bfs_layering
from .spectral import EigenPair

__all__ = [
    "SloOrdering",
    "SloCheck",
    "F_TOL",
    "make_ordering",
    "check_slo",
    "induced_ordering",
    "is_ball_approximation",
    "check_degree_monotone",
    "is_f_nonincreasing",
]

F_TOL = 1e-8


@dataclass(frozen=True)
class SloOrdering:
    order: tuple[int, ...]
    root: int
    layering: Layering

    @property
    def rank(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


@dataclass(frozen=True)
class SloCheck:
    """Outcome of :func:`check_slo`; truthy iff the ordering is spiral-like."""

    ok: bool
    condition: int | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def make_ordering(g, order: Sequence[int]) -> SloOrdering:
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    return SloOrdering(order, order[0], bfs_layering(g, order[0]))


def _parent_child_edges(g, depth):
    out = []
    for a, b in g.edges:
        if depth[a] == depth[b] - 1:
            out.append((a, b))
        elif depth[b] == depth[a] - 1:
            out.append((b, a))
    return out


def check_slo(g, ord: SloOrdering | Sequence[int]) -> SloCheck:
    """Check the three spiral-like conditions.

    1. ranks never decrease depth;
    2. for parent-child edges uv and xy with uy, xv non-edges, u before x
       forces v before y;
    3. boundary vertices form a suffix of the order.

    Returns a falsy :class:`SloCheck` naming the first failing condition and
    the offending vertices.
    """
    if not isinstance(ord, SloOrdering):
        ord = make_ordering(g, ord)
    if sorted(ord.order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    depth = ord.layering.depth
    rank = ord.rank
    order = ord.order

    for a, b in zip(order, order[1:]):
        if depth[a] > depth[b]:
            return SloCheck(False, 1, (a, b))

    pc = _parent_child_edges(g, depth)
    for u, v in pc:
        for x, y in pc:
            if g.has_edge(u, y) or g.has_edge(x, v):
                continue
            if rank[u] < rank[x] and not rank[v] < rank[y]:
                return SloCheck(False, 2, (u, v, x, y))

    seen_boundary = None
    for v in order:
        if v in g.boundary:
            seen_boundary = v
        elif seen_boundary is not None:
            return SloCheck(False, 3, (seen_boundary, v))
    return SloCheck(True)


def _by_f_then_id(f, tol):
    def cmp(a, b):
        if abs(f[a] - f[b]) > tol:
            return -1 if f[a] > f[b] else 1
        return (a > b) - (a < b)

    return cmp_to_key(cmp)


def induced_ordering(g, ep: EigenPair, tol: float = F_TOL) -> SloOrdering:
    """Relabel vertices from the first eigenfunction.

    The root is the vertex with largest f (smallest id on ties). Layer 1 is
    sorted by nonincreasing f. In each later layer, children of an earlier
    parent come first and siblings are sorted by nonincreasing f, ties
    going to the smaller id. A child with two parents in the previous layer
    belongs to the earlier one. Finally the boundary vertices are moved,
    in the same relative order, behind all interior vertices.
    """
    f = ep.f
    key = _by_f_then_id(f, tol)
    root = sorted(range(g.n), key=key)[0]
    lay = bfs_layering(g, root)
    depth = lay.depth
    order = [root]
    prev = [root]
    for t in range(1, len(lay.layers)):
        prev_rank = {v: i for i, v in enumerate(prev)}
        groups: dict[int, list[int]] = {}
        for v in lay.layers[t]:
            parent = min((w for w in g.neighbors(v) if depth[w] == t - 1), key=prev_rank.__getitem__)
            groups.setdefault(parent, []).append(v)
        layer = []
        for p in prev:
            layer.extend(sorted(groups.get(p, []), key=key))
        order.extend(layer)
        prev = layer
    interior = [v for v in order if v not in g.boundary]
    boundary = [v for v in order if v in g.boundary]
    return SloOrdering(tuple(interior + boundary), root, lay)


def is_f_nonincreasing(ep: EigenPair, ord: SloOrdering, tol: float = F_TOL) -> bool:
    f = ep.f
    return all(f[a] >= f[b] - tol for a, b in zip(ord.order, ord.order[1:]))


def is_ball_approximation(g, root: int) -> bool:
    """True iff for some r >= 1 the layer sizes n_1 <= n_2 <= ... <= n_r and
    every boundary vertex sits at depth r or r + 1.
    """
    lay = bfs_layering(g, root)
    sizes = lay.layer_sizes
    bdepths = {lay.depth[v] for v in g.boundary}
    for r in range(1, len(sizes)):
        if not bdepths <= {r, r + 1}:
            continue
        if all(sizes[i + 1] >= sizes[i] for i in range(1, r)):
            return True
    return False


def check_degree_monotone(g, ord: SloOrdering | Sequence[int]) -> bool:
    """Interior degrees nondecreasing along the order, boundary vertices last."""
    order = ord.order if isinstance(ord, SloOrdering) else tuple(ord)
    degs = [g.degree(v) for v in order]
    k = sum(1 for d in degs if d != 1)
    if any(d == 1 for d in degs[:k]):
        return False
    head = degs[:k]
    return all(a <= b for a, b in zip(head, head[1:]))
