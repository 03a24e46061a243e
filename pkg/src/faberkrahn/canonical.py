"""
Canonical forms for small graphs by colour refinement and individualization.

The search is exhaustive over the non-trivial cells left by refinement, so
it is exponential in the worst case; at the sizes used here (a dozen or so
interior vertices after folding leaves into vertex colours) it is fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["CanonicalForm", "canonical_form", "canonical_code"]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    code: bytes

    def hex(self) -> str:
        return self.code.hex()


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    # Colours are cell start indices, so they are comparable across labelings.
    n = len(adj)
    n_cells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        order = sorted(set(sigs))
        start: dict = {}
        counts: dict = {}
        for s in sigs:
            counts[s] = counts.get(s, 0) + 1
        pos = 0
        for s in order:
            start[s] = pos
            pos += counts[s]
        colors = [start[s] for s in sigs]
        if len(order) == n_cells:
            return colors
        n_cells = len(order)


def _initial_colors(labels: Sequence) -> list[int]:
    order = sorted(set(labels))
    counts = {c: 0 for c in order}
    for c in labels:
        counts[c] += 1
    start, pos = {}, 0
    for c in order:
        start[c] = pos
        pos += counts[c]
    return [start[c] for c in labels]


def canonical_code(n: int, edges, labels: Sequence | None = None) -> tuple:
    """Return a tuple that is equal for two vertex-labelled graphs iff they
    are isomorphic by a map preserving ``labels``.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if labels is None:
        labels = [0] * n
    labels = list(labels)
    best = None

    def leaf_code(colors):
        edge_code = sorted(
            (min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges
        )
        by_pos = [None] * n
        for v in range(n):
            by_pos[colors[v]] = labels[v]
        return (tuple(by_pos), tuple(edge_code))

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            code = leaf_code(colors)
            if best is None or code < best:
                best = code
            return
        for v in cells[target]:
            child = list(colors)
            for w in cells[target]:
                if w != v:
                    child[w] = target + 1
            search(child)

    search(_initial_colors(labels))
    return (n, best)


def _fold_leaves(n: int, edges, degrees: Sequence[int]):
    # Each degree-1 vertex hanging off a higher-degree vertex is dropped and
    # recorded in the remaining vertex's label (its full degree).
    keep = [v for v in range(n) if not (degrees[v] == 1 and n > 2)]
    index = {v: i for i, v in enumerate(keep)}
    sub_edges = [(index[u], index[v]) for u, v in edges if u in index and v in index]
    return len(keep), sub_edges, [degrees[v] for v in keep]


def canonical_form(g) -> CanonicalForm:
    """Isomorphism-invariant code of a graph with boundary.

    Boundary vertices have degree 1, so a boundary-preserving isomorphism is
    the same as a plain graph isomorphism. Leaves are folded into the full
    degree of their neighbour before the search, which removes the large
    leaf symmetry groups from the branching.
    """
    k, sub_edges, labels = _fold_leaves(g.n, g.edges, g.degrees)
    code = (g.n, canonical_code(k, sub_edges, labels))
    return CanonicalForm(repr(code).encode())
