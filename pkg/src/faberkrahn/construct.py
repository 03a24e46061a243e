"""
Layered greedy constructions of candidate extremal graphs.

All constructions place vertices breadth first and hand out degrees in a
fixed order: vertex ids are layer-major, the root is 0, and the children of
an earlier parent receive smaller ids (and so earlier degrees).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    BoundaryGraph,
    DegreeSequence,
    GraphError,
    RootedTree,
    bfs_layering,
    build_graph,
    build_tree,
)

__all__ = [
    "ConstructionError",
    "LayerPlan",
    "layer_plan",
    "layered_graph",
    "construct_u_star",
    "construct_slo_tree",
    "construct_u1",
    "construct_u2",
    "classify_degree_two_case",
    "construct_for",
]


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class LayerPlan:
    """Sizes of layers 1, 2, ... and the degree placed at (layer, index)."""

    layer_sizes: tuple[int, ...]
    degree_assignment: dict

    @property
    def n(self) -> int:
        return 1 + sum(self.layer_sizes)


def _children(v: int, d: int, triangle: bool) -> int:
    if v == 0:
        return d
    if triangle and v in (1, 2):
        return d - 2
    return d - 1


def _greedy_edges(degrees: Sequence[int], triangle: bool) -> list[tuple[int, int]]:
    n = len(degrees)
    if triangle and (n < 3 or degrees[0] < 2):
        raise ConstructionError("root needs at least two children to close the triangle")
    edges: list[tuple[int, int]] = []
    next_id = 1
    for v, d in enumerate(degrees):
        if v >= next_id:
            raise ConstructionError(f"layering stalls before vertex {v}: degrees run out of slots")
        c = _children(v, d, triangle)
        if c < 0:
            raise ConstructionError(f"vertex {v} of degree {d} cannot host its cycle edges")
        if next_id + c > n:
            raise ConstructionError("degree order asks for more vertices than available")
        edges.extend((v, w) for w in range(next_id, next_id + c))
        next_id += c
        if v == 0 and triangle:
            edges.append((1, 2))
    if next_id != n:
        raise ConstructionError("degree order leaves vertices unplaced")
    return edges


def layered_graph(degrees_in_order: Sequence[int]) -> BoundaryGraph:
    """Greedy layered unicyclic graph with degrees handed out in the given order.

    Vertex 0 is the root, vertices 1 and 2 are its first two children and are
    joined by the triangle edge.
    """
    edges = _greedy_edges(list(degrees_in_order), triangle=True)
    return build_graph(len(degrees_in_order), edges)


def layer_plan(pi: DegreeSequence) -> LayerPlan:
    g = construct_u_star(pi)
    lay = bfs_layering(g, 0)
    assignment = {}
    for t, layer in enumerate(lay.layers):
        for i, v in enumerate(layer):
            assignment[(t, i + 1)] = g.degree(v)
    return LayerPlan(lay.layer_sizes[1:], assignment)


def _as_sequence(pi) -> DegreeSequence:
    return pi if isinstance(pi, DegreeSequence) else DegreeSequence(tuple(pi))


def construct_u_star(pi) -> BoundaryGraph:
    """Layered extremal graph: triangle at the root, degrees nondecreasing in BFS order.

    Accepts sequences whose third-smallest interior degree is at least 3
    (this covers all sequences with interior degrees >= 3 and the sequences
    with one or two 2s).
    """
    pi = _as_sequence(pi)
    if pi.interior[2] < 3:
        raise ConstructionError(
            "layered construction needs the third-smallest interior degree >= 3; "
            "use construct_u1 or construct_u2"
        )
    return layered_graph(pi.degrees)


def construct_slo_tree(pi_tree: Sequence[int]) -> RootedTree:
    """Greedy layered tree: the root takes the first entry, the remaining
    degrees are handed out nondecreasing in BFS order, leaves last.
    """
    pi_tree = [int(d) for d in pi_tree]
    n = len(pi_tree)
    if n < 2 or any(d < 1 for d in pi_tree) or sum(pi_tree) != 2 * (n - 1):
        raise ConstructionError(f"{pi_tree} is not a tree degree sequence")
    rest = pi_tree[1:]
    order = [pi_tree[0]] + sorted(d for d in rest if d >= 2) + [d for d in rest if d == 1]
    edges = _greedy_edges(order, triangle=False)
    return build_tree(n, edges)


def _leading_twos(pi: DegreeSequence) -> int:
    m = 0
    for d in pi.interior:
        if d != 2:
            break
        m += 1
    return m


def classify_degree_two_case(pi) -> int | None:
    """Case number for a sequence containing a 2.

    1: one or two 2s (the layered construction applies);
    2: m >= 3 twos followed by a 3;
    3: m >= 3 twos followed by a degree >= 4.
    Returns ``None`` when the sequence has no 2 or matches no case.
    """
    pi = _as_sequence(pi)
    m = _leading_twos(pi)
    if m == 0:
        return None
    if pi.k >= 3 and pi.interior[2] >= 3:
        return 1
    if 3 <= m <= pi.k - 1:
        return 2 if pi.interior[m] == 3 else 3
    return None


def construct_u1(pi) -> BoundaryGraph:
    """Triangle through two 2s and the first 3, with a path of the remaining 2s.

    The root and one triangle vertex take degree 2, the other triangle
    vertex takes the 3. Its single child starts a path made of the
    remaining ``m - 2`` vertices of degree 2; the path ends at the next
    interior degree and the rest of the graph is the greedy layered
    assignment of the remaining degrees.
    """
    pi = _as_sequence(pi)
    if classify_degree_two_case(pi) != 2:
        raise ConstructionError("construct_u1 needs m >= 3 leading 2s followed by a 3")
    m = _leading_twos(pi)
    interior = list(pi.interior)
    order = [2, 2, 3] + [2] * (m - 2) + interior[m + 1 :] + [1] * pi.n_boundary
    return layered_graph(order)


def construct_u2(pi) -> BoundaryGraph:
    """Cycle of length m + 1 glued at one vertex to the greedy layered tree
    of ``(d_m - 2, d_{m+1}, ..., 1, ..., 1)``.

    Vertex 0 is the glued vertex, vertices 1..m walk around the cycle and the
    tree vertices follow in layer-major order.
    """
    pi = _as_sequence(pi)
    if classify_degree_two_case(pi) != 3:
        raise ConstructionError("construct_u2 needs m >= 3 leading 2s followed by a degree >= 4")
    m = _leading_twos(pi)
    interior = list(pi.interior)
    tree = construct_slo_tree([interior[m] - 2] + interior[m + 1 :] + [1] * pi.n_boundary)
    edges = [(i, i + 1) for i in range(m)] + [(m, 0)]

    def relabel(v):
        return 0 if v == 0 else m + v

    edges += [(relabel(u), relabel(v)) for u, v in tree.edges]
    return build_graph(pi.n, edges)


def construct_for(pi, variant: str = "auto") -> BoundaryGraph:
    """Dispatch to the construction matching ``pi``.

    ``variant`` is one of ``auto``, ``ustar``, ``u1``, ``u2``. With ``auto``,
    sequences without 2s and case-1 sequences use ``ustar``.
    """
    pi = _as_sequence(pi)
    case = classify_degree_two_case(pi)
    expected = {None: "ustar", 1: "ustar", 2: "u1", 3: "u2"}[case]
    if variant == "auto":
        variant = expected
    elif variant != expected:
        raise ConstructionError(
            f"variant {variant!r} does not apply to {pi}; its case calls for {expected!r}"
        )
    builders = {"ustar": construct_u_star, "u1": construct_u1, "u2": construct_u2}
    if variant not in builders:
        raise ValueError(f"unknown variant {variant!r}")
    try:
        return builders[variant](pi)
    except GraphError as exc:
        raise ConstructionError(str(exc)) from exc
