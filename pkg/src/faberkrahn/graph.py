"""
Unicyclic graphs with boundary, degree sequences and BFS layerings.

Vertices are dense integer ids ``0..n-1``. The boundary of a graph is never
declared by the caller: it is exactly the set of degree-1 vertices.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from numbers import Integral
from typing import Iterable, Sequence

__all__ = [
    "DegreeSequence",
    "ValidationReport",
    "InvalidDegreeSequence",
    "GraphError",
    "BoundaryGraph",
    "RootedTree",
    "Layering",
    "validate_degree_sequence",
    "build_graph",
    "bfs_layering",
    "find_cycle",
    "is_connected",
]


class InvalidDegreeSequence(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = tuple(problems)
        super().__init__("; ".join(self.problems))


class GraphError(ValueError):
    """Raised when an edge list does not describe a unicyclic graph with boundary."""


@dataclass(frozen=True)
class DegreeSequence:
    """Degree multiset of a unicyclic graph with boundary, in canonical order.

    Canonical order lists the entries >= 2 first in nondecreasing order and
    then all the 1s, e.g. ``(3, 3, 4, 1, 1, 1, 1, 1, 1)``.
    """

    degrees: tuple[int, ...]

    def __post_init__(self):
        problems = _degree_problems(self.degrees)
        if problems:
            raise InvalidDegreeSequence(problems)
        canon = _canonical_order(int(d) for d in self.degrees)
        if canon != tuple(self.degrees):
            object.__setattr__(self, "degrees", canon)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse a comma-separated list such as ``"3,3,3,1,1,1"``."""
        try:
            values = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise InvalidDegreeSequence([f"not a list of integers: {text!r}"]) from exc
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def interior(self) -> tuple[int, ...]:
        """Entries >= 2, nondecreasing."""
        return tuple(d for d in self.degrees if d >= 2)

    @property
    def k(self) -> int:
        """Number of interior (degree >= 2) entries."""
        return len(self.interior)

    @property
    def n_boundary(self) -> int:
        return self.n - self.k

    def count(self, d: int) -> int:
        return self.degrees.count(d)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


def _canonical_order(degrees: Iterable[int]) -> tuple[int, ...]:
    degrees = list(degrees)
    return tuple(sorted(d for d in degrees if d >= 2)) + tuple(d for d in degrees if d < 2)


def _degree_problems(degrees: Sequence[int]) -> list[str]:
    problems = []
    n = len(degrees)
    if n == 0:
        return ["empty degree sequence"]
    if any(not isinstance(d, Integral) or isinstance(d, bool) for d in degrees):
        return ["entries must be integers"]
    if any(d < 1 for d in degrees):
        problems.append("nonpositive entry")
    if sum(degrees) != 2 * n:
        problems.append(f"degree sum {sum(degrees)} != 2n = {2 * n}")
    if sum(1 for d in degrees if d >= 2) < 3:
        problems.append("fewer than three entries >= 2 (no cycle realizable)")
    if 1 not in degrees:
        problems.append("no degree-1 entry (no boundary vertex)")
    return problems


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    sequence: DegreeSequence | None
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_degree_sequence(degrees: Iterable[int]) -> ValidationReport:
    """Check whether ``degrees`` is realizable by a connected unicyclic graph
    with at least one boundary vertex.

    The test is: all entries >= 1, sum equal to twice the length, at least
    three entries >= 2 and at least one entry equal to 1. Never raises.
    """
    degrees = tuple(degrees)
    problems = _degree_problems(degrees)
    if problems:
        return ValidationReport(False, None, tuple(problems))
    return ValidationReport(True, DegreeSequence(degrees))


class _Adjacency:
    # Shared read-only views for anything carrying ``n`` and ``edges``.

    n: int
    edges: frozenset

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @cached_property
    def boundary(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees) if d == 1)

    @cached_property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) if d != 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True, eq=False)
class BoundaryGraph(_Adjacency):
    """Connected unicyclic simple graph; boundary = degree-1 vertices.

    Use :func:`build_graph` to construct one; it checks all invariants.
    Equality is on the labeled edge set, not on isomorphism class.
    """

    n: int
    edges: frozenset = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, BoundaryGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(tuple(self.degrees))

    def relabel(self, perm: Sequence[int]) -> "BoundaryGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


@dataclass(frozen=True, eq=False)
class RootedTree(_Adjacency):
    """A tree with root 0; its boundary is the set of leaves."""

    n: int
    edges: frozenset = field(repr=False)
    root: int = 0


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in out:
            raise GraphError(f"parallel edge {key}")
        out.add(key)
    return frozenset(out)


def is_connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> BoundaryGraph:
    """Build and validate a unicyclic graph with boundary.

    Raises:
        GraphError: if the edge list has loops, parallel edges or bad ids,
            is disconnected, has ``|E| != |V|``, or has no degree-1 vertex.
    """
    if n < 1:
        raise GraphError("vertex count must be positive")
    es = _normalize_edges(n, edges)
    if len(es) != n:
        raise GraphError(f"|E| = {len(es)} != |V| = {n}; not unicyclic")
    if not is_connected(n, es):
        raise GraphError("graph is disconnected")
    g = BoundaryGraph(n, es)
    if not g.boundary:
        raise GraphError("no degree-1 vertex; the boundary would be empty")
    return g


def build_tree(n: int, edges: Iterable[Sequence[int]], root: int = 0) -> RootedTree:
    es = _normalize_edges(n, edges)
    if len(es) != n - 1 or not is_connected(n, es):
        raise GraphError("edges do not form a tree")
    return RootedTree(n, es, root)


@dataclass(frozen=True)
class Layering:
    """BFS depths from ``root``; ``layers[i]`` lists the vertices at depth i."""

    root: int
    depth: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.layers)

    @property
    def height(self) -> int:
        return len(self.layers) - 1


def bfs_layering(g, root: int) -> Layering:
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} is not a vertex")
    depth = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                queue.append(w)
    if min(depth) < 0:
        raise GraphError("graph is disconnected")
    layers: list[list[int]] = [[] for _ in range(max(depth) + 1)]
    for v, h in enumerate(depth):
        layers[h].append(v)
    return Layering(root, tuple(depth), tuple(tuple(w) for w in layers))


def find_cycle(g: BoundaryGraph) -> list[int]:
    """Vertices of the unique cycle in traversal order.

    Starts at the smallest cycle vertex and steps to its smaller cycle
    neighbour first.
    """
    deg = Counter({v: g.degree(v) for v in range(g.n)})
    leaves = deque(v for v in range(g.n) if deg[v] == 1)
    removed = set()
    while leaves:
        v = leaves.popleft()
        removed.add(v)
        for w in g.neighbors(v):
            if w not in removed:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    core = sorted(set(range(g.n)) - removed)
    start = core[0]
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in g.neighbors(cur) if w not in removed and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return cycle
