"""
Edge surgeries that cannot increase the first Dirichlet eigenvalue, and
seeded random property suites for them.

Two move families are supported:

* a two-edge swap ``G - u1v1 - u2v2 + u1u2 + v1v2``, which decreases (weakly)
  the eigenvalue when f(v1) >= f(u2) and f(v2) >= f(u1);
* a shift of p edges ``u_t v1`` to ``u_t v2``, which decreases it when
  f(v1) >= f(v2) >= f(u_t).

Moves never raise on a disconnected result: they return a :class:`Rewired`
record flagging whether the result is still unicyclic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .graph import BoundaryGraph, GraphError, build_graph
from .spectral import EigenPair, dirichlet_laplacian, first_eigenpair

__all__ = [
    "MoveError",
    "SwapMove",
    "ShiftMove",
    "Rewired",
    "MonotoneVerdict",
    "apply_swap",
    "apply_shift",
    "check_swap_monotone",
    "check_shift_monotone",
    "random_unicyclic",
    "random_swap",
    "random_shift",
    "SuiteReport",
    "run_swap_suite",
    "run_shift_suite",
]

HYP_TOL = 1e-8
MONOTONE_TOL = 1e-9
STRICT_GUARD = 1e-12


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class SwapMove:
    u1: int
    v1: int
    u2: int
    v2: int


@dataclass(frozen=True)
class ShiftMove:
    v1: int
    v2: int
    shifted: tuple[int, ...]


@dataclass(frozen=True)
class Rewired:
    n: int
    edges: frozenset = field(repr=False)
    graph: BoundaryGraph | None
    reason: str | None = None

    @property
    def is_unicyclic(self) -> bool:
        return self.graph is not None


def _annotate(n, edges) -> Rewired:
    try:
        return Rewired(n, frozenset(edges), build_graph(n, edges))
    except GraphError as exc:
        return Rewired(n, frozenset(edges), None, str(exc))


def _key(a, b):
    return (min(a, b), max(a, b))


def swap_violations(g, m: SwapMove) -> list[str]:
    out = []
    verts = (m.u1, m.v1, m.u2, m.v2)
    if any(not 0 <= v < g.n for v in verts):
        return ["vertex id out of range"]
    if len(set(verts)) != 4:
        out.append("vertices are not distinct")
    if not g.has_edge(m.u1, m.v1):
        out.append("u1v1 is not an edge")
    if not g.has_edge(m.u2, m.v2):
        out.append("u2v2 is not an edge")
    if g.has_edge(m.u1, m.u2):
        out.append("u1u2 is already an edge")
    if g.has_edge(m.v1, m.v2):
        out.append("v1v2 is already an edge")
    for name in ("u1", "v1", "v2"):
        if getattr(m, name) in g.boundary:
            out.append(f"{name} is a boundary vertex")
    return out


def apply_swap(g: BoundaryGraph, m: SwapMove) -> Rewired:
    """Replace edges u1v1, u2v2 by u1u2, v1v2. Every vertex keeps its degree.

    Raises:
        MoveError: if a hypothesis of the move fails; the message lists them.
    """
    bad = swap_violations(g, m)
    if bad:
        raise MoveError("; ".join(bad))
    edges = set(g.edges)
    edges -= {_key(m.u1, m.v1), _key(m.u2, m.v2)}
    edges |= {_key(m.u1, m.u2), _key(m.v1, m.v2)}
    return _annotate(g.n, edges)


def shift_violations(g, m: ShiftMove) -> list[str]:
    us = tuple(m.shifted)
    if any(not 0 <= v < g.n for v in (m.v1, m.v2, *us)):
        return ["vertex id out of range"]
    out = []
    if not us:
        out.append("no edges to shift")
    if len(set(us)) != len(us):
        out.append("shifted vertices repeat")
    if m.v1 == m.v2:
        out.append("v1 == v2")
    if m.v2 in us:
        out.append("v2 is among the shifted vertices")
    for u in us:
        if not g.has_edge(u, m.v1):
            out.append(f"u={u} is not adjacent to v1")
        if u != m.v2 and g.has_edge(u, m.v2):
            out.append(f"u={u} is already adjacent to v2")
    if len(us) > g.degree(m.v1) - 2:
        out.append(f"p = {len(us)} exceeds d(v1) - 2 = {g.degree(m.v1) - 2}")
    for name in ("v1", "v2"):
        if getattr(m, name) in g.boundary:
            out.append(f"{name} is a boundary vertex")
    return out


def apply_shift(g: BoundaryGraph, m: ShiftMove) -> Rewired:
    """Move the edges ``u v1`` (u in ``m.shifted``) over to ``v2``.

    The degree of v1 drops by p, that of v2 rises by p, the boundary is
    unchanged. The degree multiset is kept exactly when p = d(v1) - d(v2).

    Raises:
        MoveError: if a hypothesis of the move fails.
    """
    bad = shift_violations(g, m)
    if bad:
        raise MoveError("; ".join(bad))
    edges = set(g.edges)
    for u in m.shifted:
        edges.discard(_key(u, m.v1))
        edges.add(_key(u, m.v2))
    return _annotate(g.n, edges)


@dataclass(frozen=True)
class MonotoneVerdict:
    lam_before: float
    lam_after: float
    strict: bool

    @property
    def decrease(self) -> float:
        return self.lam_before - self.lam_after

    @property
    def holds(self) -> bool:
        """Weak decrease within 1e-9, and a real decrease when ``strict``."""
        if self.lam_after > self.lam_before + MONOTONE_TOL:
            return False
        if self.strict and not self.lam_after < self.lam_before - STRICT_GUARD:
            return False
        return True


def _check_pair(g, ep: EigenPair):
    f = np.asarray(ep.f)
    if f.shape != (g.n,):
        raise ValueError("eigenpair does not match the graph")
    m = dirichlet_laplacian(g)
    f0 = f[list(g.interior)]
    if np.linalg.norm(m @ f0 - ep.lam * f0) > 1e-7 or any(f[v] != 0 for v in g.boundary):
        raise ValueError("eigenpair is not an eigenpair of this graph")
    return f


def check_swap_monotone(g, m: SwapMove, ep: EigenPair, tol: float = HYP_TOL) -> MonotoneVerdict:
    """Compare eigenvalues before and after a swap whose f-hypotheses hold.

    Raises:
        MoveError: the move is invalid, its f-inequalities fail, or the
            result is not unicyclic.
        ValueError: ``ep`` is not an eigenpair of ``g``.
    """
    f = _check_pair(g, ep)
    if f[m.v1] < f[m.u2] - tol or f[m.v2] < f[m.u1] - tol:
        raise MoveError("need f(v1) >= f(u2) and f(v2) >= f(u1)")
    res = apply_swap(g, m)
    if not res.is_unicyclic:
        raise MoveError(f"swapped graph is not unicyclic: {res.reason}")
    strict = f[m.v1] > f[m.u2] + tol or f[m.v2] > f[m.u1] + tol
    return MonotoneVerdict(ep.lam, first_eigenpair(res.graph).lam, bool(strict))


def check_shift_monotone(g, m: ShiftMove, ep: EigenPair, tol: float = HYP_TOL) -> MonotoneVerdict:
    """Compare eigenvalues before and after a shift with f(v1) >= f(v2) >= f(u_t)."""
    f = _check_pair(g, ep)
    if f[m.v1] < f[m.v2] - tol or any(f[m.v2] < f[u] - tol for u in m.shifted):
        raise MoveError("need f(v1) >= f(v2) >= f(u_t) for every shifted u_t")
    res = apply_shift(g, m)
    if not res.is_unicyclic:
        raise MoveError(f"shifted graph is not unicyclic: {res.reason}")
    strict = any(f[m.v1] > f[u] + tol for u in m.shifted)
    return MonotoneVerdict(ep.lam, first_eigenpair(res.graph).lam, bool(strict))


def random_unicyclic(n: int, rng: random.Random) -> BoundaryGraph:
    """Random unicyclic graph with boundary: a random labelled tree plus one
    extra edge, resampled until some degree-1 vertex remains.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    while True:
        prufer = [rng.randrange(n) for _ in range(n - 2)]
        edges = _prufer_edges(n, prufer)
        present = {_key(u, v) for u, v in edges}
        while True:
            a, b = rng.sample(range(n), 2)
            if _key(a, b) not in present:
                break
        edges.append((a, b))
        try:
            return build_graph(n, edges)
        except GraphError:
            continue


def _prufer_edges(n, seq):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def random_swap(g, ep: EigenPair, rng: random.Random, tries: int = 200, tol: float = HYP_TOL):
    """Rejection-sample a swap whose hypotheses hold and whose result is unicyclic."""
    f = ep.f
    edges = g.sorted_edges()
    for _ in range(tries):
        a = edges[rng.randrange(len(edges))]
        b = edges[rng.randrange(len(edges))]
        u1, v1 = a if rng.random() < 0.5 else a[::-1]
        u2, v2 = b if rng.random() < 0.5 else b[::-1]
        m = SwapMove(u1, v1, u2, v2)
        if swap_violations(g, m):
            continue
        if f[v1] < f[u2] - tol or f[v2] < f[u1] - tol:
            continue
        if not apply_swap(g, m).is_unicyclic:
            continue
        return m
    return None


def random_shift(g, ep: EigenPair, rng: random.Random, tries: int = 200, tol: float = HYP_TOL):
    """Rejection-sample a shift whose hypotheses hold and whose result is connected."""
    f = ep.f
    interior = list(g.interior)
    for _ in range(tries):
        v1, v2 = rng.sample(interior, 2)
        if f[v1] < f[v2] - tol or g.degree(v1) < 3:
            continue
        cands = [
            u
            for u in g.neighbors(v1)
            if u != v2 and not g.has_edge(u, v2) and f[u] <= f[v2] + tol
        ]
        if not cands:
            continue
        p = rng.randint(1, min(len(cands), g.degree(v1) - 2))
        m = ShiftMove(v1, v2, tuple(sorted(rng.sample(cands, p))))
        if not apply_shift(g, m).is_unicyclic:
            continue
        return m
    return None


@dataclass
class SuiteReport:
    """Outcome of a seeded random property suite."""

    name: str
    seed: int
    cases: int = 0
    strict_cases: int = 0
    max_increase: float = -np.inf
    min_strict_decrease: float = np.inf
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.seed,
            "cases": self.cases,
            "strict_cases": self.strict_cases,
            "max_increase": self.max_increase,
            "min_strict_decrease": self.min_strict_decrease,
            "violations": self.violations,
            "ok": self.ok,
        }


def _run_suite(name, sampler, checker, cases, seed, n_min, n_max) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport(name, seed)
    while report.cases < cases:
        g = random_unicyclic(rng.randint(n_min, n_max), rng)
        ep = first_eigenpair(g)
        m = sampler(g, ep, rng)
        if m is None:
            continue
        verdict = checker(g, m, ep)
        report.cases += 1
        report.max_increase = max(report.max_increase, -verdict.decrease)
        if verdict.strict:
            report.strict_cases += 1
            report.min_strict_decrease = min(report.min_strict_decrease, verdict.decrease)
        if not verdict.holds:
            report.violations.append(
                {
                    "graph": g.to_json(),
                    "move": m.__dict__,
                    "lam_before": verdict.lam_before,
                    "lam_after": verdict.lam_after,
                    "strict": verdict.strict,
                }
            )
    return report


def run_swap_suite(cases: int = 1000, seed: int = 0, n_min: int = 6, n_max: int = 14) -> SuiteReport:
    """Random graphs and admissible swaps; the eigenvalue must never go up."""
    return _run_suite("swap", random_swap, check_swap_monotone, cases, seed, n_min, n_max)


def run_shift_suite(cases: int = 1000, seed: int = 0, n_min: int = 6, n_max: int = 14) -> SuiteReport:
    return _run_suite("shift", random_shift, check_shift_monotone, cases, seed, n_min, n_max)
