"""
Exhaustive search over all unicyclic graphs with a given degree sequence.

A unicyclic graph with boundary is a cycle of interior vertices with rooted
trees hanging from it. The enumerator picks the cycle length and the cyclic
sequence of cycle degrees (one representative per dihedral class), then
fills the open child slots breadth first with leaves or interior vertices,
keeping the degrees of siblings nondecreasing. What is left over is
duplicated isomorphism classes, removed with canonical forms.
"""

from __future__ import annotations

import json
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .canonical import canonical_form
from .construct import ConstructionError, classify_degree_two_case, construct_for, construct_u_star
from .graph import BoundaryGraph, DegreeSequence, build_graph, find_cycle
from .ordering import (
    check_degree_monotone,
    check_slo,
    induced_ordering,
    is_f_nonincreasing,
)
from .spectral import dirichlet_laplacian, first_eigenpair, jacobi_eigh

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_CAP",
    "TIE_TOL",
    "CapExceeded",
    "VerificationError",
    "SearchReport",
    "enumerate_unicyclic",
    "find_extremal",
    "unicyclic_sequences",
    "extremal_properties",
    "spectral_properties",
    "verify_extremal_uniqueness",
    "explore_degree_two_cases",
]

DEFAULT_CAP = 13
TIE_TOL = 1e-9


class CapExceeded(ValueError):
    pass


class VerificationError(AssertionError):
    def __init__(self, message: str, counterexample: dict):
        super().__init__(message)
        self.counterexample = counterexample


def _dihedral_min(seq: tuple[int, ...]) -> tuple[int, ...]:
    c = len(seq)
    images = []
    for s in (seq, seq[::-1]):
        images.extend(s[i:] + s[:i] for i in range(c))
    return min(images)


def _cycle_sequences(interior: Counter, c: int) -> Iterator[tuple[int, ...]]:
    # All length-c arrangements from the multiset, one per dihedral class.
    values = sorted(interior)
    seen = set()

    def rec(prefix, remaining):
        if len(prefix) == c:
            t = tuple(prefix)
            if _dihedral_min(t) == t and t not in seen:
                seen.add(t)
                yield t
            return
        for d in values:
            if remaining[d]:
                remaining[d] -= 1
                prefix.append(d)
                yield from rec(prefix, remaining)
                prefix.pop()
                remaining[d] += 1

    yield from rec([], Counter(interior))


def _fill_forests(cycle: tuple[int, ...], remaining: Counter, n_leaves: int):
    c = len(cycle)
    edges = [(i, (i + 1) % c) for i in range(c)]
    slots = [v for v, d in enumerate(cycle) for _ in range(d - 2)]
    values = sorted(remaining)
    state = {"next": c}
    choice = []

    def rec(i, leaves_left):
        if i == len(slots):
            if leaves_left == 0 and not any(remaining.values()):
                yield list(edges)
            return
        parent = slots[i]
        lower = choice[-1] if i > 0 and slots[i - 1] == parent else 1
        if lower <= 1 and leaves_left > 0:
            v = state["next"]
            state["next"] += 1
            edges.append((parent, v))
            choice.append(1)
            yield from rec(i + 1, leaves_left - 1)
            choice.pop()
            edges.pop()
            state["next"] -= 1
        for d in values:
            if d < lower or not remaining[d]:
                continue
            remaining[d] -= 1
            v = state["next"]
            state["next"] += 1
            edges.append((parent, v))
            slots.extend([v] * (d - 1))
            choice.append(d)
            yield from rec(i + 1, leaves_left)
            choice.pop()
            del slots[len(slots) - (d - 1) :]
            edges.pop()
            state["next"] -= 1
            remaining[d] += 1

    yield from rec(0, n_leaves)


def _cache_path(pi: DegreeSequence) -> Path | None:
    root = os.environ.get("FK_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"unicyclic_{'-'.join(map(str, pi.degrees))}.json"


def _as_sequence(pi) -> DegreeSequence:
    return pi if isinstance(pi, DegreeSequence) else DegreeSequence(tuple(pi))


def enumerate_unicyclic(pi, cap: int = DEFAULT_CAP) -> Iterator[BoundaryGraph]:
    """Yield one graph per isomorphism class of connected unicyclic graphs
    realizing ``pi``, in a deterministic order.

    If the environment variable ``FK_CACHE_DIR`` is set, the edge lists are
    memoized there as JSON.

    Raises:
        CapExceeded: ``len(pi) > cap``.
    """
    pi = _as_sequence(pi)
    if pi.n > cap:
        raise CapExceeded(f"n = {pi.n} exceeds the enumeration cap {cap}")
    cache = _cache_path(pi)
    if cache is not None and cache.exists():
        for edges in json.loads(cache.read_text()):
            yield build_graph(pi.n, edges)
        return
    found = []
    seen = set()
    interior = Counter(pi.interior)
    for c in range(3, pi.k + 1):
        for cyc in _cycle_sequences(interior, c):
            remaining = interior - Counter(cyc)
            for edges in _fill_forests(cyc, remaining, pi.n_boundary):
                g = build_graph(pi.n, edges)
                code = canonical_form(g)
                if code in seen:
                    continue
                seen.add(code)
                found.append(g)
                if cache is None:
                    yield g
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        cache.write_text(json.dumps([g.sorted_edges() for g in found]))
        yield from found


@dataclass
class SearchReport:
    """Result of minimizing the first Dirichlet eigenvalue over all classes."""

    pi: DegreeSequence
    count_isoclasses: int
    best_lambda: float
    best_graph: BoundaryGraph
    runner_up_lambda: float
    matches_construction: bool | None
    construction: str | None
    construction_lambda: float | None
    elapsed: float
    ties: int = 0
    lambdas: list = field(default_factory=list, repr=False)
    graphs: list = field(default_factory=list, repr=False)

    @property
    def gap(self) -> float:
        return self.runner_up_lambda - self.best_lambda

    @property
    def unique(self) -> bool:
        return self.ties == 0

    def to_json(self) -> dict:
        return {
            "pi": list(self.pi.degrees),
            "n_classes": self.count_isoclasses,
            "best_lambda": self.best_lambda,
            "runner_up_lambda": None if np.isinf(self.runner_up_lambda) else self.runner_up_lambda,
            "gap": None if np.isinf(self.gap) else self.gap,
            "unique": self.unique,
            "construction": self.construction,
            "construction_lambda": self.construction_lambda,
            "matches_construction": self.matches_construction,
            "best_graph": self.best_graph.to_json(),
            "elapsed": self.elapsed,
        }


def _applicable_construction(pi: DegreeSequence):
    case = classify_degree_two_case(pi)
    if case is None and 2 in pi.interior:
        return None, None
    variant = {None: "ustar", 1: "ustar", 2: "u1", 3: "u2"}[case]
    try:
        return variant, construct_for(pi, variant)
    except ConstructionError:
        return variant, None


def find_extremal(pi, cap: int = DEFAULT_CAP, keep_all: bool = False) -> SearchReport:
    """Minimize the first Dirichlet eigenvalue over all classes realizing ``pi``.

    Distinct classes within ``TIE_TOL`` of the minimum are counted in
    ``ties`` rather than broken silently. Among tied classes the one with the
    smallest canonical code is reported.
    """
    pi = _as_sequence(pi)
    t0 = time.perf_counter()
    graphs = list(enumerate_unicyclic(pi, cap))
    lams = np.array([first_eigenpair(g).lam for g in graphs])
    order = sorted(range(len(graphs)), key=lambda i: (lams[i], canonical_form(graphs[i])))
    best = order[0]
    runner = lams[order[1]] if len(order) > 1 else np.inf
    ties = sum(1 for i in order[1:] if lams[i] - lams[best] <= TIE_TOL)
    variant, cons = _applicable_construction(pi)
    matches = None
    cons_lam = None
    if cons is not None:
        cons_lam = first_eigenpair(cons).lam
        matches = canonical_form(cons) == canonical_form(graphs[best])
    return SearchReport(
        pi=pi,
        count_isoclasses=len(graphs),
        best_lambda=float(lams[best]),
        best_graph=graphs[best],
        runner_up_lambda=float(runner),
        matches_construction=matches,
        construction=variant,
        construction_lambda=cons_lam,
        elapsed=time.perf_counter() - t0,
        ties=ties,
        lambdas=[float(x) for x in lams] if keep_all else [],
        graphs=graphs if keep_all else [],
    )


def unicyclic_sequences(n_max: int, n_min: int = 4, min_interior: int = 2) -> Iterator[DegreeSequence]:
    """All valid degree sequences with ``n_min <= n <= n_max`` whose interior
    degrees are all >= ``min_interior``, ordered by n then lexicographically.
    """
    for n in range(n_min, n_max + 1):
        for k in range(3, n):
            target = n + k  # interior degree sum: 2n minus the n - k ones
            for combo in combinations_with_replacement(range(min_interior, n), k):
                if sum(combo) == target:
                    yield DegreeSequence(combo + (1,) * (n - k))


def spectral_properties(g) -> dict:
    """Positivity and simplicity of the first eigenvalue, sign of its eigenfunction.

    Computed straight from the eigensolver so that a failure is reported
    instead of raised.
    """
    w, vecs = jacobi_eigh(dirichlet_laplacian(g))
    f0 = vecs[:, 0]
    if f0[np.argmax(np.abs(f0))] < 0:
        f0 = -f0
    return {
        "lambda_positive": bool(w[0] > 0),
        "simple": bool(len(w) < 2 or w[1] - w[0] > TIE_TOL),
        "f_positive": bool(np.all(f0 > 0)),
    }


def extremal_properties(g) -> dict:
    """Structural checks expected of an extremal graph (all interior degrees >= 3).

    * the eigenfunction-induced ordering is spiral-like and f is nonincreasing
      along it;
    * f on the cycle strictly exceeds f everywhere off the cycle;
    * the three largest values of f sit on a triangle, which is the cycle;
    * interior degrees are nondecreasing along the induced ordering.
    """
    ep = first_eigenpair(g)
    f = ep.f
    ordering = induced_ordering(g, ep)
    slo = check_slo(g, ordering)
    cycle = find_cycle(g)
    off = [v for v in range(g.n) if v not in cycle]
    top3 = sorted(range(g.n), key=lambda v: (-f[v], v))[:3]
    top3_triangle = (
        len(cycle) == 3
        and set(top3) == set(cycle)
        and all(g.has_edge(a, b) for a, b in [(top3[0], top3[1]), (top3[0], top3[2]), (top3[1], top3[2])])
    )
    return {
        "slo": bool(slo),
        "f_nonincreasing": is_f_nonincreasing(ep, ordering),
        "cycle_dominates": bool(min(f[v] for v in cycle) > max(f[v] for v in off) + 0.0),
        "top3_triangle": bool(top3_triangle),
        "degree_monotone": check_degree_monotone(g, ordering),
    }


def _verify_one(pi: DegreeSequence, cap: int) -> dict:
    report = find_extremal(pi, cap, keep_all=True)
    ustar = construct_u_star(pi)
    row = report.to_json()
    row["matches_construction"] = canonical_form(ustar) == canonical_form(report.best_graph)
    row["strict_gap"] = bool(report.gap > TIE_TOL)
    row["extremal_checks"] = extremal_properties(report.best_graph)
    bad = []
    for g in report.graphs:
        props = spectral_properties(g)
        if not all(props.values()):
            bad.append({"graph": g.to_json(), **props})
    row["spectral_violations"] = bad
    row["ok"] = bool(
        row["matches_construction"]
        and row["strict_gap"]
        and all(row["extremal_checks"].values())
        and not bad
    )
    return row


def _map(fn, items, workers):
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _verify_task(args):
    return _verify_one(*args)


def verify_extremal_uniqueness(
    n_max: int, cap: int = DEFAULT_CAP, workers: int = 1, raise_on_failure: bool = True
) -> list[dict]:
    """Brute-force check over every sequence with all interior degrees >= 3.

    For each sequence the minimizer over all isomorphism classes must be the
    layered construction, with a gap > ``TIE_TOL`` to the runner-up. The
    structural checks of :func:`extremal_properties` must hold for the
    minimizer, and :func:`spectral_properties` for every class.

    Returns one row per sequence, in the order of :func:`unicyclic_sequences`.

    Raises:
        VerificationError: carrying the first failing row, unless
            ``raise_on_failure`` is false.
    """
    if n_max > cap:
        raise CapExceeded(f"n_max = {n_max} exceeds the enumeration cap {cap}")
    seqs = list(unicyclic_sequences(n_max, min_interior=3))
    rows = _map(_verify_task, [(pi, cap) for pi in seqs], workers)
    for row in rows:
        log.info("pi=%s classes=%d lambda=%.6f gap=%.3g ok=%s",
                 row["pi"], row["n_classes"], row["best_lambda"], row["gap"] or np.inf, row["ok"])
        if not row["ok"] and raise_on_failure:
            raise VerificationError(f"extremal check failed for {row['pi']}", row)
    return rows


def _explore_one(pi: DegreeSequence, cap: int, witnesses: dict) -> dict:
    report = find_extremal(pi, cap)
    row = report.to_json()
    row["case"] = classify_degree_two_case(pi)
    row["agree"] = report.matches_construction
    row["witnesses"] = {name: first_eigenpair(g).lam for name, g in witnesses.items()}
    return row


def _explore_task(args):
    return _explore_one(*args)


def explore_degree_two_cases(
    n_max: int,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    witnesses: dict | None = None,
    extra_sequences: Iterable = (),
) -> list[dict]:
    """Report-only sweep over every sequence containing a 2.

    Each sequence is classified into cases 1/2/3 (see
    :func:`~faberkrahn.construct.classify_degree_two_case`) and the brute-force
    minimizer is compared with the matching construction. Nothing is asserted.

    ``witnesses`` maps a degree tuple to ``{name: graph}``; each witness
    graph's eigenvalue is added to that sequence's row. ``extra_sequences``
    are appended after the sweep (e.g. larger sequences of interest); they
    must still fit under ``cap``.
    """
    if n_max > cap:
        raise CapExceeded(f"n_max = {n_max} exceeds the enumeration cap {cap}")
    witnesses = witnesses or {}
    seqs = [pi for pi in unicyclic_sequences(n_max) if 2 in pi.interior]
    for pi in extra_sequences:
        pi = _as_sequence(pi)
        if pi not in seqs:
            seqs.append(pi)
    tasks = [(pi, cap, witnesses.get(pi.degrees, {})) for pi in seqs]
    return _map(_explore_task, tasks, workers)
