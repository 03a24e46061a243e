import random

import numpy as np
import pytest

from faberkrahn import build_graph, first_eigenpair, load_fixture
from faberkrahn.rewire import (
    MoveError,
    MonotoneVerdict,
    ShiftMove,
    SwapMove,
    apply_shift,
    apply_swap,
    check_shift_monotone,
    check_swap_monotone,
    random_shift,
    random_swap,
    random_unicyclic,
    run_shift_suite,
    run_swap_suite,
)


@pytest.fixture
def triangle_with_star():
    # triangle 0-1-2, vertex 3 hangs off 0 and carries two leaves
    return build_graph(9, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (3, 8)])


@pytest.fixture
def hexagon_with_pendants():
    ring = [(i, (i + 1) % 6) for i in range(6)]
    return build_graph(12, ring + [(i, i + 6) for i in range(6)])


def test_swap_keeps_degrees_and_lowers_eigenvalue(triangle_with_star):
    g = triangle_with_star
    m = SwapMove(0, 3, 5, 1)
    res = apply_swap(g, m)
    assert res.is_unicyclic
    assert sorted(res.graph.degrees) == sorted(g.degrees)
    verdict = check_swap_monotone(g, m, first_eigenpair(g))
    assert verdict.strict and verdict.holds and verdict.decrease > 0


def test_swap_between_equal_values_keeps_eigenvalue(hexagon_with_pendants):
    g = hexagon_with_pendants
    verdict = check_swap_monotone(g, SwapMove(0, 1, 3, 4), first_eigenpair(g))
    assert not verdict.strict
    assert abs(verdict.decrease) <= 1e-9


def test_disconnecting_swap_is_flagged():
    g = build_graph(10, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (4, 6), (2, 7), (7, 8), (7, 9)])
    res = apply_swap(g, SwapMove(0, 4, 2, 7))
    assert not res.is_unicyclic and "disconnected" in res.reason
    assert len(res.edges) == g.n


@pytest.mark.parametrize(
    "move, fragment",
    [
        (SwapMove(0, 1, 0, 2), "distinct"),
        (SwapMove(0, 5, 2, 6), "not an edge"),
        (SwapMove(0, 1, 2, 6), "u1u2"),
        (SwapMove(3, 7, 0, 4), "v1 is a boundary"),
        (SwapMove(0, 3, 9, 1), "out of range"),
    ],
)
def test_swap_hypotheses(triangle_with_star, move, fragment):
    with pytest.raises(MoveError, match=fragment):
        apply_swap(triangle_with_star, move)


def test_swap_needs_value_inequalities(triangle_with_star):
    g = triangle_with_star
    with pytest.raises(MoveError, match="f\\(v1\\)"):
        check_swap_monotone(g, SwapMove(0, 1, 7, 3), first_eigenpair(g))


def test_shift_pendant_between_interior_vertices():
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6)])
    res = apply_shift(g, ShiftMove(0, 1, (3,)))
    assert res.graph.degree(0) == 3 and res.graph.degree(1) == 4
    assert sorted(res.graph.degrees) == sorted(g.degrees)


def test_shift_children_lowers_eigenvalue(triangle_with_star):
    g = triangle_with_star
    ep = first_eigenpair(g)
    m = ShiftMove(1, 3, (5,))
    assert ep.f[1] > ep.f[3] > ep.f[5]
    verdict = check_shift_monotone(g, m, ep)
    assert verdict.strict and verdict.lam_after < verdict.lam_before


def test_shift_too_many_edges(triangle_with_star):
    with pytest.raises(MoveError, match="exceeds"):
        apply_shift(triangle_with_star, ShiftMove(1, 3, (0, 5)))


def test_shift_hypotheses(triangle_with_star):
    with pytest.raises(MoveError, match="not adjacent"):
        apply_shift(triangle_with_star, ShiftMove(0, 3, (5,)))
    with pytest.raises(MoveError, match="v1 == v2"):
        apply_shift(triangle_with_star, ShiftMove(0, 0, (4,)))


def test_eigenpair_must_belong_to_graph(triangle_with_star):
    other = first_eigenpair(load_fixture("ball_13"))
    with pytest.raises(ValueError):
        check_swap_monotone(triangle_with_star, SwapMove(0, 3, 5, 1), other)


def test_verdict_rules():
    assert MonotoneVerdict(1.0, 1.0 + 5e-10, False).holds
    assert not MonotoneVerdict(1.0, 1.0 + 1e-8, False).holds
    assert not MonotoneVerdict(1.0, 1.0, True).holds
    assert MonotoneVerdict(1.0, 0.9, True).holds


def test_samplers_respect_hypotheses():
    rng = random.Random(4)
    for _ in range(30):
        g = random_unicyclic(rng.randint(6, 12), rng)
        ep = first_eigenpair(g)
        for sampler, checker in ((random_swap, check_swap_monotone), (random_shift, check_shift_monotone)):
            m = sampler(g, ep, rng)
            if m is not None:
                assert checker(g, m, ep).holds


def test_random_graphs_are_unicyclic_with_boundary():
    rng = random.Random(0)
    for _ in range(50):
        g = random_unicyclic(rng.randint(4, 15), rng)
        assert len(g.edges) == g.n and g.boundary


@pytest.mark.parametrize("runner", [run_swap_suite, run_shift_suite])
def test_small_suites_are_clean_and_reproducible(runner):
    a = runner(cases=60, seed=3)
    b = runner(cases=60, seed=3)
    assert a.ok and a.cases == 60 and a.strict_cases > 0
    assert a.to_json() == b.to_json()
    assert np.isfinite(a.min_strict_decrease) and a.min_strict_decrease > 0
