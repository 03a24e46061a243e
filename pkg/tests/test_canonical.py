from itertools import permutations

import networkx as nx
import numpy as np
import pytest

from faberkrahn import canonical_form, construct_u_star, enumerate_unicyclic, load_fixture
from faberkrahn.canonical import canonical_code
from faberkrahn.rewire import random_unicyclic

import oracles


@pytest.mark.parametrize("name", ["ball_13", "layered_16", "triangle_path_14", "square_tree_13"])
def test_invariant_under_random_relabeling(name):
    g = load_fixture(name)
    code = canonical_form(g)
    rng = np.random.default_rng(11)
    for _ in range(100):
        assert canonical_form(g.relabel(rng.permutation(g.n))) == code


def test_every_labeling_of_triangle_with_pendants(triangle_pendants):
    codes = {canonical_form(triangle_pendants.relabel(p)) for p in permutations(range(6))}
    assert len(codes) == 1


def test_separates_same_degree_graphs():
    assert canonical_form(load_fixture("triangle_path_14")) != canonical_form(load_fixture("square_14"))
    assert canonical_form(load_fixture("square_tree_13")) != canonical_form(load_fixture("triangle_branch_13"))


def test_agrees_with_networkx_isomorphism():
    import random

    rng = random.Random(5)
    graphs = [random_unicyclic(rng.randint(5, 10), rng) for _ in range(60)]
    for i, a in enumerate(graphs):
        for b in graphs[i + 1 :]:
            if a.n != b.n:
                continue
            same = nx.is_isomorphic(oracles.to_networkx(a), oracles.to_networkx(b))
            assert (canonical_form(a) == canonical_form(b)) == same


def test_vertex_labels_break_symmetry():
    path = [(0, 1), (1, 2)]
    assert canonical_code(3, path, ["a", "b", "b"]) == canonical_code(3, path, ["b", "b", "a"])
    assert canonical_code(3, path, ["a", "b", "c"]) != canonical_code(3, path, ["b", "a", "c"])


def test_forms_are_ordered_and_hashable():
    forms = sorted({canonical_form(g) for g in enumerate_unicyclic((2, 2, 3, 3, 1, 1))})
    assert len(forms) == 4
    assert all(isinstance(f.hex(), str) for f in forms)
    assert canonical_form(construct_u_star((3, 3, 3, 1, 1, 1))) in {
        canonical_form(g) for g in enumerate_unicyclic((3, 3, 3, 1, 1, 1))
    }
