"""
Hand-transcribed reference graphs and their reference eigenvalues.

Vertex ids follow the labels of the original drawings; the layered example
is numbered layer by layer. Each fixture also records the degree
sequence its drawing is captioned with, so a transcription slip shows up as
a mismatch.
"""

from __future__ import annotations

import json
from importlib import resources

from .graph import BoundaryGraph, DegreeSequence, build_graph

__all__ = [
    "FIXTURE_SEQUENCES",
    "REFERENCE_LAMBDAS",
    "REFERENCE_TOL",
    "load_fixture",
    "fixture_names",
    "reference_witnesses",
]

FIXTURE_SEQUENCES = {
    # ball approximation; ids are its spiral-like order
    "ball_13": (3, 3, 3, 3, 3, 4) + (1,) * 7,
    # layered extremal graph, ids in layer-major order
    "layered_16": (3, 3, 3, 4, 4, 5) + (1,) * 10,
    # triangle with a pendant path of 2s, then a branching
    "triangle_path_14": (2, 2, 2, 3, 3, 4, 5) + (1,) * 7,
    # 4-cycle through the three 2s, same degrees as triangle_path_14
    "square_14": (2, 2, 2, 3, 3, 4, 5) + (1,) * 7,
    # 4-cycle glued to a layered tree
    "square_tree_13": (2, 2, 2, 4, 4, 5) + (1,) * 7,
    # triangle version with the same degrees as square_tree_13
    "triangle_branch_13": (2, 2, 2, 4, 4, 5) + (1,) * 7,
}

# Four-decimal reference values of the first Dirichlet eigenvalue.
REFERENCE_LAMBDAS = {
    "triangle_path_14": 0.1017,
    "square_14": 0.1227,
    "square_tree_13": 0.2479,
    "triangle_branch_13": 0.2819,
}
REFERENCE_TOL = 5e-5


def fixture_names() -> list[str]:
    return list(FIXTURE_SEQUENCES)


def load_fixture(name: str) -> BoundaryGraph:
    if name not in FIXTURE_SEQUENCES:
        raise KeyError(f"unknown fixture {name!r}; choose from {fixture_names()}")
    text = resources.files("faberkrahn.data").joinpath(f"{name}.json").read_text()
    data = json.loads(text)
    g = build_graph(data["n"], data["edges"])
    expected = DegreeSequence(FIXTURE_SEQUENCES[name])
    if g.degree_sequence() != expected:
        raise ValueError(f"fixture {name} has degrees {g.degree_sequence()}, expected {expected}")
    return g


def reference_witnesses() -> dict:
    """Fixture graphs grouped by degree tuple, for the degree-2 sweep report."""
    out: dict = {}
    for name in REFERENCE_LAMBDAS:
        g = load_fixture(name)
        out.setdefault(g.degree_sequence().degrees, {})[name] = g
    return out
