"""
Dirichlet eigenvalues of graphs with boundary
=============================================

Leaves act as the boundary: functions are pinned to zero there, and the
smallest eigenvalue of the remaining Laplacian block is the quantity we care
about. Run with ``python demos/01_dirichlet_eigenvalues.py``.
"""

import numpy as np

from faberkrahn import build_graph, dirichlet_laplacian, first_eigenpair, full_spectrum, load_fixture, rayleigh_quotient
from faberkrahn.spectral import sturm_count, tridiagonalize

# A triangle with one leaf per corner. The interior block is 3I minus the
# triangle's adjacency, so the spectrum is 1, 4, 4.
g = build_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
print(dirichlet_laplacian(g))
print("spectrum:", full_spectrum(g))

lam, f = first_eigenpair(g)
print(f"lambda = {lam:.4f}, f = {np.round(f, 4)}")

# The eigenfunction is the minimizer of the Rayleigh quotient; random
# functions vanishing on the leaves only do worse.
rng = np.random.default_rng(0)
samples = []
for _ in range(1000):
    h = np.zeros(g.n)
    h[list(g.interior)] = rng.normal(size=3)
    samples.append(rayleigh_quotient(g, h))
print(f"min over 1000 random functions: {min(samples):.4f} (>= {lam:.4f})")

# Bundled graphs with the same degree sequences but different shapes.
for name in ("triangle_path_14", "square_14", "square_tree_13", "triangle_branch_13"):
    ep = first_eigenpair(load_fixture(name))
    print(f"{name:<20} {ep.lam:.4f}")

# Independent check of the Jacobi result: a Sturm count on a Householder
# tridiagonalization puts no eigenvalue below lambda.
h = load_fixture("triangle_path_14")
d, e = tridiagonalize(dirichlet_laplacian(h))
lam = first_eigenpair(h).lam
print("eigenvalues below lambda - 1e-9:", sturm_count(d, e, lam - 1e-9))
print("eigenvalues below lambda + 1e-9:", sturm_count(d, e, lam + 1e-9))
