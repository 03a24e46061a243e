"""
The layered construction
========================

Degrees are handed out breadth first, smallest first, starting from a
triangle at the root. Its eigenfunction decreases along the layer-major
order.
"""

from faberkrahn import (
    bfs_layering,
    check_degree_monotone,
    check_slo,
    construct_u_star,
    find_cycle,
    first_eigenpair,
    induced_ordering,
    to_dot,
)
from faberkrahn.ordering import is_f_nonincreasing

pi = (3, 3, 3, 4, 4, 5) + (1,) * 10
g = construct_u_star(pi)
print("edges:", g.sorted_edges())
print("layer sizes:", bfs_layering(g, 0).layer_sizes)
print("cycle:", find_cycle(g))

ep = first_eigenpair(g)
order = induced_ordering(g, ep)
print("order from the eigenfunction:", order.order)
print("spiral-like:", bool(check_slo(g, order)))
print("f nonincreasing:", is_f_nonincreasing(ep, order))
print("degrees nondecreasing:", check_degree_monotone(g, order))

# Graphviz source; leaves are boxes.
print(to_dot(g, values=ep.f))
