"""
Exhaustive search over isomorphism classes
==========================================

For small degree sequences every unicyclic realization can be listed, one
per isomorphism class, and the eigenvalue minimized by brute force.
"""

import time

from faberkrahn import construct_u_star, enumerate_unicyclic, find_extremal, first_eigenpair
from faberkrahn.search import verify_extremal_uniqueness

pi = (3, 3, 3, 4, 4) + (1,) * 7
graphs = list(enumerate_unicyclic(pi))
lams = sorted(first_eigenpair(g).lam for g in graphs)
print(f"{pi}: {len(graphs)} classes; smallest eigenvalues {[round(x, 4) for x in lams[:4]]}")

rep = find_extremal(pi)
print(f"minimum {rep.best_lambda:.6f}, runner-up {rep.runner_up_lambda:.6f}")
print("layered construction attains it:", rep.matches_construction)
print("construction eigenvalue:", round(first_eigenpair(construct_u_star(pi)).lam, 6))

# Every sequence with interior degrees >= 3 and at most 10 vertices.
t0 = time.perf_counter()
rows = verify_extremal_uniqueness(10, raise_on_failure=False)
print(f"{len(rows)} sequences checked in {time.perf_counter() - t0:.2f}s")
for r in rows:
    gap = "single class" if r["gap"] is None else f"gap {r['gap']:.4f}"
    print(f"  {','.join(map(str, r['pi'])):<28} classes={r['n_classes']:<3} {gap:<14} ok={r['ok']}")
