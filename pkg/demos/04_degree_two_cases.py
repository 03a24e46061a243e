"""
Sequences with vertices of degree 2
===================================

With three or more 2s the layered construction no longer applies. Two
alternatives are tried instead: a triangle feeding a path of 2s, or a long
cycle glued to a layered tree. The sweep compares each with the brute-force
minimum; nothing is asserted.
"""

from faberkrahn import classify_degree_two_case, construct_for, first_eigenpair, load_fixture
from faberkrahn.fixtures import reference_witnesses
from faberkrahn.search import explore_degree_two_cases

path_seq = (2, 2, 2, 3, 3, 4, 5) + (1,) * 7
square_seq = (2, 2, 2, 4, 4, 5) + (1,) * 7

for pi, pair in ((path_seq, ("triangle_path_14", "square_14")), (square_seq, ("square_tree_13", "triangle_branch_13"))):
    g = construct_for(pi)
    a, b = (first_eigenpair(load_fixture(name)).lam for name in pair)
    print(f"case {classify_degree_two_case(pi)}: construction {first_eigenpair(g).lam:.4f}; {pair[0]} {a:.4f} < {pair[1]} {b:.4f}")

rows = explore_degree_two_cases(
    9, cap=14, witnesses=reference_witnesses(), extra_sequences=[path_seq, square_seq]
)
by_case = {}
for r in rows:
    by_case.setdefault(r["case"], []).append(r["agree"])
for case, verdicts in sorted(by_case.items()):
    print(f"case {case}: {sum(verdicts)}/{len(verdicts)} sequences where the construction is the minimizer")
