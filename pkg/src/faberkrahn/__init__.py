"""Smallest first Dirichlet eigenvalue among unicyclic graphs with a given degree sequence."""

from .canonical import CanonicalForm, canonical_form
from .construct import (
    ConstructionError,
    classify_degree_two_case,
    construct_for,
    construct_slo_tree,
    construct_u1,
    construct_u2,
    construct_u_star,
)
from .fixtures import REFERENCE_LAMBDAS, fixture_names, load_fixture
from .graph import (
    BoundaryGraph,
    DegreeSequence,
    GraphError,
    InvalidDegreeSequence,
    Layering,
    bfs_layering,
    build_graph,
    find_cycle,
    validate_degree_sequence,
)
from .io import read_graph, to_dot, write_graph
from .ordering import (
    SloOrdering,
    check_degree_monotone,
    check_slo,
    induced_ordering,
    is_ball_approximation,
)
from .rewire import (
    ShiftMove,
    SwapMove,
    apply_shift,
    apply_swap,
    check_shift_monotone,
    check_swap_monotone,
    run_shift_suite,
    run_swap_suite,
)
from .search import (
    SearchReport,
    enumerate_unicyclic,
    explore_degree_two_cases,
    find_extremal,
    verify_extremal_uniqueness,
)
from .spectral import EigenPair, dirichlet_laplacian, first_eigenpair, full_spectrum, rayleigh_quotient

__version__ = "0.1.0"
