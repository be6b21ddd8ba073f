"""Graph smoothing in the l1, l2 and l-infinity norms.

The l1 parameter ``b(G)`` is computed exactly through sparsest cuts, the l2
parameter is the algebraic connectivity, and the l-infinity parameter
``gamma(G)`` comes from a family of linear programs.
"""

from .bounds import BoundsReport, bounds_report, isoperimetric, xi_min
from .complementarity import ComplementarityModel, export_complementarity_model, render_model
from .families import (
    FamilySpec,
    b_tree,
    center_edges,
    closed_form_b,
    generate,
    is_tree,
    random_connected_graph,
    random_geometric_graph,
    random_tree,
    substar_check,
    wheel_b,
)
from .graph import (
    Cut,
    Graph,
    GraphFormatError,
    cut,
    degree_stats,
    induced_connected,
    is_connected,
    laplacian,
    parse_edge_list,
    read_edge_list,
    render_edge_list,
    write_edge_list,
)
from .l1 import (
    CapExceeded,
    L1Result,
    QuasiBipartition,
    b_exact,
    b_quasi_oracle,
    f1,
    heuristic_b_upper,
    is_feasible_l1,
    l1_fiedler_from_cut,
    min_density_unpruned,
)
from .linf import LinfResult, build_lp_k, gamma, gamma_path_closed_form
from .lp import LinearProgram, LPSolution, solve_lp
from .mincut import min_cut
from .spectral import (
    EigenDecomposition,
    algebraic_connectivity,
    eig_symmetric,
    fiedler_vector,
    spectral,
    spectral_bisection,
)
from .vectors import Regime, SmoothingVector

__version__ = "0.1.0"
