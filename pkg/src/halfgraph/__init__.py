"""Exact verification toolkit for sparse halves of triangle-free graphs.

Everything computes in exact arithmetic: rationals, elements of
Q(sqrt(161)), and multivariate polynomials.  The package provides the graph
layer (enumeration, named strongly regular graphs, graph6 I/O), flag-style
densities, exact minimum halves, every certified half construction, the
strongly-regular case analysis, and the 80-case girth-5 driver, plus a CLI
(`halfgraph`) that reproduces all checkable claims.
"""

from .constructions import (
    EdgeSplit,
    clebsch_recipe_half,
    edge_halves,
    edge_split,
    gewirtz_recipe_half,
    krivelevich_bound,
    m22_recipe_half,
    maxdeg_halves,
    triple_half_bound,
)
from .density import DensityReport, c4_density, density_report, e_rel, partition_densities, rho
from .exactmath import (
    RHO0,
    Polynomial,
    QuadNum,
    Rational,
    RationalFunc,
    poly_derive,
    poly_eval,
    verify_sparse_identities,
)
from .girth5 import beta_u, first_bound, gamma, girth5_master, girth5_report, n_window, ramsey3
from .graphcore import (
    Graph,
    NamedGraph,
    blowup,
    canonical_key,
    count_edge_rooted_flags4,
    enumerate_triangle_free,
    girth,
    has_induced_2matching,
    independence_number,
    is_triangle_free,
    load_graph6,
    named,
    save_graph6,
)
from .halves import (
    BoundCertificate,
    Half,
    beta_exact,
    beta_of_half,
    local_search_half,
)
from .independence import GreedyState, independence_formula_checks, independence_half
from .srg import (
    SrgParams,
    regular_beta_bound,
    rho_qc,
    srg_beta_bound,
    srg_c4,
    srg_case_analysis,
    srg_from_qc,
)

__version__ = "0.1.0"
