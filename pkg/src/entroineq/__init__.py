"""Entropic inequalities for group representation matrix elements.

Squared matrix elements of unitary irreducible representations form
probability distributions; invertible index mappings relabel them as
joint tables whose Shannon/Tsallis entropies obey subadditivity.  This
package computes the matrix elements (Jacobi-polynomial and Gauss-
hypergeometric routes, each with an independent cross-check), applies
the mappings, and verifies the inequalities numerically.
"""

from .entropy import (
    SubadditivityReport,
    check_q,
    joint_shannon,
    renyi,
    shannon,
    subadditivity_report,
    tsallis,
    tsallis_power_sums,
    tsallis_subadditivity_report,
)
from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    EntroineqError,
    NormalizationError,
    PoleError,
    UnsupportedBranchError,
)
from .halfint import HalfInt
from .probability import (
    BistochasticMatrix,
    JointTable,
    ProbabilityVector,
    SeriesKind,
    bipartite_split,
    enumerate_weights,
    general_reshape,
    interleave_split,
    marginal_pair,
    marginals,
    tripartite_reshape,
)
from .specfun import (
    Su11Args,
    bargmann_b,
    bargmann_b_continued,
    c_function,
    dmatrix,
    hyp2f1,
    jacobi,
    l_function,
    log_gamma,
    rgamma,
    s_factor,
    wigner_d,
    wigner_oracle,
)
from .su2 import (
    Su2Sweep,
    closed_form_check,
    column_distribution,
    su2_subadditivity,
    su2_tsallis_subadditivity,
    sweep,
)
from .su11 import (
    TruncatedDistribution,
    continuous_series_report,
    discrete_series_distribution,
    mixed_series_report,
    su11_subadditivity,
)

__version__ = "0.1.0"

__all__ = [
    "BistochasticMatrix",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "EntroineqError",
    "HalfInt",
    "JointTable",
    "NormalizationError",
    "PoleError",
    "ProbabilityVector",
    "SeriesKind",
    "Su11Args",
    "Su2Sweep",
    "SubadditivityReport",
    "TruncatedDistribution",
    "UnsupportedBranchError",
    "bargmann_b",
    "bargmann_b_continued",
    "bipartite_split",
    "c_function",
    "check_q",
    "closed_form_check",
    "column_distribution",
    "continuous_series_report",
    "discrete_series_distribution",
    "dmatrix",
    "enumerate_weights",
    "general_reshape",
    "hyp2f1",
    "interleave_split",
    "jacobi",
    "joint_shannon",
    "l_function",
    "log_gamma",
    "marginal_pair",
    "marginals",
    "mixed_series_report",
    "renyi",
    "rgamma",
    "s_factor",
    "shannon",
    "su11_subadditivity",
    "su2_subadditivity",
    "su2_tsallis_subadditivity",
    "subadditivity_report",
    "sweep",
    "tripartite_reshape",
    "tsallis",
    "tsallis_power_sums",
    "tsallis_subadditivity_report",
    "wigner_d",
    "wigner_oracle",
]
