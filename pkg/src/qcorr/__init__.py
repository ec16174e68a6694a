"""Computable bipartite quantum correlations.

Negativity and geometric quantum discord (with its observable lower
bound) over explicit state families and random ensembles, plus a
reproducible experiment harness that cross-validates the closed forms
against a measurement-basis optimizer and mechanically checks the
hierarchy D_G >= Q >= N^2.
"""
from .errors import (
    BadRank,
    BadSpectrum,
    DimensionMismatch,
    MalformedCsv,
    NoConvergence,
    NonHermitian,
    NonSquare,
    NotAState,
    NotPure,
    OutOfRange,
    OutsideRegion,
    QcorrError,
)
from .harness import (
    ExperimentConfig,
    VerifyResult,
    boundary_2q,
    family_sweep,
    pure_qudit_cloud,
    pure_qudit_scan,
    resolve_threads,
    run_experiment,
    scatter_2q,
    scatter_2x3,
    two_qubit_cloud,
    verify,
)
from .linalg import (
    hermitian_eigensystem,
    hermitian_eigenvalues,
    hs_norm,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import (
    MeasureValue,
    OptimizerConfig,
    batch_negativity,
    batch_two_qubit_measures,
    dg_lower_bound_curve,
    discord_negativity_relation,
    geometric_discord_2q,
    geometric_discord_2q_variational,
    geometric_discord_numeric,
    geometric_discord_pure,
    isotropic_closed,
    negativity,
    negativity_pure,
    q_lower_bound,
    werner_closed,
    werner_discord_definitional,
    werner_negativity_definitional,
)
from .states import (
    BipartiteDensityMatrix,
    BlochForm,
    FamilyParam,
    SchmidtSpectrum,
    bell_state,
    bloch_compose,
    bloch_decompose,
    from_schmidt,
    isotropic,
    pure_2q_from_negativity,
    random_mixed,
    random_pure,
    random_schmidt,
    region_constraint,
    sample_stream,
    saturating_schmidt,
    saturating_theta_range,
    schmidt_spectrum,
    sep_mixture,
    sep_opt_state,
    swap_operator,
    werner,
    x_boundary_state,
)
from .svg import emit_svg_scatter

__all__ = [name for name in dir() if not name.startswith("_")]
