from . import plugin
from .__about__ import __version__
from . import fixtures
from .errors import (
    BadDirection,
    ClusterTubeError,
    ConfigurationError,
    GradingViolation,
    InShift,
    InternalInvariantBroken,
    InvalidLength,
    InvalidRank,
    LaurentViolation,
    NotExchangePair,
    NotRigid,
    RankMismatch,
    SeedCapExceeded,
    TubeError,
    Undefined,
    UsageError,
    WingUndefined,
    WorkerFailure,
)
from .tube_core import (
    Indec,
    TubeObject,
    ext1_dim,
    hom_cluster_dim,
    hom_tube_dim,
    in_wing,
    make_object,
    normalize,
    shift,
    shift_inv,
    tau,
    tau_inv,
    tube_rank,
)
from .rep_oracle import NilpotentRep, build_rep, hom_dim_oracle
from .rigid_calculus import (
    ExchangeData,
    MaximalRigid,
    b_matrix,
    check_compatibility,
    compatibility_graph,
    distinguished_maximal_rigid,
    enum_maximal_rigids,
    enum_rigid_indecs,
    exchange_dimension,
    exchange_graph,
    exchange_triangles,
    mutate_rigid,
    quiver_arrows,
    skew_symmetrizer,
)
from .laurent import LaurentPoly
from .cluster_engine import (
    ClusterPattern,
    ClusterRecord,
    Seed,
    c_matrix,
    denominator_vector,
    enumerate_pattern,
    g_vector,
    has_t_denominator,
    initial_seed,
    mutate_g_vector,
    mutate_matrix,
    mutate_seed,
    specialize_coefficients,
)
from .tau_tilt import (
    cartan_via_duality,
    conjugate_by_symmetrizer,
    d_matrix,
    f_dim_vector,
    g_c_d_matrices,
    index,
    positive_c_vectors,
    rank_vector,
)
from .verification import Check, Report, Suite, run_suite
from .workers import SuiteWorker, configured_threads, run_tasks

__all__ = [
    "plugin",
    "fixtures",
    "__version__",
    "ClusterTubeError",
    "TubeError",
    "InvalidLength",
    "InvalidRank",
    "RankMismatch",
    "WingUndefined",
    "NotExchangePair",
    "InternalInvariantBroken",
    "BadDirection",
    "LaurentViolation",
    "Undefined",
    "GradingViolation",
    "NotRigid",
    "InShift",
    "UsageError",
    "SeedCapExceeded",
    "ConfigurationError",
    "WorkerFailure",
    "Indec",
    "TubeObject",
    "normalize",
    "make_object",
    "tube_rank",
    "tau",
    "tau_inv",
    "shift",
    "shift_inv",
    "hom_tube_dim",
    "hom_cluster_dim",
    "ext1_dim",
    "in_wing",
    "NilpotentRep",
    "build_rep",
    "hom_dim_oracle",
    "MaximalRigid",
    "ExchangeData",
    "enum_rigid_indecs",
    "enum_maximal_rigids",
    "compatibility_graph",
    "distinguished_maximal_rigid",
    "exchange_triangles",
    "exchange_dimension",
    "mutate_rigid",
    "b_matrix",
    "skew_symmetrizer",
    "quiver_arrows",
    "check_compatibility",
    "exchange_graph",
    "LaurentPoly",
    "Seed",
    "ClusterRecord",
    "ClusterPattern",
    "initial_seed",
    "mutate_matrix",
    "mutate_seed",
    "enumerate_pattern",
    "denominator_vector",
    "g_vector",
    "mutate_g_vector",
    "c_matrix",
    "specialize_coefficients",
    "has_t_denominator",
    "f_dim_vector",
    "rank_vector",
    "index",
    "g_c_d_matrices",
    "cartan_via_duality",
    "d_matrix",
    "positive_c_vectors",
    "conjugate_by_symmetrizer",
    "Check",
    "Report",
    "Suite",
    "run_suite",
    "SuiteWorker",
    "run_tasks",
    "configured_threads",
]
