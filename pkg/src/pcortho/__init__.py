"""Orthogonal decomposition toolkit for pairwise comparison matrices."""

from .bases import (
    BasisSet,
    IncidenceMatrix,
    complement_vectors,
    hn_cycle_basis,
    hn_membership,
    incidence_matrix,
    ln_basis,
    ln_w_basis,
)
from .errors import (
    DegenerateElement,
    LengthMismatch,
    MatrixFormatError,
    NonPositiveWeight,
    NotConsistent,
    NotPositiveDefinite,
    NotReciprocal,
    NotSymmetric,
    OrderTooSmall,
    PcorthoError,
    ShapeMismatch,
    SingularGram,
    ZeroMatrix,
)
from .inner import (
    FrobeniusInner,
    VectorMetricInner,
    WeightedFrobeniusInner,
    check_positive_definite,
    f_pair_w,
    frobenius,
    gram_schmidt,
    induced_vector_ip,
    metric_matrix,
    w_frobenius,
)
from .model import (
    HalfVector,
    PCMatrix,
    RankingVector,
    SkewMatrix,
    WeightMatrix,
    consistent_from_weights,
    f_n,
    half_to_skew,
    is_additively_consistent,
    is_consistent,
    mu,
    phi,
    skew_to_half,
    symmetrize,
)
from .projection import (
    CorollaryReport,
    Decomposition,
    corollary_checks,
    decompose,
    factor_pc,
    inconsistency_ratio,
    oracle_project,
    project_ln_closed,
    project_ln_w,
    ranking,
)

__version__ = "0.1.0"
