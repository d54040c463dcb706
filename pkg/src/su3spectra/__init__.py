"""SU(3) irreducible representations, sparse operator assembly, and
nearest-neighbour spectral statistics along rays of representations."""

__version__ = "0.1.0"

from .algebra import (
    GENERATORS,
    CRational,
    GeneratorExpr,
    dagger,
    defining_matrix,
    gen,
    is_abstract_hermitian,
    lipkin_hamiltonian,
    rescale,
    scaling_sequence,
)
from .errors import ConfigError, NumericalError
from .exprparse import parse_expr
from .rep import (
    PolyVector,
    SparseMatrix,
    apply_expr,
    apply_generator,
    basis,
    canonicalize,
    distinct_weight_count,
    matrix_of,
    weight_of,
)
from .rootsys import (
    dim_lower_bound,
    is_interior,
    orbit_volume,
    q_of,
    ratio_bound,
    ray_weight,
    weight_count_bound,
    weyl_dim,
)
from .stats import (
    Histogram,
    SpacingMeasure,
    Spectrum,
    dirac_measure,
    distinct_count,
    eigenvalues,
    histogram,
    ks_distance,
    nn_distribution,
)
from .studies import (
    LipkinResult,
    RayRow,
    StudyConfig,
    commutativity_study,
    lipkin_run,
    norm_growth_study,
    ray_study,
    rescaling_study,
)

__all__ = [
    "__version__",
    "GENERATORS",
    "CRational",
    "GeneratorExpr",
    "dagger",
    "defining_matrix",
    "gen",
    "is_abstract_hermitian",
    "lipkin_hamiltonian",
    "rescale",
    "scaling_sequence",
    "ConfigError",
    "NumericalError",
    "parse_expr",
    "PolyVector",
    "SparseMatrix",
    "apply_expr",
    "apply_generator",
    "basis",
    "canonicalize",
    "distinct_weight_count",
    "matrix_of",
    "weight_of",
    "dim_lower_bound",
    "is_interior",
    "orbit_volume",
    "q_of",
    "ratio_bound",
    "ray_weight",
    "weight_count_bound",
    "weyl_dim",
    "Histogram",
    "SpacingMeasure",
    "Spectrum",
    "dirac_measure",
    "distinct_count",
    "eigenvalues",
    "histogram",
    "ks_distance",
    "nn_distribution",
    "LipkinResult",
    "RayRow",
    "StudyConfig",
    "commutativity_study",
    "lipkin_run",
    "norm_growth_study",
    "ray_study",
    "rescaling_study",
]
