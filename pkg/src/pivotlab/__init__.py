"""Pivot-movement probabilities for Gaussian elimination with partial pivoting.

The library samples random matrices over the reals, complexes, and
quaternions, runs partially pivoted elimination under either of two
magnitude rules, and compares empirical swap frequencies against exact
closed forms.
"""

from .ensembles import EnsembleSpec, Family, Matrix, sample, sample_batch
from .exact import (
    SphereRegion,
    f_cdf,
    gue_l1_pivot_prob,
    pivot_prob_hbeta,
    reg_inc_beta,
    spherical_area_quadrature,
)
from .gepp import (
    Factorization,
    PivotRule,
    cycle_count,
    factorize,
    reconstruction_residual,
    swap_count,
)
from .montecarlo import (
    CensusResult,
    EstimateResult,
    estimate_p1,
    estimate_pivot_prob,
    permutation_census,
    table1_sweep,
)
from .rng import RandomStream
from .scalars import Scalar, ScalarKind

__all__ = [
    "EnsembleSpec",
    "Family",
    "Matrix",
    "sample",
    "sample_batch",
    "SphereRegion",
    "f_cdf",
    "gue_l1_pivot_prob",
    "pivot_prob_hbeta",
    "reg_inc_beta",
    "spherical_area_quadrature",
    "Factorization",
    "PivotRule",
    "cycle_count",
    "factorize",
    "reconstruction_residual",
    "swap_count",
    "CensusResult",
    "EstimateResult",
    "estimate_p1",
    "estimate_pivot_prob",
    "permutation_census",
    "table1_sweep",
    "RandomStream",
    "Scalar",
    "ScalarKind",
]

__version__ = "0.1.0"
