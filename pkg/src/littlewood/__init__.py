"""Exact combinatorics of L4 norms of +-1 coefficient polynomials.

The package enumerates, samples, and evaluates symmetry classes of
Littlewood polynomials (all, skew, reciprocal, negative-reciprocal),
computing aperiodic autocorrelations, the fourth power of the L4 norm,
and merit factors exactly, and verifying the closed-form mean/variance
formulas for each class by exhaustive enumeration and Monte Carlo.
"""

from .closedform import (
    check_floor_split_identity,
    check_identity,
    formula_limit_constants,
    formula_table_csv,
    mean_formula,
    mean_sum_sq_formula,
    variance_formula,
)
from .extremal import ExtremalResult, canonical_form, min_search, orbit
from .moments import (
    MomentReport,
    PropOneReport,
    ScanRow,
    convergence_scan,
    exact_moments,
    formula_moments,
    monte_carlo_moments,
    prop1_quantities,
)
from .norms import (
    AutocorrelationProfile,
    L4Report,
    autocorrelation,
    autocorrelation_reference,
    l2_by_quadrature,
    l4_by_quadrature,
    l4_report,
    sequence_record,
)
from .seqcore import (
    BinarySequence,
    ClassSpec,
    EnumerationRange,
    GuardrailError,
    Kind,
    complete_from_free,
    enumerate_range,
    is_member,
    iter_class,
    make_rng,
    sample_uniform,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrelationProfile",
    "BinarySequence",
    "ClassSpec",
    "EnumerationRange",
    "ExtremalResult",
    "GuardrailError",
    "Kind",
    "L4Report",
    "MomentReport",
    "PropOneReport",
    "ScanRow",
    "autocorrelation",
    "autocorrelation_reference",
    "canonical_form",
    "check_floor_split_identity",
    "check_identity",
    "complete_from_free",
    "convergence_scan",
    "enumerate_range",
    "exact_moments",
    "formula_limit_constants",
    "formula_moments",
    "formula_table_csv",
    "is_member",
    "iter_class",
    "l2_by_quadrature",
    "l4_by_quadrature",
    "l4_report",
    "make_rng",
    "mean_formula",
    "mean_sum_sq_formula",
    "min_search",
    "monte_carlo_moments",
    "orbit",
    "prop1_quantities",
    "sample_uniform",
    "sequence_record",
    "variance_formula",
    "__version__",
]
