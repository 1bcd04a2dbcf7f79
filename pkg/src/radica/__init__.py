"""radica: exact and approximate radical solutions of low-degree polynomials.

Solves quadratic, cubic, and quartic equations by radicals over any field
providing square- and cube-root operations.  Two backends are included: an
exact one over dynamically grown radical extension towers of the rationals,
and an approximate one over complex doubles with principal branches.  The
verifier module machine-checks the substitution-to-zero and factorization
identities behind the formulas and cross-checks roots against an
independent numeric oracle.
"""

from .complexfield import ComplexField, approx_eq, ccbrt_principal, csqrt_principal
from .fields import FieldCapabilities, from_integer, omega, small_pow
from .solvers import (
    BiquadraticQuartic,
    DegenerateLeadingTerm,
    DepressedCubic,
    DepressedQuartic,
    MonicCubic,
    MonicQuadratic,
    MonicQuartic,
    RootRecord,
    SolverError,
    StrictHypothesisViolation,
    ZeroLinearTerm,
    cardano_root,
    cubic_roots_depressed_total,
    depress_cubic,
    depress_quartic,
    quartic_roots_depressed_total,
    quartic_split_depressed,
    render_radical,
    resolvent_coeffs,
    solve_cubic,
    solve_cubic_paper_strict,
    solve_quadratic_general,
    solve_quadratic_monic,
    solve_quartic,
    solve_quartic_paper_strict,
)
from .tower import (
    BigRational,
    ReducibleExtensionError,
    Tower,
    TowerElement,
    TowerField,
    TowerMismatchError,
    rat_normalize,
)
from .verifier import (
    NoConvergence,
    VerificationReport,
    durand_kerner,
    expand_monic_from_roots,
    horner_eval,
    match_root_multisets,
    negative_exhibit_two_cbrts,
    omega_twisting_cbrt,
    real_preferring_cbrt,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "BiquadraticQuartic",
    "ComplexField",
    "DegenerateLeadingTerm",
    "DepressedCubic",
    "DepressedQuartic",
    "FieldCapabilities",
    "MonicCubic",
    "MonicQuadratic",
    "MonicQuartic",
    "NoConvergence",
    "ReducibleExtensionError",
    "RootRecord",
    "SolverError",
    "StrictHypothesisViolation",
    "Tower",
    "TowerElement",
    "TowerField",
    "TowerMismatchError",
    "VerificationReport",
    "ZeroLinearTerm",
    "approx_eq",
    "cardano_root",
    "ccbrt_principal",
    "csqrt_principal",
    "cubic_roots_depressed_total",
    "depress_cubic",
    "depress_quartic",
    "durand_kerner",
    "expand_monic_from_roots",
    "from_integer",
    "horner_eval",
    "match_root_multisets",
    "negative_exhibit_two_cbrts",
    "omega",
    "omega_twisting_cbrt",
    "quartic_roots_depressed_total",
    "quartic_split_depressed",
    "rat_normalize",
    "real_preferring_cbrt",
    "render_radical",
    "resolvent_coeffs",
    "small_pow",
    "solve_cubic",
    "solve_cubic_paper_strict",
    "solve_quadratic_general",
    "solve_quadratic_monic",
    "solve_quartic",
    "solve_quartic_paper_strict",
    "verify_solution",
]
