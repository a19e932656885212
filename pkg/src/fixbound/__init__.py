"""Exact lower bounds on fixed points of non-Hamiltonian symplectic circle actions.

The bound B(n) is the optimum of a small integer program: minimize the total
fixed-point count subject to one homogeneous linear constraint that comes
from the localization identity for the integral of c1 * c_{n-1}.
"""

from .model import (
    FullProfile,
    InvalidDimensionError,
    Parity,
    ProblemInstance,
    ReducedProfile,
    build_instance,
    constraint_value,
    expand_profile,
    g_integrand,
    localization_sum,
    objective_value,
)
from .solver import (
    BoundCertificate,
    Generator,
    GeneratorKind,
    InternalConsistencyError,
    OracleBudgetExceeded,
    enumerate_generators,
    minimize,
    oracle_minimize,
    verify_certificate,
)
from .analysis import (
    Bound1Case,
    Chern8Result,
    ClassificationReport,
    ConjectureReport,
    Family,
    check_support_partition,
    chern8_invariant,
    classify,
    conjecture_report,
    min_count_given_support,
    support_groups,
)

__all__ = [
    "Bound1Case",
    "BoundCertificate",
    "Chern8Result",
    "ClassificationReport",
    "ConjectureReport",
    "Family",
    "FullProfile",
    "Generator",
    "GeneratorKind",
    "InternalConsistencyError",
    "InvalidDimensionError",
    "OracleBudgetExceeded",
    "Parity",
    "ProblemInstance",
    "ReducedProfile",
    "build_instance",
    "check_support_partition",
    "chern8_invariant",
    "classify",
    "conjecture_report",
    "constraint_value",
    "enumerate_generators",
    "expand_profile",
    "g_integrand",
    "localization_sum",
    "min_count_given_support",
    "minimize",
    "objective_value",
    "oracle_minimize",
    "support_groups",
    "verify_certificate",
]
