"""Exact character degree patterns of symmetric and alternating groups.

Recognizes X_1(S_n) from a degree multiset and replays the degree
inequalities used to rule out other almost simple groups.
"""

from .alt_degrees import alt_class_count, alt_degree_pattern, probe_remark_conjecture
from .errors import (
    DegreeIndexError,
    IntegralityError,
    InvalidLieSpec,
    LimitExceededError,
    PatternFormatError,
    UnknownGroupError,
    WindowError,
)
from .lie_degrees import (
    LieFamilySpec,
    QuadraticSurd,
    cyclotomic_value,
    l2q_guaranteed_degrees,
    steinberg_degree,
    subunipotent_degree,
    verify_sandwich,
)
from .numtheory import (
    bertrand_prime,
    factorial_inverse,
    largest_prime_divisor,
    prime_power_decompose,
    primes_up_to,
)
from .partitions import (
    Partition,
    canonical_self_conjugate,
    conjugate,
    count_self_conjugate,
    enumerate_partitions,
    hook_lengths,
    is_self_conjugate,
)
from .pattern import DegreePattern, read_pattern, write_pattern
from .rasala import minimal_degree, rasala_value, solve_degree_equation
from .recognizer import (
    RecognitionReport,
    alt_double_separation,
    recognize,
    subset_diagnostic,
    wreath_constraint_check,
)
from .sporadic import lookup, replay_elimination
from .sym_degrees import cd, chi_degree, class_count, d_index, degree_pattern, rho, verify_prime_power_classification

__version__ = "0.1.0"
