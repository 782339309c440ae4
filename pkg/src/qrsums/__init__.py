"""Exact computation and verification of quadratic residue sum identities.

For an odd prime p, the nonzero elements of Z_p split into quadratic
residues Q and nonresidues N; this package computes their element sums
over the lower and upper halves of [1, p-1], verifies the exact integer
identities those sums satisfy in each congruence class of p mod 8, and
cross-checks the residue counts against class numbers h(-p) obtained by
independent enumeration of reduced binary quadratic forms.

The per-prime hot loops run in a compiled Cython kernel when available
and fall back to NumPy otherwise; ``qrsums.BACKEND`` names the active one.
"""

__version__ = "0.1.0"

from ._backend import BACKEND, available_backends
from .classnum import QuadForm, class_cross_check, class_number, reduced_forms
from .modular import (
    MILLER_RABIN_WITNESSES,
    PRIME_LIMIT,
    OddPrime,
    SymbolValue,
    is_prime,
    jacobi,
    legendre_euler,
    mul_mod,
    pow_mod,
    primes_in_range,
)
from .residues import (
    HALF_CONVENTION,
    DoublingImage,
    ResidueClass,
    ResiduePartition,
    classify,
    double_mod,
    doubling_image_class,
    negation_check,
    partition_by_squares,
    partition_by_symbol,
    residue_table,
)
from .theorems import (
    RANGE_IDENTITIES,
    Identity,
    IdentityReport,
    Mod8Class,
    RangeSummary,
    applicable_identities,
    check_eq1,
    check_lemma,
    check_mod4_1,
    check_theorem,
    run_checks,
    verify_range,
)

__all__ = [
    "BACKEND",
    "HALF_CONVENTION",
    "MILLER_RABIN_WITNESSES",
    "PRIME_LIMIT",
    "RANGE_IDENTITIES",
    "DoublingImage",
    "Identity",
    "IdentityReport",
    "Mod8Class",
    "OddPrime",
    "QuadForm",
    "RangeSummary",
    "ResidueClass",
    "ResiduePartition",
    "SymbolValue",
    "applicable_identities",
    "available_backends",
    "check_eq1",
    "check_lemma",
    "check_mod4_1",
    "check_theorem",
    "class_cross_check",
    "class_number",
    "classify",
    "double_mod",
    "doubling_image_class",
    "is_prime",
    "jacobi",
    "legendre_euler",
    "mul_mod",
    "negation_check",
    "partition_by_squares",
    "partition_by_symbol",
    "pow_mod",
    "primes_in_range",
    "reduced_forms",
    "residue_table",
    "run_checks",
    "verify_range",
]
