"""Exact Kostka matrices, Frobenius compound characters, and irreducible
character tables for the symmetric groups, computed by two independent
methods with full integer arithmetic throughout."""

from .errors import InputError, VerificationError
from .frobenius import (
    enumerate_distributions,
    frobenius_character,
    frobenius_table,
    subgroup_class_count,
)
from .monomial import (
    characters_from_monomials,
    inverse_kostka_from_monomials,
    kostka_from_monomials,
    q_determinant,
)
from .partitions import (
    SymmetricGroupContext,
    build_context,
    class_size,
    compare,
    format_partition,
    from_cycle_type,
    parse_partition,
    partitions_of,
    to_cycle_type,
)
from .symfunc import (
    RawPolynomial,
    SymmetricPolynomial,
    alternant,
    complete_homogeneous,
    expand_to_raw,
    monomial_count,
    monomial_symmetric,
    raw_mul,
    sym_add,
    sym_mul,
    sym_scale,
    vandermonde,
)
from .tables import IntegerTable
from .triangular import TriangularSolveResult, bracket, triangular_solve
from .verification import (
    VerificationReport,
    run_checks,
    verify_compound_consistency,
    verify_cross_method,
    verify_frobenius_identity,
    verify_orthonormality,
)

__version__ = "0.1.0"
