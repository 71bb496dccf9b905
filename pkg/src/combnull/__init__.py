"""Exact computer algebra over Z_m with a combinatorial core.

Sparse multivariate polynomials with synthetic division by linear
factors, a recursive witness finder for polynomials that cannot vanish
on a large enough grid, and verified restricted-sumset bounds over Z_p.
"""

from .additive import (
    EXHAUSTIVE_PRIME_LIMIT,
    EHReport,
    ProofPolynomials,
    SumsetInstance,
    SweepEntry,
    SweepReport,
    build_proof_polynomials,
    cn_witness_for_eh,
    eh_bound,
    eh_sweep,
    q_top_coefficient,
    restricted_sumset,
    verify_eh,
    verify_full_sumset,
)
from .errors import (
    CombnullError,
    HypothesesViolated,
    InternalContradiction,
    InvalidModulus,
    ParseError,
    PreconditionViolated,
    RingMismatch,
    ShapeMismatch,
)
from .nullstellensatz import (
    CNInstance,
    Grid,
    HypothesisReport,
    Witness,
    brute_force_witness,
    check_hypotheses,
    find_witness,
    vanishes_on_grid,
)
from .poly import (
    DivisionResult,
    Polynomial,
    discover_variables,
    format_polynomial,
    parse_polynomial,
)
from .ring import Element, Ring, binom_mod, is_prime

__version__ = "0.1.0"

__all__ = [
    "EXHAUSTIVE_PRIME_LIMIT",
    "CNInstance",
    "CombnullError",
    "DivisionResult",
    "EHReport",
    "Element",
    "Grid",
    "HypothesesViolated",
    "HypothesisReport",
    "InternalContradiction",
    "InvalidModulus",
    "ParseError",
    "Polynomial",
    "PreconditionViolated",
    "ProofPolynomials",
    "Ring",
    "RingMismatch",
    "ShapeMismatch",
    "SumsetInstance",
    "SweepEntry",
    "SweepReport",
    "Witness",
    "binom_mod",
    "brute_force_witness",
    "build_proof_polynomials",
    "check_hypotheses",
    "cn_witness_for_eh",
    "discover_variables",
    "eh_bound",
    "eh_sweep",
    "find_witness",
    "format_polynomial",
    "is_prime",
    "parse_polynomial",
    "q_top_coefficient",
    "restricted_sumset",
    "vanishes_on_grid",
    "verify_eh",
    "verify_full_sumset",
]
