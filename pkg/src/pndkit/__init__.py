"""Exact and certified arithmetic for primitive non-deficient numbers.

Highlights: deterministic factorization and segmented sieving
(numkernel, sieve), exact divisor-function invariants (divfun),
three-valued certified real comparison (realcert), spoof perfect
factorizations (spoof), certified bound checks and analytic lemma
verification (bounds), and budgeted witness searches (search).
"""

from .numkernel import (
    Factorization,
    FactorizationError,
    IncompleteFactorization,
    factorize,
    is_prime,
    primes_in,
)
from .realcert import (
    CheckResult,
    Interval,
    RealExpr,
    Verdict,
    compare_certified,
    eval_interval,
)
from .divfun import (
    Classification,
    abundancy,
    abundancy_limit,
    arithmetic_derivative,
    classify,
    is_nondeficient,
    is_primitive_nondeficient,
    odd_part,
    prime_reciprocal_sum,
    radical,
    sigma,
    surplus,
)
from .sieve import enumerate_primitive_nondeficient
from .spoof import SpoofFactorization, is_spoof_perfect, parse_spoof, sigma_tilde
from .bounds import (
    BoundCheckRecord,
    CandidateReport,
    opn_candidate_report,
    run_lemma_suite,
    run_pnd_bound_suite,
    run_shape_suite,
)
from .search import (
    HBoundResult,
    H_partial,
    PartialFactorization,
    cyclotomic_value,
    search_prop3_witness,
    search_question1,
    search_question2,
    search_question3,
    sigma_power_anchor,
)

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "FactorizationError",
    "IncompleteFactorization",
    "factorize",
    "is_prime",
    "primes_in",
    "CheckResult",
    "Interval",
    "RealExpr",
    "Verdict",
    "compare_certified",
    "eval_interval",
    "Classification",
    "abundancy",
    "abundancy_limit",
    "arithmetic_derivative",
    "classify",
    "is_nondeficient",
    "is_primitive_nondeficient",
    "odd_part",
    "prime_reciprocal_sum",
    "radical",
    "sigma",
    "surplus",
    "enumerate_primitive_nondeficient",
    "SpoofFactorization",
    "is_spoof_perfect",
    "parse_spoof",
    "sigma_tilde",
    "BoundCheckRecord",
    "CandidateReport",
    "opn_candidate_report",
    "run_lemma_suite",
    "run_pnd_bound_suite",
    "run_shape_suite",
    "HBoundResult",
    "H_partial",
    "PartialFactorization",
    "cyclotomic_value",
    "search_prop3_witness",
    "search_question1",
    "search_question2",
    "search_question3",
    "sigma_power_anchor",
    "__version__",
]
