"""Exact symmetric-function computation and identity verification.

Everything is computed over arbitrary-precision rationals or univariate
polynomials with rational coefficients; every equality check in the library
is exact.  The main surfaces:

- exact_ring: the coefficient domain (rationals, UniPoly, ring ops)
- partitions: integer partitions in reverse-lexicographic order
- symfun: e/h/p/m by definitional enumeration and by recurrence, plus
  Newton-Girard and power-sum convolution verification
- series: truncated E(t), H(t), P(t) and their product/quotient identities
- twovar: two-variable-set pair coefficients and the generalized
  Newton-Girard identities
- families: specialized variable sets (binomials, q-binomials, Whitney and
  Jacobi-Stirling nodes, truncated zeta and prime-zeta nodes) with
  closed-form cross-checks
- cli: the symgirard command (bases, verify, table, series)
"""

from .exact_ring import (
    IndeterminateMismatch,
    InexactDivision,
    Rat,
    RingElem,
    UniPoly,
    poly_eval,
    ring_add,
    ring_equal,
    ring_mul,
    ring_neg,
    ring_sub,
)
from .families import (
    DomainError,
    FamilySpec,
    InvalidParam,
    bernoulli_polynomials,
    build_family,
    jacobi_stirling1,
    jacobi_stirling2,
    prime_sieve,
    q_binomial,
    q_pochhammer,
    stirling1_signed,
    stirling2,
    verify_arith_prog_power_sum,
    verify_jacobi_stirling_row,
    verify_prime_row,
    verify_q_row,
    verify_whitney_stirling_crosscheck,
    verify_zeta_row,
)
from .partitions import Partition, enumerate_partitions, iter_partitions, multiplicities
from .report import VerifyReport, all_equal
from .series import (
    NonInvertibleConstantTerm,
    OrderMismatch,
    TruncatedSeries,
    apply_t_ddt,
    build_E,
    build_H,
    build_P,
    log_derivative,
    series_inverse,
    series_mul,
)
from .symfun import (
    BasisTable,
    basis_table,
    complete,
    elementary,
    monomial,
    power_sum,
    power_sum_convolutions,
    variable_set,
    verify_newton_e,
    verify_newton_h,
    verify_power_sum_convolution,
)
from .twovar import (
    PairCoefficient,
    pair_coefficient,
    pair_coefficient_via_product,
    specialize_to_classical,
    verify_generalized_newton,
    verify_pair_product,
    verify_pair_symmetry,
)

__version__ = "0.1.0"

__all__ = [
    "BasisTable",
    "DomainError",
    "FamilySpec",
    "IndeterminateMismatch",
    "InexactDivision",
    "InvalidParam",
    "NonInvertibleConstantTerm",
    "OrderMismatch",
    "PairCoefficient",
    "Partition",
    "Rat",
    "RingElem",
    "TruncatedSeries",
    "UniPoly",
    "VerifyReport",
    "all_equal",
    "apply_t_ddt",
    "basis_table",
    "bernoulli_polynomials",
    "build_E",
    "build_H",
    "build_P",
    "build_family",
    "complete",
    "elementary",
    "enumerate_partitions",
    "iter_partitions",
    "jacobi_stirling1",
    "jacobi_stirling2",
    "log_derivative",
    "monomial",
    "multiplicities",
    "pair_coefficient",
    "pair_coefficient_via_product",
    "poly_eval",
    "power_sum",
    "power_sum_convolutions",
    "prime_sieve",
    "q_binomial",
    "q_pochhammer",
    "ring_add",
    "ring_equal",
    "ring_mul",
    "ring_neg",
    "ring_sub",
    "series_inverse",
    "series_mul",
    "specialize_to_classical",
    "stirling1_signed",
    "stirling2",
    "variable_set",
    "verify_arith_prog_power_sum",
    "verify_generalized_newton",
    "verify_jacobi_stirling_row",
    "verify_newton_e",
    "verify_newton_h",
    "verify_pair_product",
    "verify_pair_symmetry",
    "verify_power_sum_convolution",
    "verify_prime_row",
    "verify_q_row",
    "verify_whitney_stirling_crosscheck",
    "verify_zeta_row",
]
