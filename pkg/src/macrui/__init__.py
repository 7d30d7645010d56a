"""Exact symbolic computation with Macdonald-type polynomials.

Everything is computed over the field of rational functions in the two
parameters q and t with integer coefficients; there is no floating point
anywhere.  The main objects:

* Macdonald polynomials constructed as triangular eigenfunctions of a
  q-difference operator, with branching coefficients and tableau formulas;
* their restrictions to a two-alphabet algebra (super polynomials), the
  deformed difference operator acting there, and the fat-hook kernel
  description;
* interpolation (shifted) polynomials defined by vanishing conditions,
  their branching and tableau formulas, evaluation duality, and shifted
  two-alphabet versions;
* Hecke operators and the commuting difference operators they generate.
"""

from .errors import (InvalidPartitionError, MacruiError, NonDivisibleError,
                     NotSymmetricError, ScalarDivisionError,
                     SingularSystemError, SpaceMismatchError,
                     SpecialParameterError)
from .scalar import (P_ONE, P_Q, P_T, P_ZERO, QTPolynomial, QTScalar, S_ONE,
                     S_Q, S_T, S_ZERO, one_minus_q, one_minus_t, q_pow,
                     qt_arith, qt_eval, qt_gcd, qt_monomial, qt_ratio, t_pow)
from .partitions import (arm_leg, as_partition, conjugate,
                         conjugation_sum_identity, contains, dominance_leq,
                         hook_product, in_fat_hook, n_stat,
                         normalization_alignment, partitions_of,
                         partitions_up_to, subpartitions, weight)
from .polyring import MultiPoly, VarSpace, linear_combination, poly_arith
from .symfun import (SymExpansion, deformed_newton_sum,
                     from_monomial_expansion, from_shifted_power_expansion,
                     in_deformed_algebra, is_shifted_symmetric,
                     monomial_symmetric, monomial_to_power_expansion,
                     power_sum, power_sum_product, qt_ratio_automorphism,
                     restrict_p_expansion, restrict_shifted_expansion,
                     shifted_power_product, shifted_power_sum,
                     to_monomial_expansion, to_shifted_power_expansion)
from .operators import (OperatorResult, apply_deformed_mr,
                        apply_deformed_mr_detailed, apply_mr,
                        apply_mr_detailed, cherednik_dunkl, cycle_shift,
                        coefficient_sum_identity, hecke_T, hecke_T_inv,
                        mr_eigenvalue, operator_from_shifted_symmetric)
from .macdonald import (Bitableau, ReverseTableau, bitableaux,
                        branching_coefficients, macdonald_m_expansion,
                        macdonald_p_expansion, macdonald_polynomial,
                        macdonald_tableau_sum, parameter_duality_sign,
                        reverse_tableaux, skew_tableau_sum, super_macdonald,
                        super_tableau_sum)
from .shifted import (VanishingSystem, duality_check, evaluate_at_partition,
                      fat_hook_point, interpolation_by_branching,
                      interpolation_polynomial, interpolation_tableau_sum,
                      shifted_super_macdonald, shifted_super_tableau_sum)
from .verify import SUITES, run_suite

__version__ = "0.1.0"
