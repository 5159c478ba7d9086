"""
Exponential Functions

e(m, P) in exponential-sum normal form, its oracles, recursions, derived
polynomials, growth bounds and divisibility rules.
"""

from src.expo.expsum import ExpSum, evaluate, es_product, es_shift
from src.expo.exponential import (
    CoeffTable, coeff_table, exp_sum, e_incl_excl, chain_exp_sum, antichain_exp_sum,
    antichain_top_formula, antichain_sum_formula, fence_exp_sum, residual, d_prime,
    d_prime_exhaustive,
)
from src.expo.oracles import (
    isotone_maps, e_oracle_maps, extensions, e_oracle_orders, e_oracle_upsets,
)
from src.expo.recursion import (
    upset_partition_check, e_next, e_levels, split_map, bijection_check,
)
from src.expo.charpoly import (
    CharPoly, char_poly, matches_closed_form, extension_census, polynomial_separation_check,
)
from src.expo.bounds import growth_bounds_check
from src.expo.divisibility import divisibility_check, divisibility_suite
from src.expo.checks import (
    oracle_triangle_check, side_conditions_check, partition_check, levels_check, recursion_check,
    closed_forms_check,
)

__all__ = [
    # Normal form
    'ExpSum',
    'evaluate',
    'es_product',
    'es_shift',
    # Inclusion-exclusion and closed forms
    'CoeffTable',
    'coeff_table',
    'exp_sum',
    'e_incl_excl',
    'chain_exp_sum',
    'antichain_exp_sum',
    'antichain_top_formula',
    'antichain_sum_formula',
    'fence_exp_sum',
    'residual',
    'd_prime',
    'd_prime_exhaustive',
    # Oracles
    'isotone_maps',
    'e_oracle_maps',
    'extensions',
    'e_oracle_orders',
    'e_oracle_upsets',
    # Recursion
    'upset_partition_check',
    'e_next',
    'e_levels',
    'split_map',
    'bijection_check',
    # Characteristic polynomials
    'CharPoly',
    'char_poly',
    'matches_closed_form',
    'extension_census',
    'polynomial_separation_check',
    # Checks
    'growth_bounds_check',
    'divisibility_check',
    'divisibility_suite',
    'oracle_triangle_check',
    'side_conditions_check',
    'partition_check',
    'levels_check',
    'recursion_check',
    'closed_forms_check',
]
