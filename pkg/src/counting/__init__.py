"""
Counting

Downset and antichain enumeration and every route to the downset number d(P).
"""

from src.counting.downsets import (
    downsets, upsets, antichains, brute_count, DownsetCounter,
    d_count, d_split, d_split_upper_bound, a_count,
)
from src.counting.formulas import (
    d_antichain_formula, d_product_rule, d_ordinal_rule, d_by_components,
    d_vertical, fibonacci,
)
from src.counting.extremal import (
    max_d_given_minimals, max_d_given_height, minimals_maximizer, height_maximizer,
    within_three_quarters,
)

__all__ = [
    'downsets',
    'upsets',
    'antichains',
    'brute_count',
    'DownsetCounter',
    'd_count',
    'd_split',
    'd_split_upper_bound',
    'a_count',
    'd_antichain_formula',
    'd_product_rule',
    'd_ordinal_rule',
    'd_by_components',
    'd_vertical',
    'fibonacci',
    'max_d_given_minimals',
    'max_d_given_height',
    'minimals_maximizer',
    'height_maximizer',
    'within_three_quarters',
]
