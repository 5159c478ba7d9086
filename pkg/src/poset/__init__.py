"""
Poset Core

Exact finite posets over bitmask up-closures, with construction, restriction,
closures, sums and vertical gluing.
"""

from src.poset.poset import (
    Poset, from_pairs, restrict, remove, relabel, up_closure, down_closure,
    minimal_points, maximal_points, height, levels, linear_extension,
    is_antichain, is_downset, is_upset, interior, covers, components,
)
from src.poset.constructions import (
    antichain, chain, cardinal_sum, ordinal_sum, dual, fence, zigzag, is_discrete, random_poset,
)
from src.poset.vertical import (
    VerticalRelation, vertical_sum, vertical_relations, random_vertical_relation, split_upper,
)

__all__ = [
    # Poset
    'Poset',
    'from_pairs',
    'restrict',
    'remove',
    'relabel',
    'up_closure',
    'down_closure',
    'minimal_points',
    'maximal_points',
    'height',
    'levels',
    'linear_extension',
    'is_antichain',
    'is_downset',
    'is_upset',
    'interior',
    'covers',
    'components',
    # Constructions
    'antichain',
    'chain',
    'cardinal_sum',
    'ordinal_sum',
    'dual',
    'fence',
    'zigzag',
    'is_discrete',
    'random_poset',
    # Vertical sums
    'VerticalRelation',
    'vertical_sum',
    'vertical_relations',
    'random_vertical_relation',
    'split_upper',
]
