"""
Catalog

Unlabeled posets up to isomorphism with their invariants, the labeled
streams, aggregated exponential sums, representing matrices and the
comparison with the published census.
"""

from src.catalog.canonical import (
    CanonicalForm, canonical_form, canonical_poset, is_isomorphic, poset_from_code,
)
from src.catalog.enumerate import (
    MAX_CATALOG_K, CatalogEntry, Catalog, make_entry, enumerate_catalog, class_counts,
    upset_classes,
)
from src.catalog.labeled import (
    MAX_LABELED_K, labeled_enumerate, labeled_count, d_histogram, p_routes, p_count,
)
from src.catalog.aggregate import aggregate_exp_sum, aggregate_e_k, aggregate_e_kn, aggregate_e_kh
from src.catalog.matrices import CatalogMatrices, matrices, matrix_identities_check
from src.catalog.checks import (
    as_extension, mass_exceptions, stanley_count_check, prime_divisibility_check,
    extremal_scan, leading_terms_check, p_identities_check, antitonicity_check,
    entry_invariants_check, exponential_sweep,
)

__all__ = [
    # Canonical forms
    'CanonicalForm',
    'canonical_form',
    'canonical_poset',
    'is_isomorphic',
    'poset_from_code',
    # Enumeration
    'MAX_CATALOG_K',
    'CatalogEntry',
    'Catalog',
    'make_entry',
    'enumerate_catalog',
    'class_counts',
    'upset_classes',
    # Labeled posets
    'MAX_LABELED_K',
    'labeled_enumerate',
    'labeled_count',
    'd_histogram',
    'p_routes',
    'p_count',
    # Aggregates
    'aggregate_exp_sum',
    'aggregate_e_k',
    'aggregate_e_kn',
    'aggregate_e_kh',
    # Matrices
    'CatalogMatrices',
    'matrices',
    'matrix_identities_check',
    # Sweeps
    'as_extension',
    'mass_exceptions',
    'stanley_count_check',
    'prime_divisibility_check',
    'extremal_scan',
    'leading_terms_check',
    'p_identities_check',
    'antitonicity_check',
    'entry_invariants_check',
    'exponential_sweep',
]
