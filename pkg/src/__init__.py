"""posetx: downset counts, exponential functions and the unlabeled poset catalog"""

# Expose key components at package level for convenience

# Exceptions (centralized)
from src.exceptions import (
    PosetError, CycleError, ClosureError, NotAntichain, NotAnExtension,
    ParseError, IncompleteCatalog, BudgetExceeded, VerificationError,
)

# Poset core
from src.poset import Poset, from_pairs, antichain, chain, cardinal_sum, ordinal_sum, fence, zigzag
from src.poset import VerticalRelation, vertical_sum

# Counting
from src.counting import d_count, d_split, d_antichain_formula, downsets, brute_count

# Exponential function
from src.expo import ExpSum, exp_sum, e_incl_excl, evaluate, e_oracle_maps, e_oracle_orders

# Catalog
from src.catalog import Catalog, CatalogEntry, enumerate_catalog, canonical_form, matrices

# File formats
from src.io import parse_poset, serialize_poset, parse_catalog, serialize_catalog

# Reports and settings
from src.report import CheckReport, CheckResult
from src.settings import EngineSettings, get_settings, set_settings, update_settings

# CLI
from src.cli.config import parse_arguments

# Utils
from src.utils import log_section_header

__version__ = "1.0.0"
__all__ = [
    # Exceptions
    "PosetError",
    "CycleError",
    "ClosureError",
    "NotAntichain",
    "NotAnExtension",
    "ParseError",
    "IncompleteCatalog",
    "BudgetExceeded",
    "VerificationError",
    # Poset core
    "Poset",
    "from_pairs",
    "antichain",
    "chain",
    "cardinal_sum",
    "ordinal_sum",
    "fence",
    "zigzag",
    "VerticalRelation",
    "vertical_sum",
    # Counting
    "d_count",
    "d_split",
    "d_antichain_formula",
    "downsets",
    "brute_count",
    # Exponential function
    "ExpSum",
    "exp_sum",
    "e_incl_excl",
    "evaluate",
    "e_oracle_maps",
    "e_oracle_orders",
    # Catalog
    "Catalog",
    "CatalogEntry",
    "enumerate_catalog",
    "canonical_form",
    "matrices",
    # File formats
    "parse_poset",
    "serialize_poset",
    "parse_catalog",
    "serialize_catalog",
    # Reports and settings
    "CheckReport",
    "CheckResult",
    "EngineSettings",
    "get_settings",
    "set_settings",
    "update_settings",
    # CLI
    "parse_arguments",
    # Utils
    "log_section_header",
]
