"""
Common Utilities

Small helpers shared across the package, with no package imports so any
module can use them.
"""

import logging

logger = logging.getLogger(__name__)


def log_section_header(title: str, width: int = 70) -> None:
    """
    Log a section header between two separator lines at INFO level.

    Example:
        >>> log_section_header("VERIFICATION kmax=5 m_max=6 seed=20240611")
        # ======================================================================
        # VERIFICATION kmax=5 m_max=6 seed=20240611
        # ======================================================================
    """
    separator = "=" * width
    logger.info(separator)
    logger.info(title)
    logger.info(separator)
