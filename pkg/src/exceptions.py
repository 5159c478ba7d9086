"""
posetx - Exceptions

Centralized exception hierarchy for all poset operations.
"""

from typing import Optional


class PosetError(Exception):
    """Base exception for all posetx operations."""
    pass


class CycleError(PosetError):
    """Exception for relation generators that do not define a partial order.

    Raised when:
    - The transitive closure relates two distinct points in both directions
    - A set of up-closures violates antisymmetry
    """
    pass


class ClosureError(PosetError):
    """Exception for cross relations of a vertical sum.

    Raised when:
    - A row of the relation is not an upset of the upper poset
    - A point of the lower poset relates to less than a point above it
    - A pair refers to a point outside either ground set
    """
    pass


class NotAntichain(PosetError):
    """Exception for subsets that were required to be antichains.

    Raised when:
    - Two points of the supplied subset are comparable
    """
    pass


class NotAnExtension(PosetError):
    """Exception for posets that do not extend P with the given minimal points.

    Raised when:
    - The embedding is not injective or has the wrong length
    - Q restricted to the embedded points differs from P
    - The minimal points of Q are not exactly the points outside the embedding
    """
    pass


class ParseError(PosetError):
    """Exception for malformed poset or catalog text.

    Raised when:
    - The header line is missing or malformed
    - A relation line has the wrong arity or an out-of-range index
    - A catalog row has the wrong number of columns
    """

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class IncompleteCatalog(PosetError):
    """Exception for catalog lookups that miss a class.

    Raised when:
    - An upset of a catalog poset has a class beyond the catalog's point bound
    - An aggregate asks for a point count the catalog does not contain
    """
    pass


class BudgetExceeded(PosetError):
    """Exception for exhaustive searches that would exceed the configured cap.

    Raised when:
    - An oracle enumeration has more candidates than the budget allows
    - A catalog or labeled enumeration is requested beyond its point bound
    """
    pass


class VerificationError(PosetError):
    """Exception for internal identities that fail on concrete data.

    Raised when:
    - A characteristic polynomial disagrees with d(P) or d(Q)
    - A closed form disagrees with the computed coefficients
    """
    pass
