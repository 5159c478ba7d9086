"""
Downset Counting Formulas

Independent routes to d(P): the antichain-sum formula, the sum rules, the
component factorization and the vertical-sum formula.
"""

from functools import lru_cache

from src.exceptions import NotAntichain
from src.counting.downsets import DownsetCounter, d_count, downsets
from src.poset.bits import iter_bits, popcount
from src.poset.poset import Poset, components, down_closure, is_antichain, restrict, up_closure
from src.poset.vertical import VerticalRelation


def _antichains_within(P: Poset, S: int):
    def visit(points, position, chosen):
        if position == len(points):
            yield chosen
            return
        yield from visit(points, position + 1, chosen)
        x = points[position]
        if not P.comparable(x) & chosen:
            yield from visit(points, position + 1, chosen | 1 << x)

    yield from visit(list(iter_bits(S)), 0, 0)


def d_antichain_formula(P: Poset, A: int) -> int:
    """Sum over antichains B of P - A of 2^#(A minus (PB ∪ BP)).

    Raises:
        NotAntichain: If A is not an antichain of P
    """
    if not is_antichain(P, A):
        raise NotAntichain(f"Set {A:#x} is not an antichain")
    rest = P.ground & ~A
    total = 0
    for B in _antichains_within(P, rest):
        touched = down_closure(P, B) | up_closure(P, B)
        total += 1 << popcount(A & ~touched)
    return total


def d_product_rule(O: Poset, P: Poset) -> int:
    """d(O + P) = d(O) · d(P)."""
    return d_count(O) * d_count(P)


def d_ordinal_rule(O: Poset, P: Poset) -> int:
    """d(O ⊕ P) = d(O) + d(P) - 1."""
    return d_count(O) + d_count(P) - 1


def d_by_components(P: Poset) -> int:
    """Product of the downset counts of the connected components."""
    result = 1
    for part in components(P):
        result *= d_count(restrict(P, part))
    return result


def d_vertical(V: VerticalRelation) -> int:
    """d(O ⊕_R P) as the sum over downsets D of P of d(O - RD)."""
    counter = DownsetCounter(V.lower)
    ground = V.lower.ground
    return sum(counter.count(ground & ~V.related_to(D)) for D in downsets(V.upper))


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    """f_0 = 1, f_1 = 2, f_{k+2} = f_{k+1} + f_k; the downset count of a k-point zigzag."""
    if k < 0:
        raise ValueError(f"Index must be nonnegative, got {k}")
    a, b = 1, 2
    for _ in range(k):
        a, b = b, a + b
    return a
