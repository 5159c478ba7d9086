"""
Characteristic Polynomials of Extensions

For Q in E(M, P) the polynomial p_Q(z) = Σ_{D ∈ D(P)} z^#(M minus QD) records
how many minimal points each downset of P leaves uncovered. p_Q(1) = d(P)
and p_Q(2) = d(Q).
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import sympy

from src.counting.downsets import d_count, downsets
from src.exceptions import NotAnExtension, VerificationError
from src.expo.oracles import extensions
from src.poset.bits import bit, iter_bits, popcount
from src.poset.poset import Poset, down_closure, minimal_points
from src.report import CheckReport

logger = logging.getLogger(__name__)

Z = sympy.Symbol('z')


@dataclass(frozen=True)
class CharPoly:
    """Coefficients p_0 .. p_m, lowest degree first."""
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, z: int) -> int:
        return sum(c * z ** i for i, c in enumerate(self.coeffs))

    def to_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)), Z, domain='ZZ')

    def __str__(self) -> str:
        return str(self.to_poly().as_expr())


def _validate_extension(P: Poset, Q: Poset, m: int, embedding: Sequence[int]) -> int:
    k = P.size
    if Q.size != m + k or len(embedding) != k:
        raise NotAnExtension(f"Expected {m} + {k} points and an embedding of length {k}")
    if len(set(embedding)) != k or any(not 0 <= y < Q.size for y in embedding):
        raise NotAnExtension("Embedding is not an injective map into Q")
    for x in range(k):
        for y in range(k):
            if Q.leq(embedding[x], embedding[y]) != P.leq(x, y):
                raise NotAnExtension(f"Q does not induce P on the embedded points {x}, {y}")
    M = Q.ground & ~sum(bit(y) for y in embedding)
    if minimal_points(Q) != M:
        raise NotAnExtension("Minimal points of Q are not exactly the added points")
    return M


def char_poly(P: Poset, Q: Poset, m: int, embedding: Sequence[int]) -> CharPoly:
    """p_Q for Q in E(M, P) under the embedding of P's points into Q.

    Raises:
        NotAnExtension: If Q is not in E(M, P) under the embedding
        VerificationError: If p_Q(1), p_Q(2) or a low-degree closed form disagree
    """
    M = _validate_extension(P, Q, m, embedding)
    coeffs = [0] * (m + 1)
    for D in downsets(P):
        image = sum(bit(embedding[x]) for x in iter_bits(D))
        coeffs[popcount(M & ~down_closure(Q, image))] += 1
    poly = CharPoly(tuple(coeffs))

    d_p, d_q = d_count(P), d_count(Q)
    if poly.evaluate(1) != d_p or poly.evaluate(2) != d_q or coeffs[m] != 1:
        raise VerificationError(f"Characteristic polynomial {poly} disagrees with d(P)={d_p}, d(Q)={d_q}")
    if m <= 3 and not matches_closed_form(poly, d_p, d_q):
        raise VerificationError(f"Characteristic polynomial {poly} disagrees with its closed form")
    return poly


def matches_closed_form(poly: CharPoly, d_p: int, d_q: int) -> bool:
    """Low-degree forms determined by d(P), d(Q) and, for degree 3, p_0."""
    c = poly.coeffs
    if poly.degree == 0:
        return c == (1,) and d_p == d_q == 1
    if poly.degree == 1:
        return c == (d_p - 1, 1)
    if poly.degree == 2:
        return c == (2 * d_p + 2 - d_q, d_q - d_p - 3, 1)
    if poly.degree == 3:
        p0 = c[0]
        return (
            c[3] == 1
            and 2 * c[2] == d_q - 2 * d_p + p0 - 6
            and c[1] == d_p - 1 - p0 - c[2]
        )
    return True


def extension_census(m: int, P: Poset):
    """(Q, p_Q, d(Q)) for every Q in E(M, P)."""
    for Q, embedding in extensions(m, P):
        poly = char_poly(P, Q, m, embedding)
        yield Q, poly, poly.evaluate(2)


def polynomial_separation_check(m: int, P: Poset) -> CheckReport:
    """p_Q = p_Q' exactly when d(Q) = d(Q') (and p_0 agrees when m = 3)."""
    report = CheckReport(f"polynomial separation m={m}")
    pairs = set()
    for _, poly, d_q in extension_census(m, P):
        key = (d_q, poly.coeffs[0]) if m == 3 else (d_q,)
        pairs.add((poly.coeffs, key))
    polys = {poly for poly, _ in pairs}
    keys = {key for _, key in pairs}
    report.add(
        "expo.charpoly.separation",
        len(polys) == len(keys) == len(pairs),
        f"{len(polys)} polynomials, {len(keys)} invariant keys over k={P.size}",
    )
    return report
