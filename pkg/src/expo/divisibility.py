"""
Divisibility of e(m, P) - 1

For a prime p and m = n(p - 1) + 1, Fermat's little theorem applied to every
base of the exponential sum gives p | e(m, P) - 1. Products of the primes
that apply simultaneously give the composite rules.
"""

import logging

import sympy

from src.expo.exponential import exp_sum
from src.poset.poset import Poset
from src.report import CheckReport

logger = logging.getLogger(__name__)

# (divisor, period): the divisor applies when m ≡ 1 mod period
COMPOSITE_RULES = (
    (2, 1),
    (6, 2),
    (30, 4),
    (42, 6),
    (210, 12),
)


def divisibility_check(P: Poset, m: int, p: int) -> bool:
    """Whether p divides e(m, P) - 1, for prime p and m ≡ 1 (mod p - 1).

    Raises:
        ValueError: If p is not prime, or m is not of the form n(p - 1) + 1
    """
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1 or (m - 1) % (p - 1):
        raise ValueError(f"m={m} is not congruent to 1 mod {p - 1}")
    return (exp_sum(P).evaluate(m) - 1) % p == 0


def divisibility_suite(P: Poset, m_max: int) -> CheckReport:
    """Every prime and composite divisibility rule for m = 1..m_max."""
    report = CheckReport(f"divisibility k={P.size}")
    expo = exp_sum(P)
    for m in range(1, m_max + 1):
        value = expo.evaluate(m) - 1
        primes = [p for p in sympy.primerange(2, m + 2) if (m - 1) % (p - 1) == 0]
        report.add(
            "expo.divisibility.prime",
            all(value % p == 0 for p in primes),
            f"m={m} primes={primes}",
        )
        for divisor, period in COMPOSITE_RULES:
            if (m - 1) % period == 0:
                report.add("expo.divisibility.composite", value % divisor == 0, f"m={m} divisor={divisor}")
    return report
