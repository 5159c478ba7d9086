"""
Exponential Sums

ExpSum is the normal form Σ_j c_j · j^m: positive integer bases in strictly
decreasing order with nonzero integer coefficients. The text form lists
terms as signed ``c*j`` tokens, e.g. ``+1*8 -2*6 +1*5``.
"""

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from src.exceptions import ParseError

_TERM = re.compile(r'^([+-]\d+)\*(\d+)$')


@dataclass(frozen=True)
class ExpSum:
    """Exponential sum in normal form."""
    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        terms = tuple((int(base), int(coeff)) for base, coeff in self.terms)
        previous = None
        for base, coeff in terms:
            if base < 1:
                raise ValueError(f"Bases must be positive, got {base}")
            if coeff == 0:
                raise ValueError(f"Zero coefficient at base {base}")
            if previous is not None and base >= previous:
                raise ValueError("Bases must be strictly decreasing")
            previous = base
        object.__setattr__(self, 'terms', terms)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "ExpSum":
        """Normalize (base, coeff) pairs: merge equal bases, drop zeros, sort."""
        merged: Dict[int, int] = defaultdict(int)
        for base, coeff in pairs:
            merged[base] += coeff
        return cls(tuple(
            (base, coeff) for base, coeff in sorted(merged.items(), reverse=True) if coeff
        ))

    @classmethod
    def power(cls, base: int, coeff: int = 1) -> "ExpSum":
        return cls.from_pairs([(base, coeff)])

    @classmethod
    def parse(cls, text: str) -> "ExpSum":
        text = text.strip()
        if text == "0":
            return cls()
        pairs = []
        for token in text.split():
            match = _TERM.match(token)
            if not match:
                raise ParseError(f"Malformed exponential-sum term '{token}'")
            pairs.append((int(match.group(2)), int(match.group(1))))
        result = cls.from_pairs(pairs)
        if result.format() != " ".join(text.split()):
            raise ParseError(f"Exponential sum '{text}' is not in normal form")
        return result

    def evaluate(self, m: int) -> int:
        if m < 0:
            raise ValueError(f"Exponent must be nonnegative, got {m}")
        return sum(coeff * base ** m for base, coeff in self.terms)

    def coefficient(self, base: int) -> int:
        for j, coeff in self.terms:
            if j == base:
                return coeff
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    @property
    def leading(self) -> Tuple[int, int]:
        """(base, coeff) of the largest base."""
        return self.terms[0]

    @property
    def coefficient_sum(self) -> int:
        """Σ c_j, the value at m = 0."""
        return sum(coeff for _, coeff in self.terms)

    @property
    def weighted_sum(self) -> int:
        """Σ c_j · j, the value at m = 1."""
        return sum(coeff * base for base, coeff in self.terms)

    @property
    def mass(self) -> int:
        """Σ |c_j|."""
        return sum(abs(coeff) for _, coeff in self.terms)

    def __add__(self, other: "ExpSum") -> "ExpSum":
        return ExpSum.from_pairs(self.terms + other.terms)

    def __neg__(self) -> "ExpSum":
        return ExpSum(tuple((base, -coeff) for base, coeff in self.terms))

    def __sub__(self, other: "ExpSum") -> "ExpSum":
        return self + (-other)

    def scale(self, factor: int) -> "ExpSum":
        return ExpSum.from_pairs((base, coeff * factor) for base, coeff in self.terms)

    def __mul__(self, other: "ExpSum") -> "ExpSum":
        """Product of functions of m: bases multiply pairwise."""
        return ExpSum.from_pairs(
            (a * b, c * e) for a, c in self.terms for b, e in other.terms
        )

    def shift(self, amount: int) -> "ExpSum":
        """Raise every base by amount."""
        if amount < 0:
            raise ValueError(f"Shift must be nonnegative, got {amount}")
        return ExpSum(tuple((base + amount, coeff) for base, coeff in self.terms))

    def format(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{coeff:+d}*{base}" for base, coeff in self.terms)

    def pretty(self) -> str:
        """Human form such as ``8^m - 2·6^m + 5^m``."""
        if not self.terms:
            return "0"
        parts = []
        for index, (base, coeff) in enumerate(self.terms):
            sign = "-" if coeff < 0 else "+"
            size = abs(coeff)
            body = "1" if base == 1 else f"{base}^m"
            if size != 1:
                body = f"{size}" if base == 1 else f"{size}·{body}"
            if index == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


def evaluate(es: ExpSum, m: int) -> int:
    return es.evaluate(m)


def es_product(a: ExpSum, b: ExpSum) -> ExpSum:
    return a * b


def es_shift(a: ExpSum, s: int) -> ExpSum:
    return a.shift(s)
