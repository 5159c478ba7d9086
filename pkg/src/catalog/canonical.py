"""
Canonical Labeling

Points are first colored by an isomorphism-invariant key and the coloring is
refined until stable. Every labeling that places the color cells in order is
a linear extension, so the strict order is an upper-triangular bit matrix.
A backtracking search picks the labeling whose matrix, read column by column,
is lexicographically smallest; the number of labelings reaching that minimum
is the order of the automorphism group.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.poset.bits import MAX_POINTS, bit, iter_bits, popcount
from src.poset.poset import Poset, covers, from_pairs, levels, relabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant code of a poset.

    Attributes:
        code: Point count byte followed by the packed strict-order bits
        automorphisms: Order of the automorphism group
        labeling: labeling[i] is the original point placed at position i
    """
    code: bytes
    automorphisms: int
    labeling: Tuple[int, ...]

    @property
    def hex(self) -> str:
        return self.code.hex()


def _rank(keys: Sequence) -> List[int]:
    index = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [index[key] for key in keys]


def refine_colors(P: Poset) -> List[int]:
    """Stable coloring; colors only grow with the down-closure size."""
    lower = [0] * P.size
    upper = [0] * P.size
    for x, y in covers(P):
        upper[x] += 1
        lower[y] += 1
    level = levels(P)
    colors = _rank([
        (popcount(P.down[x]), popcount(P.up[x]), level[x], lower[x], upper[x])
        for x in range(P.size)
    ])
    while True:
        refined = _rank([
            (
                colors[x],
                tuple(sorted(colors[y] for y in iter_bits(P.strict_down(x)))),
                tuple(sorted(colors[y] for y in iter_bits(P.strict_up(x)))),
            )
            for x in range(P.size)
        ])
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


class _LabelingSearch:
    """Backtracking over cell-respecting labelings, minimizing the column encoding."""

    def __init__(self, P: Poset, colors: Sequence[int]) -> None:
        self.P = P
        cells: Dict[int, int] = {}
        for x, color in enumerate(colors):
            cells[color] = cells.get(color, 0) | bit(x)
        self.slots = [cells[color] for color in sorted(colors)]
        self.labeling: List[int] = []
        self.best: Optional[List[int]] = None
        self.best_labeling: Tuple[int, ...] = ()
        self.count = 0

    def run(self) -> None:
        self._place(0, [])

    def _place(self, position: int, columns: List[int]) -> None:
        if position == self.P.size:
            if self.best is None or columns < self.best:
                self.best = list(columns)
                self.best_labeling = tuple(self.labeling)
                self.count = 1
            elif columns == self.best:
                self.count += 1
            return
        placed = sum(bit(y) for y in self.labeling)
        for x in iter_bits(self.slots[position] & ~placed):
            column = 0
            for y in self.labeling:
                column = column << 1 | self.P.leq(y, x)
            columns.append(column)
            if self.best is None or columns <= self.best[:position + 1]:
                self.labeling.append(x)
                self._place(position + 1, columns)
                self.labeling.pop()
            columns.pop()


def _pack(size: int, columns: Sequence[int]) -> bytes:
    value = 0
    width = 0
    for j, column in enumerate(columns):
        value = value << j | column
        width += j
    padding = -width % 8
    body = (value << padding).to_bytes((width + padding) // 8, 'big') if width else b''
    return bytes([size]) + body


def canonical_form(P: Poset) -> CanonicalForm:
    """Canonical code, automorphism count and canonical labeling of P."""
    if P.size > MAX_POINTS:
        raise ValueError(f"Canonical forms are limited to {MAX_POINTS} points")
    search = _LabelingSearch(P, refine_colors(P))
    search.run()
    return CanonicalForm(
        code=_pack(P.size, search.best or []),
        automorphisms=search.count,
        labeling=search.best_labeling,
    )


def canonical_poset(P: Poset) -> Poset:
    """The representative of P's class in canonical labeling."""
    return relabel(P, canonical_form(P).labeling)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    return P.size == Q.size and canonical_form(P).code == canonical_form(Q).code


def poset_from_code(code: bytes) -> Poset:
    """
    Rebuild the canonically labeled poset from its code.

    Raises:
        ValueError: If the code length does not match its point count
    """
    if not code:
        raise ValueError("Empty canonical code")
    size = code[0]
    width = size * (size - 1) // 2
    if len(code) != 1 + (width + 7) // 8:
        raise ValueError(f"Code of {len(code)} bytes does not fit {size} points")
    value = int.from_bytes(code[1:], 'big') >> (-width % 8) if width else 0
    pairs = []
    remaining = width
    for j in range(1, size):
        remaining -= j
        column = value >> remaining & ((1 << j) - 1)
        pairs.extend((i, j) for i in range(j) if column >> (j - 1 - i) & 1)
    return from_pairs(size, pairs)
