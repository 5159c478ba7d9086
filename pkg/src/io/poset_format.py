"""
Poset Text Format

    # comment lines and blank lines are ignored
    points 4
    rel 0 1
    rel 0 3

The header gives the point count; each ``rel i j`` line is a generator
i < j and the transitive closure is applied. Serialization writes the cover
relations only, sorted.
"""

import logging
from pathlib import Path
from typing import List, Tuple

from src.exceptions import ParseError
from src.poset.bits import MAX_POINTS
from src.poset.poset import Poset, covers, from_pairs

logger = logging.getLogger(__name__)


def _index(token: str, k: int, line_number: int) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"Point index '{token}' is not a decimal integer", line_number)
    if not 0 <= value < k:
        raise ParseError(f"Point index {value} is outside 0..{k - 1}", line_number)
    return value


def parse_poset(text: str) -> Poset:
    """
    Parse the text format.

    Raises:
        ParseError: If the header or a relation line is malformed
        CycleError: If the generators force a cycle
    """
    k = None
    pairs: List[Tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if k is None:
            if len(fields) != 2 or fields[0] != 'points' or not fields[1].isdigit():
                raise ParseError(f"Expected 'points <k>', got '{line}'", line_number)
            k = int(fields[1])
            if k > MAX_POINTS:
                raise ParseError(f"At most {MAX_POINTS} points are supported, got {k}", line_number)
            continue
        if len(fields) != 3 or fields[0] != 'rel':
            raise ParseError(f"Expected 'rel <i> <j>', got '{line}'", line_number)
        i, j = (_index(token, k, line_number) for token in fields[1:])
        if i == j:
            raise ParseError(f"Relation {i} < {i} is not strict", line_number)
        pairs.append((i, j))
    if k is None:
        raise ParseError("Missing 'points <k>' header")
    return from_pairs(k, pairs)


def serialize_poset(P: Poset) -> str:
    lines = [f"points {P.size}"]
    lines.extend(f"rel {x} {y}" for x, y in sorted(covers(P)))
    return "\n".join(lines) + "\n"


def read_poset(path: Path) -> Poset:
    """
    Read a poset file.

    Raises:
        FileNotFoundError: If the file does not exist
        ParseError: If the contents are malformed
    """
    if not path.exists():
        raise FileNotFoundError(f"Poset file not found: {path.absolute()}")
    P = parse_poset(path.read_text(encoding='utf-8'))
    logger.debug(f"Read {P} from {path.name}")
    return P


def write_poset(P: Poset, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_poset(P), encoding='utf-8')
