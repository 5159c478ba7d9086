"""
Unlabeled Poset Catalog

Every class on k points arises from a class on k - 1 points by adding one
new maximal point above a downset. Children are deduplicated by canonical
code and the catalog is ordered by (k, code), the empty poset first.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, Iterator, List, Optional, Tuple

from src.catalog.canonical import canonical_form, canonical_poset
from src.counting.downsets import d_count, downsets, upsets
from src.exceptions import BudgetExceeded, IncompleteCatalog
from src.expo.exponential import exp_sum
from src.expo.expsum import ExpSum
from src.poset.bits import bit, popcount
from src.poset.poset import Poset, height, minimal_points, restrict
from src.settings import get_settings

logger = logging.getLogger(__name__)

# Largest point count the catalog is built for
MAX_CATALOG_K = 7


@dataclass(frozen=True)
class CatalogEntry:
    """One isomorphism class with its invariants."""
    index: int
    poset: Poset
    points: int
    min_count: int
    height: int
    automorphisms: int
    copies: int
    downsets: int
    exp: ExpSum
    canon: str

    @property
    def signature(self) -> Tuple[int, int, int, int, int]:
        """(k, m, h, a, d), used to match published class numbers."""
        return (self.points, self.min_count, self.height, self.automorphisms, self.downsets)


def make_entry(index: int, P: Poset) -> CatalogEntry:
    form = canonical_form(P)
    return CatalogEntry(
        index=index,
        poset=P,
        points=P.size,
        min_count=popcount(minimal_points(P)),
        height=height(P),
        automorphisms=form.automorphisms,
        copies=factorial(P.size) // form.automorphisms,
        downsets=d_count(P),
        exp=exp_sum(P),
        canon=form.hex,
    )


class Catalog:
    """Isomorphism classes with k <= k_max, indexed from 1."""

    def __init__(self, entries: List[CatalogEntry], k_max: int) -> None:
        self.entries = list(entries)
        self.k_max = k_max
        self._by_code: Dict[str, CatalogEntry] = {entry.canon: entry for entry in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> CatalogEntry:
        """Entry by its 1-based catalog index."""
        if not 1 <= index <= len(self.entries):
            raise IndexError(f"Catalog index {index} out of range 1..{len(self.entries)}")
        return self.entries[index - 1]

    def lookup(self, P: Poset) -> CatalogEntry:
        """
        The entry isomorphic to P.

        Raises:
            IncompleteCatalog: If P's class was not enumerated
        """
        code = canonical_form(P).hex
        entry = self._by_code.get(code)
        if entry is None:
            raise IncompleteCatalog(f"No catalog class for a poset on {P.size} points (code {code})")
        return entry

    def of_size(self, k: int) -> List[CatalogEntry]:
        return [entry for entry in self.entries if entry.points == k]

    def find(self, **signature: Any) -> CatalogEntry:
        """
        The unique entry whose fields match every keyword.

        Example:
            >>> catalog.find(points=5, min_count=3, height=3, automorphisms=1, downsets=14)

        Raises:
            IncompleteCatalog: If no entry matches
            ValueError: If several entries match
        """
        matches = [
            entry for entry in self.entries
            if all(getattr(entry, name) == value for name, value in signature.items())
        ]
        if not matches:
            raise IncompleteCatalog(f"No catalog class matches {signature}")
        if len(matches) > 1:
            raise ValueError(f"{len(matches)} catalog classes match {signature}")
        return matches[0]

    def require(self, k: int) -> None:
        """
        Raises:
            IncompleteCatalog: If classes on k points were not enumerated
        """
        if k > self.k_max:
            raise IncompleteCatalog(f"Catalog covers k <= {self.k_max}, needed k = {k}")


def add_maximal_point(P: Poset, D: int) -> Poset:
    """P with a new point k placed directly above the downset D."""
    new = bit(P.size)
    up = [mask | new if D >> x & 1 else mask for x, mask in enumerate(P.up)]
    return Poset(P.size + 1, tuple(up) + (new,))


def children(P: Poset) -> Dict[str, Poset]:
    """Canonical representatives of every one-point extension of P by a maximal point."""
    found: Dict[str, Poset] = {}
    for D in downsets(P):
        child = add_maximal_point(P, D)
        form = canonical_form(child)
        if form.hex not in found:
            found[form.hex] = canonical_poset(child)
    return found


def _next_level(parents: List[Poset], threads: int) -> Dict[str, Poset]:
    level: Dict[str, Poset] = {}
    if threads <= 1:
        for parent in parents:
            level.update(children(parent))
        return level
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(children, parent) for parent in parents]
        for future in as_completed(futures):
            # equal codes carry equal canonical posets
            level.update(future.result())
    return level


def enumerate_catalog(
    k_max: int,
    threads: Optional[int] = None,
    progress_stage: Optional[Any] = None,
) -> Catalog:
    """
    Every isomorphism class with at most k_max points.

    Args:
        k_max: Largest point count
        threads: Worker threads for extending parent classes (settings default)
        progress_stage: Optional stage receiving one update per point count

    Raises:
        BudgetExceeded: If k_max exceeds the supported range
    """
    if k_max > MAX_CATALOG_K:
        raise BudgetExceeded(f"Catalog enumeration is limited to k <= {MAX_CATALOG_K}, got {k_max}")
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    workers = get_settings().threads if threads is None else threads

    if progress_stage:
        try:
            progress_stage.start_build(k_max)
        except Exception:
            progress_stage = None

    empty = Poset(0, ())
    levels: List[List[Poset]] = [[empty]]
    for k in range(1, k_max + 1):
        found = _next_level(levels[-1], workers)
        levels.append([found[code] for code in sorted(found)])
        logger.debug(f"k={k}: {len(found)} classes")
        if progress_stage:
            try:
                progress_stage.update_level(k, len(found))
            except Exception:
                pass

    entries = []
    for level in levels:
        for P in level:
            entries.append(make_entry(len(entries) + 1, P))
    logger.info(f"Catalog through k={k_max}: {len(entries)} classes")
    return Catalog(entries, k_max)


def class_counts(catalog: Catalog) -> List[int]:
    """Number of classes on k points, k = 0..k_max."""
    return [len(catalog.of_size(k)) for k in range(catalog.k_max + 1)]


def upset_classes(catalog: Catalog, P: Poset) -> List[CatalogEntry]:
    """Catalog entry of every upset of P, in upset order."""
    return [catalog.lookup(restrict(P, U)) for U in upsets(P)]
