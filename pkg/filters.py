"""
Partition filter system: predicates applied to whole partitions.

The chain is the slow, obviously-correct counterpart of the pruned
constrained enumerator: filtering the unconstrained stream through a chain
must give exactly the constrained stream.
"""

import logging
from abc import ABC, abstractmethod
from typing import FrozenSet, List

from partition import Partition

logger = logging.getLogger(__name__)


class PartitionFilter(ABC):
    """Base class for partition filters."""

    @abstractmethod
    def accepts(self, p: Partition) -> bool:
        """
        Decide whether a partition passes the filter.

        Args:
            p: Partition to test

        Returns:
            True if the partition satisfies the constraint
        """
        pass


class FilterChain:
    """Conjunction of filters, evaluated in insertion order."""

    def __init__(self):
        self.filters: List[PartitionFilter] = []

    def add_filter(self, filter_obj: PartitionFilter):
        """Add a filter to the chain."""
        self.filters.append(filter_obj)
        logger.debug(f"Added filter {filter_obj.__class__.__name__} to chain")

    def remove_filter(self, filter_obj: PartitionFilter):
        """Remove a filter from the chain."""
        if filter_obj in self.filters:
            self.filters.remove(filter_obj)
            logger.debug(f"Removed filter {filter_obj.__class__.__name__} from chain")

    def accepts(self, p: Partition) -> bool:
        for filter_obj in self.filters:
            if not filter_obj.accepts(p):
                return False
        return True

    def __len__(self) -> int:
        return len(self.filters)


class MaxFrequencyFilter(PartitionFilter):
    """Every value occurs at most ``limit`` times."""

    def __init__(self, limit: int):
        self.limit = limit

    def accepts(self, p: Partition) -> bool:
        return all(m <= self.limit for _, m in p.pairs)


class ForbiddenResidueFilter(PartitionFilter):
    """No part is congruent to a forbidden residue modulo ``modulus``."""

    def __init__(self, modulus: int, residues: FrozenSet[int]):
        self.modulus = modulus
        self.residues = frozenset(r % modulus for r in residues)

    def accepts(self, p: Partition) -> bool:
        return all(v % self.modulus not in self.residues for v, _ in p.pairs)


class DistinctFilter(PartitionFilter):
    def accepts(self, p: Partition) -> bool:
        return all(m == 1 for _, m in p.pairs)


class ExactLargestPartFilter(PartitionFilter):
    def __init__(self, largest: int):
        self.largest = largest

    def accepts(self, p: Partition) -> bool:
        return p.largest_part == self.largest


class MaxSuccessiveGapFilter(PartitionFilter):
    """
    Successive distinct values differ by at most ``gap`` and the smallest part
    is at most ``gap`` (a virtual part 0 closes the chain).
    """

    def __init__(self, gap: int):
        self.gap = gap

    def accepts(self, p: Partition) -> bool:
        previous = None
        for value, _ in p.pairs:
            if previous is not None and previous - value > self.gap:
                return False
            previous = value
        return previous is None or previous <= self.gap


class MinPartFilter(PartitionFilter):
    def __init__(self, minimum: int):
        self.minimum = minimum

    def accepts(self, p: Partition) -> bool:
        return not p.pairs or p.smallest_part >= self.minimum
