"""
Exhaustive partition generation.

Every stream yields partitions of n in descending lexicographic order of the
parts view. Generation works directly in frequency form: the next distinct
value is chosen from the top down, and for each value the multiplicity runs
from its maximum down to 1.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterator, List, Optional, Tuple

from filters import (
    DistinctFilter,
    ExactLargestPartFilter,
    FilterChain,
    ForbiddenResidueFilter,
    MaxFrequencyFilter,
    MaxSuccessiveGapFilter,
    MinPartFilter,
)
from partition import Partition

logger = logging.getLogger(__name__)

ColoredPart = Tuple[int, int, int]  # (value, color, multiplicity)


class ConstraintError(ValueError):
    """Raised for invalid constraint or colouring specifications."""


@dataclass(frozen=True)
class ConstraintSpec:
    max_frequency: Optional[int] = None
    forbidden_residues: Optional[Tuple[int, FrozenSet[int]]] = None
    distinct: bool = False
    exact_largest_part: Optional[int] = None
    max_successive_gap: Optional[int] = None
    min_part: Optional[int] = None

    def __post_init__(self):
        for name in ("max_frequency", "exact_largest_part", "max_successive_gap", "min_part"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 1):
                raise ConstraintError(f"{name} must be a positive integer, got {value!r}")
        if self.forbidden_residues is not None:
            modulus, residues = self.forbidden_residues
            if not isinstance(modulus, int) or modulus < 1:
                raise ConstraintError(f"Residue modulus must be positive, got {modulus!r}")
            object.__setattr__(
                self, "forbidden_residues", (modulus, frozenset(r % modulus for r in residues))
            )

    @classmethod
    def regular(cls, modulus: int, **kwargs) -> "ConstraintSpec":
        """m-regular partitions: no part divisible by ``modulus``."""
        return cls(forbidden_residues=(modulus, frozenset({0})), **kwargs)

    @property
    def multiplicity_cap(self) -> Optional[int]:
        if self.distinct:
            return 1
        return self.max_frequency

    def allows_value(self, value: int) -> bool:
        if self.min_part is not None and value < self.min_part:
            return False
        if self.forbidden_residues is not None:
            modulus, residues = self.forbidden_residues
            if value % modulus in residues:
                return False
        return True

    def to_filter_chain(self) -> FilterChain:
        chain = FilterChain()
        if self.max_frequency is not None:
            chain.add_filter(MaxFrequencyFilter(self.max_frequency))
        if self.forbidden_residues is not None:
            chain.add_filter(ForbiddenResidueFilter(*self.forbidden_residues))
        if self.distinct:
            chain.add_filter(DistinctFilter())
        if self.exact_largest_part is not None:
            chain.add_filter(ExactLargestPartFilter(self.exact_largest_part))
        if self.max_successive_gap is not None:
            chain.add_filter(MaxSuccessiveGapFilter(self.max_successive_gap))
        if self.min_part is not None:
            chain.add_filter(MinPartFilter(self.min_part))
        return chain


@dataclass(frozen=True)
class ColoredSpec:
    """
    Parts whose value is congruent to ``two_color_residue`` modulo ``modulus``
    come in two colours; ``color_max_frequency`` caps every single-coloured
    copy (uncoloured values included).
    """

    modulus: int
    two_color_residue: int
    base: ConstraintSpec = field(default_factory=ConstraintSpec)
    color_max_frequency: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise ConstraintError(f"modulus must be a positive integer, got {self.modulus!r}")
        if not 1 <= self.two_color_residue <= self.modulus:
            raise ConstraintError(
                f"two_color_residue must lie in [1, {self.modulus}], got {self.two_color_residue}"
            )
        if self.color_max_frequency is not None and self.color_max_frequency < 1:
            raise ConstraintError(f"color_max_frequency must be positive, got {self.color_max_frequency}")

    def is_colored(self, value: int) -> bool:
        return value % self.modulus == self.two_color_residue % self.modulus


# --------------------------
def _descend(remaining: int, cap: int, stack: List[Tuple[int, int]]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    top = min(remaining, cap)
    for value in range(top, 1, -1):
        for mult in range(remaining // value, 0, -1):
            stack.append((value, mult))
            rest = remaining - value * mult
            if rest == 0:
                yield tuple(stack)
            else:
                yield from _descend(rest, value - 1, stack)
            stack.pop()
    if top >= 1:
        stack.append((1, remaining))
        yield tuple(stack)
        stack.pop()


def _check_n(n: int):
    if not isinstance(n, int) or n < 0:
        raise ConstraintError(f"n must be a nonnegative integer, got {n!r}")


def partitions(n: int) -> Iterator[Partition]:
    """Every partition of n exactly once, descending lexicographic order."""
    _check_n(n)
    if n == 0:
        yield Partition()
        return
    for pairs in _descend(n, n, []):
        yield Partition._trusted(pairs, n)


def partitions_with_largest(n: int, k: int) -> Iterator[Partition]:
    """The stratum of partitions of n whose largest part is exactly k (k=0 only for n=0)."""
    _check_n(n)
    if k == 0:
        if n == 0:
            yield Partition()
        return
    if k > n:
        return
    for mult in range(n // k, 0, -1):
        rest = n - k * mult
        if rest == 0:
            yield Partition._trusted(((k, mult),), n)
            continue
        for pairs in _descend(rest, k - 1, [(k, mult)]):
            yield Partition._trusted(pairs, n)


class _Pruner:
    __slots__ = ("spec", "cap", "gap", "min_part")

    def __init__(self, spec: ConstraintSpec):
        self.spec = spec
        self.cap = spec.multiplicity_cap
        self.gap = spec.max_successive_gap
        self.min_part = spec.min_part or 1

    def top_multiplicity(self, value: int, remaining: int) -> int:
        top = remaining // value
        if self.cap is not None:
            top = min(top, self.cap)
        return top

    def walk(self, remaining: int, upper: int, previous: Optional[int], stack: List[Tuple[int, int]]):
        if remaining == 0:
            if self.gap is not None and stack and stack[-1][0] > self.gap:
                return
            yield tuple(stack)
            return
        lower = self.min_part
        if previous is not None and self.gap is not None:
            lower = max(lower, previous - self.gap)
        for value in range(min(remaining, upper), lower - 1, -1):
            if not self.spec.allows_value(value):
                continue
            for mult in range(self.top_multiplicity(value, remaining), 0, -1):
                stack.append((value, mult))
                yield from self.walk(remaining - value * mult, value - 1, value, stack)
                stack.pop()


def partitions_constrained(n: int, spec: ConstraintSpec) -> Iterator[Partition]:
    """Partitions of n satisfying every constraint of ``spec`` (conjunctively)."""
    _check_n(n)
    if n == 0:
        if spec.exact_largest_part is None:
            yield Partition()
        return
    pruner = _Pruner(spec)
    if spec.exact_largest_part is None:
        for pairs in pruner.walk(n, n, None, []):
            yield Partition._trusted(pairs, n)
        return
    k = spec.exact_largest_part
    if k > n or not spec.allows_value(k):
        return
    for mult in range(pruner.top_multiplicity(k, n), 0, -1):
        for pairs in pruner.walk(n - k * mult, k - 1, k, [(k, mult)]):
            yield Partition._trusted(pairs, n)


def count_partitions(n: int, spec: Optional[ConstraintSpec] = None) -> int:
    stream = partitions(n) if spec is None else partitions_constrained(n, spec)
    return sum(1 for _ in stream)


# --------------------------
def _color_splits(mult: int, cap: Optional[int]) -> int:
    """Ways to write mult = a + b with both colour counts within cap."""
    if cap is None:
        return mult + 1
    return max(0, min(mult, cap) - max(0, mult - cap) + 1)


def _underlying_spec(spec: ColoredSpec) -> ConstraintSpec:
    if spec.color_max_frequency is None:
        return spec.base
    ceiling = 2 * spec.color_max_frequency
    if spec.base.max_frequency is not None:
        ceiling = min(ceiling, spec.base.max_frequency)
    return replace(spec.base, max_frequency=ceiling)


def colored_partitions(n: int, spec: ColoredSpec) -> Iterator[Tuple[ColoredPart, ...]]:
    """
    Explicit stream of coloured multisets of weight n as (value, color,
    multiplicity) triples. Uncoloured values carry color 0.
    """
    cap = spec.color_max_frequency
    for p in partitions_constrained(n, _underlying_spec(spec)):
        choices = []
        for value, mult in p.pairs:
            if spec.is_colored(value):
                low = 0 if cap is None else max(0, mult - cap)
                high = mult if cap is None else min(mult, cap)
                choices.append([(value, a, mult - a) for a in range(high, low - 1, -1)])
            else:
                if cap is not None and mult > cap:
                    choices = None
                    break
                choices.append([(value, mult, 0)])
        if choices is None:
            continue
        for combo in itertools.product(*choices):
            parts = []
            for value, first, second in combo:
                if first:
                    parts.append((value, 0, first))
                if second and spec.is_colored(value):
                    parts.append((value, 1, second))
            yield tuple(parts)


def count_colored(n: int, spec: ColoredSpec) -> int:
    """Number of coloured multisets of weight n (same set as ``colored_partitions``)."""
    _check_n(n)
    cap = spec.color_max_frequency
    total = 0
    for p in partitions_constrained(n, _underlying_spec(spec)):
        ways = 1
        for value, mult in p.pairs:
            if spec.is_colored(value):
                ways *= _color_splits(mult, cap)
            elif cap is not None and mult > cap:
                ways = 0
            if not ways:
                break
        total += ways
    return total


def two_color_spec(modulus: int, residue: int) -> ColoredSpec:
    """p_m(j, n): m-regular partitions with parts congruent to j two-coloured."""
    return ColoredSpec(modulus=modulus, two_color_residue=residue, base=ConstraintSpec.regular(modulus))


DISTINCT_TWO_COLORED = ColoredSpec(modulus=1, two_color_residue=1, color_max_frequency=1)


def count_distinct_two_colored(n: int) -> int:
    """D2(n): partitions into distinct parts with two colours."""
    return count_colored(n, DISTINCT_TWO_COLORED)
