"""
Partition values and the per-partition statistics.

A partition is kept in frequency form: (value, multiplicity) pairs with values
strictly decreasing. The nonincreasing parts view is materialized on demand.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

Pairs = Tuple[Tuple[int, int], ...]


class PartitionError(ValueError):
    """Raised for nonpositive parts, bad multiplicities or bad statistic parameters."""


class Partition:
    """
    Immutable multiset of positive integers.

    Equality and hashing use the frequency pairs. Ordering follows the
    parts view lexicographically, so ``sorted(..., reverse=True)`` gives the
    descending lexicographic order used by the enumerators.
    """

    __slots__ = ("_pairs", "_weight", "_count", "_parts", "_freq", "_values")

    def __init__(self, freq: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = freq.items() if isinstance(freq, Mapping) else freq
        merged: Dict[int, int] = {}
        for value, mult in items:
            if not isinstance(value, int) or not isinstance(mult, int):
                raise PartitionError(f"Part values and multiplicities must be integers, got {value!r}^{mult!r}")
            if value < 1:
                raise PartitionError(f"Part values must be positive, got {value}")
            if mult < 1:
                raise PartitionError(f"Multiplicity of {value} must be positive, got {mult}")
            merged[value] = merged.get(value, 0) + mult
        pairs = tuple(sorted(merged.items(), reverse=True))
        self._setup(pairs, sum(v * m for v, m in pairs))

    def _setup(self, pairs: Pairs, weight: int):
        self._pairs = pairs
        self._weight = weight
        self._count = None
        self._parts = None
        self._freq = None
        self._values = None

    @classmethod
    def _trusted(cls, pairs: Pairs, weight: int) -> "Partition":
        # enumeration fast path: pairs are already canonical
        obj = cls.__new__(cls)
        obj._setup(pairs, weight)
        return obj

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``7,4,4`` or ``7+4+4`` (blank or ``()`` is the empty partition)."""
        cleaned = text.strip()
        if cleaned in ("", "()"):
            return cls()
        values = []
        for token in cleaned.replace("+", ",").split(","):
            token = token.strip()
            if not token:
                continue
            try:
                values.append(int(token))
            except ValueError:
                raise PartitionError(f"Not an integer part: {token!r}") from None
        return from_parts(values)

    # --------------------------
    @property
    def pairs(self) -> Pairs:
        return self._pairs

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def num_parts(self) -> int:
        if self._count is None:
            self._count = sum(m for _, m in self._pairs)
        return self._count

    @property
    def parts(self) -> Tuple[int, ...]:
        if self._parts is None:
            out = []
            for value, mult in self._pairs:
                out.extend([value] * mult)
            self._parts = tuple(out)
        return self._parts

    @property
    def freq(self) -> Mapping[int, int]:
        if self._freq is None:
            self._freq = dict(self._pairs)
        return MappingProxyType(self._freq)

    @property
    def values(self) -> FrozenSet[int]:
        if self._values is None:
            self._values = frozenset(v for v, _ in self._pairs)
        return self._values

    @property
    def largest_part(self) -> int:
        return self._pairs[0][0] if self._pairs else 0

    @property
    def smallest_part(self) -> int:
        return self._pairs[-1][0] if self._pairs else 0

    @property
    def distinct_count(self) -> int:
        return len(self._pairs)

    def frequency(self, value: int) -> int:
        if self._freq is None:
            self._freq = dict(self._pairs)
        return self._freq.get(value, 0)

    # --------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __len__(self) -> int:
        return self.num_parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        if not self._pairs:
            return "()"
        return "+".join(str(v) for v in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self})"


def from_parts(values: Iterable[int]) -> Partition:
    """Canonical partition of the given parts; input order is irrelevant."""
    values = list(values)
    for value in values:
        if not isinstance(value, int) or value < 1:
            raise PartitionError(f"Parts must be positive integers, got {value!r}")
    return Partition(Counter(values))


def conjugate(p: Partition) -> Partition:
    """
    Transpose of the Young diagram, built in frequency form:
    lambda' = <1^(l1-l2) 2^(l2-l3) ...>. With distinct values v1 > ... > vd and
    cumulative multiplicities C1 < ... < Cd, the conjugate has value Ci
    repeated vi - v(i+1) times.
    """
    pairs = p.pairs
    cumulative = []
    total = 0
    for _, mult in pairs:
        total += mult
        cumulative.append(total)
    out = []
    for i in range(len(pairs) - 1, -1, -1):
        below = pairs[i + 1][0] if i + 1 < len(pairs) else 0
        out.append((cumulative[i], pairs[i][0] - below))
    return Partition._trusted(tuple(out), p.weight)


@dataclass(frozen=True)
class BasicStatistics:
    largest_part: int
    smallest_part: int
    num_parts: int
    frequencies: Mapping[int, int] = field(default_factory=dict)

    def frequency_of(self, value: int) -> int:
        return self.frequencies.get(value, 0)


def basic_statistics(p: Partition) -> BasicStatistics:
    return BasicStatistics(
        largest_part=p.largest_part,
        smallest_part=p.smallest_part,
        num_parts=p.num_parts,
        frequencies=dict(p.pairs),
    )


def _require_positive(name: str, value: int):
    if not isinstance(value, int) or value < 1:
        raise PartitionError(f"{name} must be a positive integer, got {value!r}")


def chain_mex(p: Partition, r: int) -> int:
    """Least k >= 1 such that none of k, ..., k+r-1 is a part."""
    _require_positive("r", r)
    values = p.values
    k = 1
    while True:
        run = 0
        while run < r and (k + run) not in values:
            run += 1
        if run == r:
            return k
        k += run + 1


def mex(p: Partition) -> int:
    return chain_mex(p, 1)


def chain_maex(p: Partition, t: int, allow_nonpositive: bool = True) -> Optional[int]:
    """
    Largest k < largest part such that none of k, k-1, ..., k-t+1 is a part.

    With ``allow_nonpositive`` integers <= 0 count as missing, so a window may
    reach below 1; otherwise the whole window must be positive. Returns None
    when no such k exists.
    """
    _require_positive("t", t)
    values = p.values
    run = t if allow_nonpositive else 0
    best = None
    for k in range(1, p.largest_part):
        if k in values:
            run = 0
        else:
            run += 1
            if run >= t:
                best = k
    return best


def maex(p: Partition) -> Optional[int]:
    return chain_maex(p, 1)


@dataclass(frozen=True)
class RepeatingExtrema:
    largest_r_repeating: int
    smallest_r_repeating: int


def largest_repeating(p: Partition, r: int) -> int:
    """Largest value occurring at least r times, 0 when there is none."""
    for value, mult in p.pairs:
        if mult >= r:
            return value
    return 0


def smallest_repeating(p: Partition, r: int) -> int:
    for value, mult in reversed(p.pairs):
        if mult >= r:
            return value
    return 0


def repeating_part_extrema(p: Partition, r: int) -> RepeatingExtrema:
    _require_positive("r", r)
    return RepeatingExtrema(largest_repeating(p, r), smallest_repeating(p, r))


@dataclass(frozen=True)
class PartCounters:
    multiples_of_r: int
    parts_greater_than_bound: int
    is_gap_free: bool


def multiples_of(p: Partition, r: int) -> int:
    """Number of parts divisible by r, counted with multiplicity."""
    return sum(m for v, m in p.pairs if v % r == 0)


def even_parts(p: Partition) -> int:
    return multiples_of(p, 2)


def parts_greater_than(p: Partition, bound: int) -> int:
    total = 0
    for value, mult in p.pairs:
        if value <= bound:
            break
        total += mult
    return total


def is_gap_free(p: Partition) -> bool:
    """Smallest part 1 and every integer up to the largest part occurs; true for the empty partition."""
    if not p.pairs:
        return True
    return p.smallest_part == 1 and p.distinct_count == p.largest_part


def part_counters(p: Partition, r: int, bound: int) -> PartCounters:
    _require_positive("r", r)
    if bound < 0:
        raise PartitionError(f"bound must be nonnegative, got {bound}")
    return PartCounters(
        multiples_of_r=multiples_of(p, r),
        parts_greater_than_bound=parts_greater_than(p, bound),
        is_gap_free=is_gap_free(p),
    )


def distinct_multiples(p: Partition, r: int) -> int:
    """Number of different part values divisible by r."""
    return sum(1 for v, _ in p.pairs if v % r == 0)


def distinct_repeating(p: Partition, r: int) -> int:
    """Number of different part values occurring at least r times."""
    return sum(1 for _, m in p.pairs if m >= r)


def is_regular(p: Partition, r: int) -> bool:
    """No part divisible by r."""
    return all(v % r for v, _ in p.pairs)


def max_frequency(p: Partition) -> int:
    return max((m for _, m in p.pairs), default=0)
