"""
Brute-force counts over all partitions of n.

Each census walks partitions(n) once, extracts the statistic, and tallies
cells into a Counter. The Counter is poured into a numpy grid at the end.
Large scans can be split by largest part over CensusWorker threads; partial
Counters are merged by addition, so the result never depends on scheduling.
"""

import collections
import logging
import threading
from typing import Callable, Deque, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from enumeration import ConstraintSpec, count_partitions, partitions, partitions_with_largest
from partition import (
    Partition,
    PartitionError,
    chain_maex,
    chain_mex,
    distinct_multiples,
    distinct_repeating,
    even_parts,
    is_gap_free,
    is_regular,
    largest_repeating,
    max_frequency,
    mex,
    multiples_of,
    parts_greater_than,
    smallest_repeating,
)

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]
Extractor = Callable[[Partition], Iterable[Key]]

CHAIN_MAEX_INTERPRETATIONS = ("exists", "literal", "exists-positive-window")

_cache_limit = 40
_cache: Dict[int, Tuple[Partition, ...]] = {}
_cache_lock = threading.Lock()


def set_cache_limit(limit: int):
    """Largest n whose partition list is kept in memory between censuses."""
    global _cache_limit
    with _cache_lock:
        _cache_limit = limit
        for n in [n for n in _cache if n > limit]:
            del _cache[n]


def population(n: int) -> Iterable[Partition]:
    if n > _cache_limit:
        return partitions(n)
    with _cache_lock:
        cached = _cache.get(n)
    if cached is None:
        cached = tuple(partitions(n))
        with _cache_lock:
            _cache[n] = cached
        logger.debug(f"Cached {len(cached)} partitions of {n}")
    return cached


class CountTable:
    """
    Grid of census counts. ``cells`` has one axis per entry of ``axes``
    (indexed directly by the statistic value) plus a trailing column axis.
    """

    def __init__(
        self,
        statistic: str,
        n: int,
        axes: Sequence[str],
        columns: Sequence[str],
        cells: np.ndarray,
        params: Optional[Mapping[str, object]] = None,
        scalars: Optional[Mapping[str, int]] = None,
        listings: Optional[Dict[Tuple, List[Partition]]] = None,
    ):
        self.statistic = statistic
        self.n = n
        self.axes = tuple(axes)
        self.columns = tuple(columns)
        self.cells = cells
        self.params = dict(params or {})
        self.scalars = dict(scalars or {})
        self.listings = listings

    def _column_index(self, column: Optional[str]) -> int:
        if column is None:
            return 0
        return self.columns.index(column)

    def cell(self, *key: int, column: Optional[str] = None) -> int:
        grid = self.cells[..., self._column_index(column)]
        if any(k < 0 or k >= size for k, size in zip(key, grid.shape)):
            return 0
        return int(grid[key])

    def column(self, name: str) -> np.ndarray:
        return self.cells[..., self._column_index(name)]

    def column_total(self, name: str) -> int:
        return int(self.column(name).sum())

    def rows(self) -> List[Tuple[Key, Tuple[int, ...]]]:
        """Nonzero rows in lexicographic key order."""
        if not self.columns:
            return []
        occupied = np.argwhere(self.cells.any(axis=-1))
        return [
            (tuple(int(i) for i in key), tuple(int(c) for c in self.cells[tuple(key)]))
            for key in occupied
        ]

    def first_mismatch(self, left: str, right: str) -> Optional[Key]:
        """Smallest key (lexicographic) where two columns disagree."""
        diff = np.argwhere(self.column(left) != self.column(right))
        if len(diff) == 0:
            return None
        return tuple(int(i) for i in diff[0])

    def listing(self, key: Key, column: str) -> List[Partition]:
        if self.listings is None:
            return []
        return self.listings.get((*key, column), [])

    def __repr__(self) -> str:
        return f"CountTable({self.statistic}, n={self.n}, params={self.params})"


# --------------------------
class CensusWorker(threading.Thread):
    """Pulls largest-part strata from a shared deque and tallies them."""

    def __init__(self, n: int, extract: Extractor, strata: Deque[int], lock: threading.Lock):
        super().__init__(daemon=True)
        self.n = n
        self.extract = extract
        self.strata = strata
        self.lock = lock
        self.tally: collections.Counter = collections.Counter()
        self.error: Optional[BaseException] = None

    def _next_stratum(self) -> Optional[int]:
        with self.lock:
            if not self.strata:
                return None
            return self.strata.popleft()

    def run(self):
        try:
            while True:
                k = self._next_stratum()
                if k is None:
                    break
                for p in partitions_with_largest(self.n, k):
                    self.tally.update(self.extract(p))
        except Exception as e:
            logger.error(f"Census worker failed at n={self.n}: {e}", exc_info=True)
            self.error = e


def tally(n: int, extract: Extractor, workers: int = 1) -> collections.Counter:
    """Fold ``extract`` over partitions(n) into a Counter of keys."""
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if workers <= 1 or n < 2 or n <= _cache_limit:
        counts = collections.Counter()
        for p in population(n):
            counts.update(extract(p))
        return counts
    strata = collections.deque(range(n, 0, -1))
    lock = threading.Lock()
    pool = [CensusWorker(n, extract, strata, lock) for _ in range(workers)]
    for worker in pool:
        worker.start()
    for worker in pool:
        worker.join()
    counts = collections.Counter()
    for worker in pool:
        if worker.error is not None:
            raise worker.error
        counts += worker.tally
    logger.debug(f"Merged {len(pool)} census workers for n={n}")
    return counts


def _grid(counts: Mapping[Key, int], shape: Tuple[int, ...]) -> np.ndarray:
    cells = np.zeros(shape, dtype=np.int64)
    for key, value in counts.items():
        cells[key] = value
    return cells


def _require_r(r: int, minimum: int):
    if not isinstance(r, int) or r < minimum:
        raise PartitionError(f"r must be an integer >= {minimum}, got {r!r}")


def _collect_listings(n: int, extract: Extractor, columns: Sequence[str], only_j: Optional[int]):
    listings: Dict[Tuple, List[Partition]] = collections.defaultdict(list)
    for p in population(n):
        for key in extract(p):
            *cell, col = key
            if only_j is None or cell[0] == only_j:
                listings[(*cell, columns[col])].append(p)
    return dict(listings)


# --------------------------
def three_way_census(
    n: int, r: int, listings: bool = False, only_j: Optional[int] = None, workers: int = 1
) -> CountTable:
    """
    Per j: partitions with j multiples of r, with largest r-repeating part j,
    and with j parts above their (r-1)-chain mex.
    """
    _require_r(r, 2)
    columns = ("multiples_of_r", "largest_r_repeating", "above_chain_mex")

    def extract(p: Partition):
        return (
            (multiples_of(p, r), 0),
            (largest_repeating(p, r), 1),
            (parts_greater_than(p, chain_mex(p, r - 1)), 2),
        )

    counts = tally(n, extract, workers)
    table = CountTable("three-way", n, ("j",), columns, _grid(counts, (n + 1, 3)), {"r": r})
    if listings:
        table.listings = _collect_listings(n, extract, columns, only_j)
    return table


def q_bivariate_census(n: int, s: int, j: int, workers: int = 1) -> CountTable:
    """Q_s^j(n, m): largest s-repeating part j and m parts greater than j."""
    _require_r(s, 1)

    def extract(p: Partition):
        if largest_repeating(p, s) != j:
            return ()
        return ((parts_greater_than(p, j), 0),)

    counts = tally(n, extract, workers)
    return CountTable("q-bivariate", n, ("m",), ("count",), _grid(counts, (n + 1, 1)), {"s": s, "j": j})


def q_bivariate_grid(n: int, s: int, workers: int = 1) -> CountTable:
    """Q_s^j(n, m) for every j and m at once."""
    _require_r(s, 1)

    def extract(p: Partition):
        j = largest_repeating(p, s)
        return ((j, parts_greater_than(p, j), 0),)

    counts = tally(n, extract, workers)
    return CountTable("q-bivariate", n, ("j", "m"), ("count",), _grid(counts, (n + 1, n + 1, 1)), {"s": s})


def multiples_census(n: int, r: int, workers: int = 1) -> CountTable:
    """Per j: partitions with j multiples of r, and with largest r-repeating part j."""
    _require_r(r, 1)

    def extract(p: Partition):
        return ((multiples_of(p, r), 0), (largest_repeating(p, r), 1))

    counts = tally(n, extract, workers)
    return CountTable(
        "multiples", n, ("j",), ("multiples_of_r", "largest_r_repeating"), _grid(counts, (n + 1, 2)), {"r": r}
    )


def sigma_chain_mex(n: int, r: int) -> int:
    return sigma_chain_mex_many(n, (r,))[r]


def sigma_chain_mex_many(n: int, rs: Sequence[int]) -> Dict[int, int]:
    """Sum of the r-chain mex over partitions(n) for every r in one pass."""
    for r in rs:
        _require_r(r, 1)
    totals = dict.fromkeys(rs, 0)
    for p in population(n):
        for r in totals:
            totals[r] += chain_mex(p, r)
    return totals


def refine_census(n: int, r: int, workers: int = 1) -> Tuple[CountTable, CountTable]:
    """
    (A) j parts above the r-chain mex, r-chain mex equal to k;
    (B) largest (r+1)-repeating part j, k-1 parts greater than j.
    """
    _require_r(r, 1)

    def extract(p: Partition):
        k = chain_mex(p, r)
        j = largest_repeating(p, r + 1)
        return (
            (parts_greater_than(p, k), k, 0),
            (j, parts_greater_than(p, j) + 1, 1),
        )

    counts = tally(n, extract, workers)
    cells = _grid(counts, (n + 1, n + 2, 2))
    params = {"r": r}
    return (
        CountTable("refine-chain-mex", n, ("j", "k"), ("count",), cells[..., 0:1], params),
        CountTable("refine-repeating", n, ("j", "k"), ("count",), cells[..., 1:2], params),
    )


def franklin_glaisher_census(n: int, r: int, workers: int = 1) -> CountTable:
    """
    Per j: partitions with j different values divisible by r, and with j
    different values occurring at least r times. Scalars hold the
    r-regular and frequency-below-r totals.
    """
    _require_r(r, 2)

    def extract(p: Partition):
        keys = [(distinct_multiples(p, r), 0), (distinct_repeating(p, r), 1)]
        if is_regular(p, r):
            keys.append((0, 2))
        if max_frequency(p) < r:
            keys.append((0, 3))
        return keys

    counts = tally(n, extract, workers)
    cells = _grid(counts, (n + 1, 4))
    return CountTable(
        "franklin-glaisher",
        n,
        ("j",),
        ("distinct_multiples", "distinct_repeating"),
        cells[:, :2],
        {"r": r},
        scalars={"regular": int(cells[0, 2]), "frequency_below_r": int(cells[0, 3])},
    )


def glaisher_census(n: int, rs: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    """
    (r-regular count, count with every frequency below r) for each r,
    from a single walk over partitions(n).
    """
    for r in rs:
        _require_r(r, 2)
    regular = dict.fromkeys(rs, 0)
    below = dict.fromkeys(rs, 0)
    for p in population(n):
        top = max_frequency(p)
        for r in regular:
            if is_regular(p, r):
                regular[r] += 1
            if top < r:
                below[r] += 1
    return {r: (regular[r], below[r]) for r in rs}


def chain_maex_census(n: int, r: int, interpretation: str = "exists", workers: int = 1) -> CountTable:
    """
    Per j >= 1: partitions with j parts above their (r-1)-chain maex, and
    partitions whose smallest r-repeating part is j.

    ``exists`` counts partitions where the maex exists with integers <= 0
    treated as missing; ``exists-positive-window`` needs the whole window
    positive; ``literal`` takes every non-gap-free partition and reads an
    absent maex as 0.
    """
    _require_r(r, 2)
    if interpretation not in CHAIN_MAEX_INTERPRETATIONS:
        raise PartitionError(f"Unknown chain maex interpretation {interpretation!r}")
    t = r - 1

    def extract(p: Partition):
        keys = []
        small = smallest_repeating(p, r)
        if small:
            keys.append((small, 1))
        if interpretation == "literal":
            if not is_gap_free(p):
                bound = chain_maex(p, t) or 0
                above = parts_greater_than(p, bound)
                if above:
                    keys.append((above, 0))
        else:
            bound = chain_maex(p, t, allow_nonpositive=(interpretation == "exists"))
            if bound is not None:
                above = parts_greater_than(p, bound)
                if above:
                    keys.append((above, 0))
        return keys

    counts = tally(n, extract, workers)
    return CountTable(
        "chain-maex",
        n,
        ("j",),
        ("above_chain_maex", "smallest_r_repeating"),
        _grid(counts, (n + 1, 2)),
        {"r": r, "interpretation": interpretation},
    )


def alpha_census(n: int, workers: int = 1) -> CountTable:
    """alpha(n, j), e(n, j) and the largest-repeating-part column, per j."""

    def extract(p: Partition):
        return (
            (parts_greater_than(p, mex(p)), 0),
            (even_parts(p), 1),
            (largest_repeating(p, 2), 2),
        )

    counts = tally(n, extract, workers)
    return CountTable(
        "alpha", n, ("j",), ("above_mex", "even_parts", "largest_repeating"), _grid(counts, (n + 1, 3))
    )


def euler_census(n: int) -> CountTable:
    odd = distinct = gap_free = zero_above_mex = 0
    for p in population(n):
        if all(v % 2 for v, _ in p.pairs):
            odd += 1
        if max_frequency(p) <= 1:
            distinct += 1
        if is_gap_free(p):
            gap_free += 1
        if parts_greater_than(p, mex(p)) == 0:
            zero_above_mex += 1
    return CountTable(
        "euler",
        n,
        (),
        (),
        np.zeros((0,), dtype=np.int64),
        scalars={"odd_parts": odd, "distinct_parts": distinct, "gap_free": gap_free, "zero_above_mex": zero_above_mex},
    )


def m_weighted_census(n: int, s: int, j: int) -> int:
    """sum over m of m * Q_s^j(n, m)"""
    _require_r(s, 1)
    total = 0
    for p in population(n):
        if largest_repeating(p, s) == j:
            total += parts_greater_than(p, j)
    return total


def gap_bounded_table(max_n: int, r: int) -> np.ndarray:
    """
    cells[k, w]: partitions of w with largest part exactly k, successive
    gaps below r and smallest part below r (the empty partition sits at 0, 0).
    """
    _require_r(r, 2)
    cells = np.zeros((max_n + 1, max_n + 1), dtype=np.int64)
    cells[0, 0] = 1
    for k in range(1, max_n + 1):
        spec = ConstraintSpec(exact_largest_part=k, max_successive_gap=r - 1)
        for w in range(k, max_n + 1):
            cells[k, w] = count_partitions(w, spec)
    return cells


def fk_sum_census(n: int, j: int, r: int, table: Optional[np.ndarray] = None) -> int:
    """
    Coefficient of q^n in sum_k F_k(q) q^(kj), where F_k counts partitions
    with largest part k, successive gaps below r and smallest part below r.
    """
    if n < 0 or j < 0:
        raise PartitionError(f"n and j must be nonnegative, got n={n}, j={j}")
    if table is None or table.shape[1] <= n:
        table = gap_bounded_table(n, r)
    total = 0
    for k in range(0, n + 1):
        rest = n - k * j
        if rest < 0:
            break
        total += int(table[k, rest])
    return total
