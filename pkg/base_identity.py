"""
Base interface for identity checks and the report types they produce.
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from census import population
from partition import Partition

logger = logging.getLogger(__name__)

WITNESS_LIMIT = 10


class UnknownIdentityError(KeyError):
    """Raised when an identity id is not in the registry."""


class ResourceCeilingError(RuntimeError):
    """Raised when a run would exceed the configured scan or order ceiling."""


class IdentityCheckError(RuntimeError):
    """Raised when a check itself fails to run; wraps the original exception."""

    def __init__(self, identity_id: str, cause: Exception):
        super().__init__(f"{identity_id}: {cause.__class__.__name__}: {cause}")
        self.identity_id = identity_id
        self.cause = cause


@dataclass(frozen=True)
class VerifyParams:
    max_n: int = 40
    r_values: Tuple[int, ...] = (1, 2, 3, 4)
    j_values: Optional[Tuple[int, ...]] = None
    order: int = 120
    allow_large: bool = False

    def r_range(self, minimum: int = 1, maximum: Optional[int] = None) -> Tuple[int, ...]:
        return tuple(
            r for r in self.r_values if r >= minimum and (maximum is None or r <= maximum)
        )

    def j_range(self, upper: int) -> Tuple[int, ...]:
        """Requested j values up to ``upper``, or all of 0..upper."""
        if self.j_values is None:
            return tuple(range(upper + 1))
        return tuple(j for j in self.j_values if 0 <= j <= upper)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_n": self.max_n,
            "r": list(self.r_values),
            "j": None if self.j_values is None else list(self.j_values),
            "order": self.order,
        }


@dataclass
class Witness:
    n: int
    lhs: int
    rhs: int
    r: Optional[int] = None
    j: Optional[int] = None
    m: Optional[int] = None
    partitions_lhs: List[str] = field(default_factory=list)
    partitions_rhs: List[str] = field(default_factory=list)

    def sort_key(self) -> Tuple[int, int, int, int]:
        return (self.n, self.r or 0, self.j or 0, self.m or 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "r": self.r,
            "j": self.j,
            "m": self.m,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "partitions_lhs": list(self.partitions_lhs),
            "partitions_rhs": list(self.partitions_rhs),
        }


@dataclass
class IdentityReport:
    identity_id: str
    params: VerifyParams
    status: str
    witness: Optional[Witness] = None
    details: Dict[str, Any] = field(default_factory=dict)
    duration_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        out = {
            "identity_id": self.identity_id,
            "params": self.params.to_dict(),
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }
        if self.details:
            out["details"] = self.details
        out["duration_ms"] = round(self.duration_ms, 3) if timing and self.duration_ms is not None else None
        return out


def sample(n: int, predicate: Callable[[Partition], bool], limit: int = WITNESS_LIMIT) -> List[str]:
    """First ``limit`` partitions of n (enumeration order) satisfying ``predicate``."""
    out = []
    for p in population(n):
        if predicate(p):
            out.append(str(p))
            if len(out) >= limit:
                break
    return out


class BaseIdentityCheck(ABC):
    """
    Abstract base class for registered identity checks.

    Subclasses compare two or more independent routes and call ``mismatch``
    for every disagreement they find; the report keeps the smallest witness
    in (n, r, j, m) order.
    """

    identity_id: str = ""
    description: str = ""
    # bounded by the max_n ceiling when True
    exhaustive: bool = True

    def __init__(self, params: VerifyParams):
        self.params = params
        self.witness: Optional[Witness] = None
        self.details: Dict[str, Any] = {}

    @abstractmethod
    def check(self) -> None:
        """
        Run every comparison of the identity at ``self.params``.

        Mismatches are reported through ``mismatch``; nothing is returned.
        """
        pass

    def mismatch(
        self,
        n: int,
        lhs: int,
        rhs: int,
        r: Optional[int] = None,
        j: Optional[int] = None,
        m: Optional[int] = None,
        lhs_side: Optional[Callable[[Partition], bool]] = None,
        rhs_side: Optional[Callable[[Partition], bool]] = None,
    ):
        witness = Witness(n=n, lhs=int(lhs), rhs=int(rhs), r=r, j=j, m=m)
        if self.witness is not None and self.witness.sort_key() <= witness.sort_key():
            return
        if lhs_side is not None:
            witness.partitions_lhs = sample(n, lhs_side)
        if rhs_side is not None:
            witness.partitions_rhs = sample(n, rhs_side)
        self.witness = witness

    def compare_series(self, left: Iterable[int], right: Iterable[int], **coords):
        """Record the first coefficient where two coefficient lists differ."""
        for n, (a, b) in enumerate(zip(left, right)):
            if a != b:
                self.mismatch(n, a, b, **coords)
                return False
        return True

    def run(self) -> IdentityReport:
        started = time.perf_counter()
        try:
            self.check()
        except Exception as e:
            logger.error(f"Identity {self.identity_id} raised: {e}", exc_info=True)
            raise IdentityCheckError(self.identity_id, e) from e
        status = "pass" if self.witness is None else "fail"
        elapsed = (time.perf_counter() - started) * 1000.0
        logger.info(f"{self.identity_id}: {status} in {elapsed:.1f} ms")
        return IdentityReport(
            identity_id=self.identity_id,
            params=self.params,
            status=status,
            witness=self.witness,
            details=self.details,
            duration_ms=elapsed,
        )
