"""
Identity registry, single-identity runs and threaded suite runs.
"""

import collections
import logging
import threading
from typing import Deque, Dict, List, Optional, Sequence, Tuple, Type

from base_identity import (
    BaseIdentityCheck,
    IdentityCheckError,
    IdentityReport,
    ResourceCeilingError,
    UnknownIdentityError,
    VerifyParams,
)
from identities import ALL_CHECKS

logger = logging.getLogger(__name__)

REGISTRY: Dict[str, Type[BaseIdentityCheck]] = {cls.identity_id: cls for cls in ALL_CHECKS}


def registry() -> List[Tuple[str, str]]:
    """(identity_id, description) in registry order."""
    return [(cls.identity_id, cls.description) for cls in ALL_CHECKS]


def lookup(identity_id: str) -> Type[BaseIdentityCheck]:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def check_ceiling(cls: Type[BaseIdentityCheck], params: VerifyParams, max_n_ceiling: int, max_order: int):
    if params.allow_large:
        return
    if cls.exhaustive and params.max_n > max_n_ceiling:
        raise ResourceCeilingError(
            f"{cls.identity_id}: max_n={params.max_n} exceeds the scan ceiling {max_n_ceiling}"
        )
    if params.order > max_order:
        raise ResourceCeilingError(
            f"{cls.identity_id}: order={params.order} exceeds the series ceiling {max_order}"
        )


def verify_identity(
    identity_id: str, params: VerifyParams, max_n_ceiling: int = 90, max_order: int = 5000
) -> IdentityReport:
    cls = lookup(identity_id)
    check_ceiling(cls, params, max_n_ceiling, max_order)
    logger.debug(f"Verifying {identity_id} with {params}")
    return cls(params).run()


class SuiteWorker(threading.Thread):
    """Pulls identity ids from the shared queue until it is empty."""

    def __init__(self, pending: Deque[str], lock: threading.Lock, params: VerifyParams,
                 results: Dict[str, IdentityReport]):
        super().__init__(daemon=True)
        self.pending = pending
        self.lock = lock
        self.params = params
        self.results = results
        self.error: Optional[IdentityCheckError] = None

    def _next(self) -> Optional[str]:
        with self.lock:
            if not self.pending:
                return None
            return self.pending.popleft()

    def run(self):
        while True:
            identity_id = self._next()
            if identity_id is None:
                break
            try:
                report = REGISTRY[identity_id](self.params).run()
            except IdentityCheckError as e:
                self.error = e
                break
            with self.lock:
                self.results[identity_id] = report


def run_suite(
    params: VerifyParams,
    workers: int = 1,
    identity_ids: Optional[Sequence[str]] = None,
    max_n_ceiling: int = 90,
    max_order: int = 5000,
) -> List[IdentityReport]:
    """Run the registry (or a subset) and return reports in registry order."""
    ids = [cls.identity_id for cls in ALL_CHECKS] if identity_ids is None else list(identity_ids)
    for identity_id in ids:
        check_ceiling(lookup(identity_id), params, max_n_ceiling, max_order)

    results: Dict[str, IdentityReport] = {}
    pending = collections.deque(ids)
    lock = threading.Lock()
    pool = [SuiteWorker(pending, lock, params, results) for _ in range(max(1, min(workers, len(ids))))]
    logger.info(f"Running {len(ids)} identities on {len(pool)} worker(s)")
    for worker in pool:
        worker.start()
    for worker in pool:
        worker.join()
    errors = [worker.error for worker in pool if worker.error is not None]
    if errors:
        # lowest registry position is raised
        raise min(errors, key=lambda e: ids.index(e.identity_id))

    reports = [results[identity_id] for identity_id in ids]
    failed = [r.identity_id for r in reports if not r.passed]
    if failed:
        logger.warning(f"Suite failures: {', '.join(failed)}")
    return reports
