"""
Application wiring for the mexlab commands.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

import census
import enumeration
import qseries
from base_identity import IdentityReport, ResourceCeilingError, VerifyParams
from config import MexLabConfig
from partition import (
    Partition,
    basic_statistics,
    chain_maex,
    chain_mex,
    conjugate,
    is_gap_free,
    maex,
    multiples_of,
    repeating_part_extrema,
)
from storage import StorageManager
from verify import run_suite, verify_identity

logger = logging.getLogger(__name__)

SEQUENCES = ("p", "sigma-rc-mex", "d2", "p-colored", "q-count")
GF_BUILDERS = (
    "partition",
    "euler-product",
    "distinct",
    "sigma-mex",
    "sigma-rc-mex",
    "corollary-term",
    "largest-repeating",
    "interm1-derivative",
    "two-color",
    "alpha",
    "multiples",
    "interm1",
)
TABLES = ("three-way", "refine", "franklin", "chain-maex", "alpha")


class UsageError(ValueError):
    """Raised for unknown names and parameter combinations the commands reject."""


class MexLabApp:
    def __init__(self, cfg: MexLabConfig, allow_large: bool = False):
        self.cfg = cfg
        self.allow_large = allow_large
        self.storage = StorageManager(cfg)
        census.set_cache_limit(cfg.cache_n)

    def _check_scan(self, n: int):
        if n < 0:
            raise UsageError(f"n must be nonnegative, got {n}")
        if n > self.cfg.max_n and not self.allow_large:
            raise ResourceCeilingError(f"n={n} exceeds the scan ceiling {self.cfg.max_n} (MEXLAB_MAX_N)")

    def _check_order(self, order: int):
        if order < 0:
            raise UsageError(f"order must be nonnegative, got {order}")
        if order > self.cfg.max_order and not self.allow_large:
            raise ResourceCeilingError(f"order={order} exceeds the series ceiling {self.cfg.max_order}")

    # --------------------------
    def stats(self, p: Partition, r: Optional[int] = None, t: Optional[int] = None) -> Dict[str, Any]:
        basic = basic_statistics(p)
        r_values = [r] if r is not None else list(range(1, basic.largest_part + 2))
        out: Dict[str, Any] = {
            "partition": str(p),
            "weight": p.weight,
            "largest_part": basic.largest_part,
            "smallest_part": basic.smallest_part,
            "num_parts": basic.num_parts,
            "mex": chain_mex(p, 1),
            "chain_mex": {f"r={k}": chain_mex(p, k) for k in r_values},
            "maex": maex(p),
        }
        if t is not None:
            out["chain_maex"] = {f"t={t}": chain_maex(p, t)}
        out["conjugate"] = str(conjugate(p))
        extrema = {k: repeating_part_extrema(p, k) for k in r_values}
        out["largest_repeating"] = {f"r={k}": e.largest_r_repeating for k, e in extrema.items()}
        out["smallest_repeating"] = {f"r={k}": e.smallest_r_repeating for k, e in extrema.items()}
        out["multiples"] = {f"r={k}": multiples_of(p, k) for k in r_values}
        out["gap_free"] = is_gap_free(p)
        out["frequencies"] = {str(v): m for v, m in p.pairs}
        return out

    def sequence(
        self,
        name: str,
        max_n: int,
        r: int = 1,
        m: int = 3,
        j: int = 1,
        s: int = 2,
        oracle: bool = False,
    ) -> List[int]:
        """a(0..max_n); the series route unless ``oracle`` asks for enumeration."""
        if name not in SEQUENCES:
            raise UsageError(f"Unknown sequence {name!r}; expected one of {', '.join(SEQUENCES)}")
        if oracle:
            self._check_scan(max_n)
        else:
            self._check_order(max_n)
        if name == "p":
            if oracle:
                return [enumeration.count_partitions(n) for n in range(max_n + 1)]
            return list(qseries.partition_gf(max_n))
        if name == "sigma-rc-mex":
            if oracle:
                return [census.sigma_chain_mex(n, r) for n in range(max_n + 1)]
            return list(qseries.gf_sigma_rc_mex_rhs(r, max_n))
        if name == "d2":
            if oracle:
                return [enumeration.count_distinct_two_colored(n) for n in range(max_n + 1)]
            return list(qseries.gf_sigma_mex(max_n))
        if name == "p-colored":
            if m < 2 or not 1 <= j < m:
                raise UsageError(f"p-colored needs m >= 2 and 1 <= j < m, got m={m}, j={j}")
            if oracle:
                spec = enumeration.two_color_spec(m, j)
                return [enumeration.count_colored(n, spec) for n in range(max_n + 1)]
            return list(qseries.gf_corollary_term(m - 1, j, max_n))
        if oracle:
            return [census.q_bivariate_census(n, s, j).column_total("count") for n in range(max_n + 1)]
        return list(qseries.gf_largest_repeating(j, s, max_n))

    def gf(
        self, name: str, order: int, r: int = 1, m: int = 1, j: int = 0
    ) -> Union[qseries.TruncatedSeries, qseries.BivariateSeries]:
        if name not in GF_BUILDERS:
            raise UsageError(f"Unknown generating function {name!r}; expected one of {', '.join(GF_BUILDERS)}")
        self._check_order(order)
        builders = {
            "partition": lambda: qseries.partition_gf(order),
            "euler-product": lambda: qseries.euler_product(order),
            "distinct": lambda: qseries.distinct_parts_gf(order),
            "sigma-mex": lambda: qseries.gf_sigma_mex(order),
            "sigma-rc-mex": lambda: qseries.gf_sigma_rc_mex_rhs(r, order),
            "corollary-term": lambda: qseries.gf_corollary_term(r, m, order),
            "largest-repeating": lambda: qseries.gf_largest_repeating(j, r, order),
            "interm1-derivative": lambda: qseries.gf_interm1_derivative_closed(j, r, order),
            "two-color": lambda: qseries.two_color_product(r, m, order),
            "alpha": lambda: qseries.gf_alpha_bivariate(order),
            "multiples": lambda: qseries.gf_multiples_bivariate(r, order),
            "interm1": lambda: qseries.gf_interm1(j, r, order),
        }
        return builders[name]()

    def table(
        self,
        kind: str,
        n: int,
        r: Optional[int] = None,
        j: Optional[int] = None,
        list_partitions: bool = False,
        interpretation: str = "exists",
    ) -> census.CountTable:
        if kind not in TABLES:
            raise UsageError(f"Unknown table {kind!r}; expected one of {', '.join(TABLES)}")
        self._check_scan(n)
        workers = self.cfg.workers
        if kind == "three-way":
            return census.three_way_census(n, r or 2, listings=list_partitions, only_j=j, workers=workers)
        if kind == "refine":
            chain_side, repeating_side = census.refine_census(n, r or 1, workers=workers)
            return census.CountTable(
                "refine",
                n,
                chain_side.axes,
                ("chain_mex_side", "repeating_side"),
                np.concatenate([chain_side.cells, repeating_side.cells], axis=-1),
                chain_side.params,
            )
        if kind == "franklin":
            return census.franklin_glaisher_census(n, r or 2, workers=workers)
        if kind == "chain-maex":
            return census.chain_maex_census(n, r or 2, interpretation, workers=workers)
        return census.alpha_census(n, workers=workers)

    def verify(
        self, identity_ids: Optional[Sequence[str]], params: VerifyParams, workers: Optional[int] = None
    ) -> List[IdentityReport]:
        ceiling = {"max_n_ceiling": self.cfg.max_n, "max_order": self.cfg.max_order}
        if identity_ids is not None and len(identity_ids) == 1:
            return [verify_identity(identity_ids[0], params, **ceiling)]
        return run_suite(params, workers=workers or self.cfg.workers, identity_ids=identity_ids, **ceiling)

    def save(self, text: str, prefix: str, fmt) -> str:
        return self.storage.save_output(text, prefix, fmt)
