"""
Registered identity checks.

Every check compares independent routes: an exhaustive scan against a
series coefficient, or two scans related by a bijection. Series builders
and censuses are looked up through their modules at call time.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple, Type

import numpy as np

import census
import enumeration
import qseries
from base_identity import BaseIdentityCheck
from filters import MaxSuccessiveGapFilter
from partition import (
    Partition,
    chain_maex,
    chain_mex,
    conjugate,
    distinct_multiples,
    distinct_repeating,
    even_parts,
    is_gap_free,
    largest_repeating,
    max_frequency,
    mex,
    multiples_of,
    parts_greater_than,
    smallest_repeating,
)

logger = logging.getLogger(__name__)

Statistic = Callable[[Partition], int]

# illustration tables for n = 7, keyed by (r, j)
ILLUSTRATION_TABLES: Dict[Tuple[int, int], Dict[str, Tuple[str, ...]]] = {
    (2, 2): {
        "above_chain_mex": ("5+2", "4+3", "3+3+1"),
        "multiples_of_r": ("4+2+1", "2+2+1+1+1", "3+2+2"),
        "largest_r_repeating": ("3+2+2", "2+2+2+1", "2+2+1+1+1"),
    },
    (3, 1): {
        "above_chain_mex": ("7", "6+1", "5+2", "5+1+1", "4+1+1+1"),
        "multiples_of_r": ("6+1", "4+3", "3+2+2", "3+2+1+1", "3+1+1+1+1"),
        "largest_r_repeating": ("4+1+1+1", "3+1+1+1+1", "2+2+1+1+1", "2+1+1+1+1+1", "1+1+1+1+1+1+1"),
    },
}


def _equals(stat: Statistic, j: int) -> Callable[[Partition], bool]:
    return lambda p: stat(p) == j


def _three_way_stats(r: int) -> Dict[str, Statistic]:
    return {
        "multiples_of_r": lambda p: multiples_of(p, r),
        "largest_r_repeating": lambda p: largest_repeating(p, r),
        "above_chain_mex": lambda p: parts_greater_than(p, chain_mex(p, r - 1)),
    }


def _count(n: int) -> int:
    return sum(1 for _ in census.population(n))


class ColumnCheck(BaseIdentityCheck):
    """Helpers for per-j comparisons of census columns."""

    def compare_columns(
        self, table: census.CountTable, left: str, right: str, stats: Dict[str, Statistic], r: Optional[int] = None
    ) -> bool:
        n = table.n
        for j in self.params.j_range(n):
            a = table.cell(j, column=left)
            b = table.cell(j, column=right)
            if a != b:
                self.mismatch(
                    n, a, b, r=r, j=j,
                    lhs_side=_equals(stats[left], j),
                    rhs_side=_equals(stats[right], j),
                )
                return False
        return True


# --------------------------
class EulerCheck(BaseIdentityCheck):
    identity_id = "euler"
    description = "partitions into odd parts = partitions into distinct parts"

    def check(self):
        for n in range(self.params.max_n + 1):
            scalars = census.euler_census(n).scalars
            odd, distinct = scalars["odd_parts"], scalars["distinct_parts"]
            self.details["counts"] = {"n": n, "odd_parts": odd, "distinct_parts": distinct}
            if odd != distinct:
                self.mismatch(
                    n, odd, distinct,
                    lhs_side=lambda p: all(v % 2 for v, _ in p.pairs),
                    rhs_side=lambda p: max_frequency(p) <= 1,
                )
                return


class GlaisherCheck(BaseIdentityCheck):
    identity_id = "glaisher"
    description = "r-regular partitions = partitions with every frequency below r"

    def check(self):
        rs = self.params.r_range(2)
        if not rs:
            return
        for n in range(self.params.max_n + 1):
            counts = census.glaisher_census(n, rs)
            for r in rs:
                regular, below = counts[r]
                if regular != below:
                    self.mismatch(
                        n, regular, below, r=r,
                        lhs_side=lambda p, r=r: all(v % r for v, _ in p.pairs),
                        rhs_side=lambda p, r=r: max_frequency(p) < r,
                    )
                    return


class FranklinCheck(ColumnCheck):
    identity_id = "franklin"
    description = "j different parts divisible by r = j different parts repeated at least r times"

    def check(self):
        for n in range(self.params.max_n + 1):
            for r in self.params.r_range(2):
                table = census.franklin_glaisher_census(n, r)
                stats = {
                    "distinct_multiples": lambda p, r=r: distinct_multiples(p, r),
                    "distinct_repeating": lambda p, r=r: distinct_repeating(p, r),
                }
                self.compare_columns(table, "distinct_multiples", "distinct_repeating", stats, r=r)


class PropAlphaCheck(BaseIdentityCheck):
    identity_id = "prop-alpha"
    description = "w^j q^n of 1/((q;q^2)(wq^2;q^2)) = j parts above mex = j even parts"

    def check(self):
        series = qseries.gf_alpha_bivariate(self.params.max_n)
        above = lambda p: parts_greater_than(p, mex(p))
        for n in range(self.params.max_n + 1):
            table = census.alpha_census(n)
            for j in self.params.j_range(n):
                coeff = series.coefficient(n, j)
                scan_alpha = table.cell(j, column="above_mex")
                scan_even = table.cell(j, column="even_parts")
                if coeff != scan_alpha:
                    self.mismatch(n, coeff, scan_alpha, j=j, rhs_side=_equals(above, j))
                    break
                if coeff != scan_even:
                    self.mismatch(n, coeff, scan_even, j=j, rhs_side=_equals(even_parts, j))
                    break


class RemarkGapFreeCheck(BaseIdentityCheck):
    identity_id = "remark-gap-free"
    description = "no part above the mex exactly when gap-free; counted by odd-part partitions"

    def check(self):
        zero_above = lambda p: parts_greater_than(p, mex(p)) == 0
        for n in range(self.params.max_n + 1):
            scalars = census.euler_census(n).scalars
            differs = any(is_gap_free(p) != zero_above(p) for p in census.population(n))
            if differs or scalars["gap_free"] != scalars["zero_above_mex"]:
                self.mismatch(
                    n, scalars["gap_free"], scalars["zero_above_mex"],
                    lhs_side=lambda p: is_gap_free(p) and not zero_above(p),
                    rhs_side=lambda p: zero_above(p) and not is_gap_free(p),
                )
                return
            if scalars["gap_free"] != scalars["odd_parts"]:
                self.mismatch(
                    n, scalars["gap_free"], scalars["odd_parts"], j=0,
                    lhs_side=is_gap_free,
                    rhs_side=lambda p: all(v % 2 for v, _ in p.pairs),
                )
                return


class PropRevenEulerCheck(ColumnCheck):
    identity_id = "prop-reven-euler"
    description = "j even parts = largest repeating part j = j parts above mex"

    def check(self):
        stats = _three_way_stats(2)
        for n in range(self.params.max_n + 1):
            table = census.three_way_census(n, 2)
            if not self.compare_columns(table, "multiples_of_r", "largest_r_repeating", stats, r=2):
                return
            if not self.compare_columns(table, "multiples_of_r", "above_chain_mex", stats, r=2):
                return
            distinct = census.euler_census(n).scalars["distinct_parts"]
            if table.cell(0, column="largest_r_repeating") != distinct:
                self.mismatch(
                    n, table.cell(0, column="largest_r_repeating"), distinct, r=2, j=0,
                    lhs_side=_equals(stats["largest_r_repeating"], 0),
                    rhs_side=lambda p: max_frequency(p) <= 1,
                )
                return


class PropLargestRepeatingCheck(ColumnCheck):
    identity_id = "prop-largest-repeating"
    description = "j parts divisible by r = largest r-repeating part j"

    def check(self):
        for n in range(self.params.max_n + 1):
            for r in self.params.r_range(1):
                table = census.multiples_census(n, r)
                self.compare_columns(table, "multiples_of_r", "largest_r_repeating", _three_way_stats(r), r=r)


class ThreeWayCheck(ColumnCheck):
    identity_id = "thm-3way"
    description = "j multiples of r = largest r-repeating part j = j parts above the (r-1)-chain mex"

    def check(self):
        for n in range(self.params.max_n + 1):
            for r in self.params.r_range(2):
                table = census.three_way_census(n, r)
                stats = _three_way_stats(r)
                if self.compare_columns(table, "multiples_of_r", "largest_r_repeating", stats, r=r):
                    self.compare_columns(table, "multiples_of_r", "above_chain_mex", stats, r=r)


class IllustrationTablesCheck(BaseIdentityCheck):
    identity_id = "tables-n7"
    description = "the two n=7 illustration tables, partition by partition"
    exhaustive = False

    def check(self):
        n = 7
        counts = {}
        for (r, j), expected in ILLUSTRATION_TABLES.items():
            table = census.three_way_census(n, r, listings=True, only_j=j)
            counts[f"r={r},j={j}"] = [table.cell(j, column=c) for c in table.columns]
            for column, wanted in expected.items():
                got = sorted(str(p) for p in table.listing((j,), column))
                if got != sorted(wanted):
                    stat = _three_way_stats(r)[column]
                    self.mismatch(n, len(wanted), len(got), r=r, j=j, rhs_side=_equals(stat, j))
        self.details["counts"] = counts


class RefineLemmaCheck(BaseIdentityCheck):
    identity_id = "lemma-refine"
    description = "j parts above r-chain mex k = largest (r+1)-repeating part j with k-1 parts above it"

    def check(self):
        wanted_j = set(self.params.j_range(self.params.max_n))
        for n in range(self.params.max_n + 1):
            for r in self.params.r_range(1):
                chain_side, repeating_side = census.refine_census(n, r)
                for j, k, _ in (tuple(int(i) for i in key) for key in
                                np.argwhere(chain_side.cells != repeating_side.cells)):
                    if j not in wanted_j:
                        continue
                    self.mismatch(
                        n, chain_side.cell(j, k), repeating_side.cell(j, k), r=r, j=j, m=k,
                        lhs_side=lambda p, r=r, j=j, k=k: chain_mex(p, r) == k and parts_greater_than(p, k) == j,
                        rhs_side=lambda p, r=r, j=j, k=k: (
                            largest_repeating(p, r + 1) == j and parts_greater_than(p, j) == k - 1
                        ),
                    )
                    break


class SigmaRcMexGfCheck(BaseIdentityCheck):
    identity_id = "gfn-sigma-rc-mex"
    description = "coefficients of the sigma r-chain mex generating function = brute-force sums"

    def check(self):
        max_n = self.params.max_n
        rs = self.params.r_range(1)
        series = {r: qseries.gf_sigma_rc_mex_rhs(r, max_n) for r in rs}
        for n in range(max_n + 1 if rs else 0):
            brute = census.sigma_chain_mex_many(n, rs)
            bad = [r for r in rs if series[r][n] != brute[r]]
            for r in bad:
                self.mismatch(n, series[r][n], brute[r], r=r)
            if bad:
                break
        if 1 in self.params.r_values:
            order = self.params.order
            self.compare_series(qseries.gf_sigma_rc_mex_rhs(1, order), qseries.gf_sigma_mex(order), r=1)


class TwoColorCorollaryCheck(BaseIdentityCheck):
    identity_id = "cor-two-color"
    description = "sigma r-chain mex = -(r-1)p(n) + sum of two-coloured (r+1)-regular counts"

    def check(self):
        max_n = self.params.max_n
        rs = self.params.r_range(1)
        terms = {r: {m: qseries.gf_corollary_term(r, m, max_n) for m in range(1, r + 1)} for r in rs}
        failed = set()
        for n in range(max_n + 1):
            live = [r for r in rs if r not in failed]
            if not live:
                break
            brute = census.sigma_chain_mex_many(n, live)
            for r in live:
                colored = {m: enumeration.count_colored(n, enumeration.two_color_spec(r + 1, m)) for m in terms[r]}
                for m, count in colored.items():
                    if terms[r][m][n] != count:
                        self.mismatch(n, terms[r][m][n], count, r=r, m=m)
                combined = -(r - 1) * _count(n) + sum(colored.values())
                if brute[r] != combined:
                    self.mismatch(n, brute[r], combined, r=r)
                    failed.add(r)


class SigmaMexCheck(BaseIdentityCheck):
    identity_id = "sigma-mex-r1"
    description = "sigma mex(n) = D2(n) = coefficient of (-q;q)^2"

    def check(self):
        series = qseries.gf_sigma_mex(self.params.max_n)
        for n in range(self.params.max_n + 1):
            brute = census.sigma_chain_mex(n, 1)
            d2 = enumeration.count_distinct_two_colored(n)
            if brute != d2:
                self.mismatch(n, brute, d2, r=1)
                return
            if brute != series[n]:
                self.mismatch(n, brute, series[n], r=1)
                return


class QBinomialCheck(BaseIdentityCheck):
    identity_id = "qbinom-a0"
    description = "sum z^n/(q^d;q^d)_n = 1/(z;q^d) for z = q^zexp"
    exhaustive = False

    def check(self):
        for zexp in range(1, 4):
            for base in range(1, 4):
                left, right = qseries.q_binomial_sides(zexp, self.params.order, base)
                self.compare_series(left, right, j=zexp, m=base)


class ConjugationCheck(BaseIdentityCheck):
    identity_id = "conj-freq-form"
    description = "frequency-form conjugate = Young diagram transpose, an involution swapping largest part and length"

    @staticmethod
    def _transpose(p: Partition) -> Tuple[int, ...]:
        parts = p.parts
        return tuple(sum(1 for x in parts if x >= i) for i in range(1, p.largest_part + 1))

    def _agrees(self, p: Partition) -> bool:
        c = conjugate(p)
        return (
            c.parts == self._transpose(p)
            and conjugate(c) == p
            and c.largest_part == p.num_parts
            and c.weight == p.weight
        )

    def check(self):
        for n in range(self.params.max_n + 1):
            total = good = 0
            for p in census.population(n):
                total += 1
                good += self._agrees(p)
            if good != total:
                self.mismatch(n, total, good, lhs_side=lambda p: not self._agrees(p))
                return


class MultiplesGfCheck(BaseIdentityCheck):
    identity_id = "eq-multiples-r"
    description = "w^j q^n of (q^r;q^r)/((q;q)(wq^r;q^r)) = partitions with j multiples of r"

    def check(self):
        max_n = self.params.max_n
        for r in self.params.r_range(1):
            series = qseries.gf_multiples_bivariate(r, max_n)
            for n in range(max_n + 1):
                table = census.multiples_census(n, r)
                for j in self.params.j_range(n):
                    coeff = series.coefficient(n, j)
                    scan = table.cell(j, column="multiples_of_r")
                    if coeff != scan:
                        self.mismatch(n, coeff, scan, r=r, j=j,
                                      rhs_side=_equals(lambda p, r=r: multiples_of(p, r), j))
                        break


class FkSumCheck(BaseIdentityCheck):
    identity_id = "eq-fk-sum"
    description = "sum_k F_k q^(kj) = prod_{t>j}(1+q^t+...+q^(t(r-1))), with the conjugation behind it"

    CONJUGATION_LIMIT = 25
    J_LIMIT = 5

    def check(self):
        max_n = self.params.max_n
        j_values = self.params.j_range(min(self.J_LIMIT, max_n))
        for r in self.params.r_range(2):
            table = census.gap_bounded_table(max_n, r)
            for j in j_values:
                product = qseries.frequency_bounded_product(j, r, max_n)
                for n in range(max_n + 1):
                    fk = census.fk_sum_census(n, j, r, table)
                    if fk != product[n]:
                        self.mismatch(n, fk, product[n], r=r, j=j)
                        break
            self._check_conjugation(r, j_values)

    def _check_conjugation(self, r: int, j_values: Tuple[int, ...]):
        gaps = MaxSuccessiveGapFilter(r - 1)
        for n in range(min(self.params.max_n, self.CONJUGATION_LIMIT) + 1):
            for j in j_values:
                top_heavy = lambda p, j=j: p.frequency(p.largest_part) > j and gaps.accepts(p)
                bounded = lambda p, j=j: p.smallest_part > j and max_frequency(p) < r
                left = {conjugate(p) for p in census.population(n) if top_heavy(p)}
                right = {p for p in census.population(n) if bounded(p)}
                if left != right:
                    self.mismatch(n, len(left), len(right), r=r, j=j, lhs_side=top_heavy, rhs_side=bounded)
                    break


class Interm1Check(BaseIdentityCheck):
    identity_id = "eq-interm1"
    description = "w^m q^n of the bivariate largest-repeating series = Q_(r+1)^j(n, m), and its w-derivative"

    def check(self):
        max_n = self.params.max_n
        for r in self.params.r_range(1):
            step = r + 1
            grids = [census.q_bivariate_grid(n, step) for n in range(max_n + 1)]
            for j in self.params.j_range(max_n):
                if j * step > max_n:
                    for n, grid in enumerate(grids):
                        total = int(grid.cells[j].sum()) if j <= n else 0
                        if total:
                            self.mismatch(n, 0, total, r=r, j=j)
                            break
                    continue
                series = qseries.gf_interm1(j, r, max_n)
                derivative = qseries.w_derivative_at_1(series)
                for n, grid in enumerate(grids):
                    if self._compare_row(series, grid, n, r, j):
                        break
                    weighted = sum(m * grid.cell(j, m) for m in range(n + 1))
                    if derivative[n] != weighted:
                        self.mismatch(n, derivative[n], weighted, r=r, j=j)
                        break

    def _compare_row(self, series, grid: census.CountTable, n: int, r: int, j: int) -> bool:
        for m in range(n + 1):
            coeff = series.coefficient(n, m)
            scan = grid.cell(j, m)
            if coeff != scan:
                self.mismatch(
                    n, coeff, scan, r=r, j=j, m=m,
                    rhs_side=lambda p: largest_repeating(p, r + 1) == j and parts_greater_than(p, j) == m,
                )
                return True
        return False


class SigmaChainGfCheck(BaseIdentityCheck):
    identity_id = "eq-sigma-chain"
    description = "w-derivatives summed over j give the sigma r-chain mex series minus 1/(q;q)"

    def check(self):
        order = self.params.order
        max_n = self.params.max_n
        small = min(order, max_n)
        for r in self.params.r_range(1):
            step = r + 1
            for j in range(small // step + 1):
                derived = qseries.w_derivative_at_1(qseries.gf_interm1(j, r, small))
                closed = qseries.gf_interm1_derivative_closed(j, r, small)
                if not self.compare_series(derived, closed, r=r, j=j):
                    break
            total = qseries.TruncatedSeries.zero(order)
            for j in range(order // step + 1):
                total = total + qseries.gf_interm1_derivative_closed(j, r, order)
            stretch = qseries.gf_final_stretch(r, order)
            pre_final = qseries.gf_pre_final(r, order)
            self.compare_series(total, stretch, r=r)
            self.compare_series(stretch, pre_final, r=r)
            self.compare_series(qseries.partition_gf(order) + pre_final, qseries.gf_sigma_rc_mex_rhs(r, order), r=r)
            for n in range(max_n + 1):
                grid = census.q_bivariate_grid(n, step)
                weighted = sum(m * int(grid.cells[:, m].sum()) for m in range(n + 1))
                excess = census.sigma_chain_mex(n, r) - _count(n)
                if weighted != excess:
                    self.mismatch(n, weighted, excess, r=r)
                    break


class InnerCollapseCheck(BaseIdentityCheck):
    identity_id = "eq-inner-collapse"
    description = "sum_{j<m} q^(j(r+1))/(q^(r+1);q^(r+1))_j = 1/(q^(r+1);q^(r+1))_(m-1)"
    exhaustive = False

    M_LIMIT = 10

    def check(self):
        for r in self.params.r_range(1):
            for m in range(1, self.M_LIMIT + 1):
                left, right = qseries.inner_sum_collapse_sides(m, r, self.params.order)
                self.compare_series(left, right, r=r, m=m)


class TwoColorProductCheck(BaseIdentityCheck):
    identity_id = "eq-inter"
    description = "(q^(r+1);q^(r+1))/((q;q)(q^m;q^(r+1))) = two-coloured residue-m product"
    exhaustive = False

    def check(self):
        order = self.params.order
        for r in self.params.r_range(1):
            for m in range(1, r + 1):
                self.compare_series(
                    qseries.gf_corollary_term(r, m, order), qseries.two_color_product(r, m, order), r=r, m=m
                )


class ChainMaexCheck(BaseIdentityCheck):
    identity_id = "thm-chain-maex"
    description = "j parts above the (r-1)-chain maex = smallest r-repeating part j"

    def _first_difference(self, r: int, interpretation: str) -> Optional[Tuple[int, int, int, int]]:
        for n in range(self.params.max_n + 1):
            table = census.chain_maex_census(n, r, interpretation)
            for j in self.params.j_range(n):
                if j < 1:
                    continue
                a = table.cell(j, column="above_chain_maex")
                b = table.cell(j, column="smallest_r_repeating")
                if a != b:
                    return n, j, a, b
        return None

    def check(self):
        outcomes = {}
        for r in self.params.r_range(2):
            interpretations = ("exists",) if r == 2 else census.CHAIN_MAEX_INTERPRETATIONS
            results = {name: self._first_difference(r, name) for name in interpretations}
            outcomes[f"r={r}"] = {name: "pass" if diff is None else "fail" for name, diff in results.items()}
            if any(diff is None for diff in results.values()):
                continue
            n, j, a, b = results["exists"]
            t = r - 1
            self.mismatch(
                n, a, b, r=r, j=j,
                lhs_side=lambda p: chain_maex(p, t) is not None and parts_greater_than(p, chain_maex(p, t)) == j,
                rhs_side=lambda p: smallest_repeating(p, r) == j,
            )
        self.details["interpretations"] = outcomes


class SigmaMexParityCheck(BaseIdentityCheck):
    identity_id = "parity-sigma-mex"
    description = "sigma mex(n) is odd exactly when n = j(3j-1) or j(3j+1)"
    exhaustive = False

    def check(self):
        series = qseries.gf_sigma_mex(self.params.order)
        for n, coeff in enumerate(series):
            expected = int(qseries.is_twice_pentagonal(n))
            if coeff % 2 != expected:
                self.mismatch(n, coeff % 2, expected)
                return


class GfVsCensusCheck(BaseIdentityCheck):
    identity_id = "gf-vs-census-suite"
    description = "every builder with a counting counterpart against exhaustive counts"

    def check(self):
        max_n = self.params.max_n
        order = self.params.order
        routes: List[str] = []

        routes.append("partition-gf-vs-product")
        self.compare_series(qseries.partition_gf(order), qseries.pochhammer_inv_inf(1, 1, order))

        routes.append("euler-product-support")
        pentagonals = set(qseries.generalized_pentagonals(order))
        for n, coeff in enumerate(qseries.euler_product(order)):
            if (coeff != 0) != (n in pentagonals) or abs(coeff) > 1:
                self.mismatch(n, coeff, int(n in pentagonals))
                break

        routes.append("sigma-mex-vs-odd-reciprocal")
        odd_inverse = qseries.reciprocal(qseries.pochhammer_inf(1, 2, order))
        self.compare_series(qseries.gf_sigma_mex(order), odd_inverse * odd_inverse)

        counted = {
            "partition-gf": (qseries.partition_gf(max_n), None),
            "distinct-parts-gf": (qseries.distinct_parts_gf(max_n), enumeration.ConstraintSpec(distinct=True)),
            "parts-at-least-2": (qseries.pochhammer_inv_inf(2, 1, max_n), enumeration.ConstraintSpec(min_part=2)),
        }
        for r in self.params.r_range(1):
            counted[f"regular-{r + 1}"] = (
                qseries.regular_partition_gf(r + 1, max_n), enumeration.ConstraintSpec.regular(r + 1)
            )
            counted[f"frequency-below-{r + 1}"] = (
                qseries.frequency_bounded_product(0, r + 1, max_n), enumeration.ConstraintSpec(max_frequency=r)
            )
        for name, (series, spec) in counted.items():
            routes.append(name)
            for n in range(max_n + 1):
                count = _count(n) if spec is None else enumeration.count_partitions(n, spec)
                if series[n] != count:
                    self.mismatch(n, series[n], count)
                    break

        routes.append("largest-repeating-gf")
        for r in self.params.r_range(1):
            by_j = {j: qseries.gf_largest_repeating(j, r, max_n) for j in self.params.j_range(max_n)}
            for n in range(max_n + 1):
                table = census.multiples_census(n, r)
                for j in self.params.j_range(n):
                    coeff = by_j[j][n]
                    scan = table.cell(j, column="largest_r_repeating")
                    if coeff != scan:
                        self.mismatch(n, coeff, scan, r=r, j=j,
                                      rhs_side=_equals(lambda p, r=r: largest_repeating(p, r), j))
                        break
        self.details["routes"] = routes


ALL_CHECKS: List[Type[BaseIdentityCheck]] = [
    EulerCheck,
    GlaisherCheck,
    FranklinCheck,
    PropAlphaCheck,
    RemarkGapFreeCheck,
    PropRevenEulerCheck,
    PropLargestRepeatingCheck,
    ThreeWayCheck,
    IllustrationTablesCheck,
    RefineLemmaCheck,
    SigmaRcMexGfCheck,
    TwoColorCorollaryCheck,
    SigmaMexCheck,
    QBinomialCheck,
    ConjugationCheck,
    MultiplesGfCheck,
    FkSumCheck,
    Interm1Check,
    SigmaChainGfCheck,
    InnerCollapseCheck,
    TwoColorProductCheck,
    ChainMaexCheck,
    SigmaMexParityCheck,
    GfVsCensusCheck,
]
