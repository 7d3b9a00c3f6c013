"""
Exact truncated q-series.

TruncatedSeries holds signed Python integers for the coefficients of
q^0..q^N. BivariateSeries holds, for each q-degree d, a polynomial in the
tracking variable w of degree at most d. Every infinite product is expanded
with all factors whose q-exponent is at most N; a factor (1 - w^a q^b) takes
part iff b <= N.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

KRONECKER_THRESHOLD = 48


class SeriesError(ArithmeticError):
    """Raised for non-unit reciprocals, negative orders and bad builder parameters."""


def _check_order(order: int):
    if not isinstance(order, int) or order < 0:
        raise SeriesError(f"Truncation order must be a nonnegative integer, got {order!r}")


def _check_positive(name: str, value: int):
    if not isinstance(value, int) or value < 1:
        raise SeriesError(f"{name} must be a positive integer, got {value!r}")


# --------------------------
# in-place kernels on plain coefficient lists

def _mul_binomial(coeffs: List[int], coef: int, exp: int):
    """coeffs *= (1 + coef*q^exp)"""
    for i in range(len(coeffs) - 1, exp - 1, -1):
        prev = coeffs[i - exp]
        if prev:
            coeffs[i] += coef * prev


def _div_one_minus(coeffs: List[int], exp: int):
    """coeffs /= (1 - q^exp)"""
    for i in range(exp, len(coeffs)):
        prev = coeffs[i - exp]
        if prev:
            coeffs[i] += prev


def _schoolbook(a: Sequence[int], b: Sequence[int], order: int) -> List[int]:
    out = [0] * (order + 1)
    for i in range(order + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _pack(coeffs: Sequence[int], slot: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(slot, "little") for c in coeffs), "little")


def _unpack(value: int, slot: int, count: int, length: int) -> List[int]:
    raw = value.to_bytes(slot * length, "little")
    return [int.from_bytes(raw[i * slot:(i + 1) * slot], "little") for i in range(count)]


def _kronecker(a: Sequence[int], b: Sequence[int], order: int) -> List[int]:
    # evaluate both polynomials at 2^(8*slot); signs are split so every
    # packed digit is nonnegative and no carries cross slots
    a = list(a[:order + 1])
    b = list(b[:order + 1])
    bound = max(map(abs, a)) * max(map(abs, b)) * (order + 1)
    if bound == 0:
        return [0] * (order + 1)
    slot = (bound.bit_length() + 8) // 8
    a_pos = _pack([c if c > 0 else 0 for c in a], slot)
    a_neg = _pack([-c if c < 0 else 0 for c in a], slot)
    b_pos = _pack([c if c > 0 else 0 for c in b], slot)
    b_neg = _pack([-c if c < 0 else 0 for c in b], slot)
    length = len(a) + len(b)
    plus = _unpack(a_pos * b_pos + a_neg * b_neg, slot, order + 1, length)
    minus = _unpack(a_pos * b_neg + a_neg * b_pos, slot, order + 1, length)
    return [x - y for x, y in zip(plus, minus)]


class TruncatedSeries:
    """Formal power series in q known exactly through q^order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        values = [int(c) for c in coeffs]
        if order is None:
            if not values:
                raise SeriesError("Empty coefficient list needs an explicit order")
            order = len(values) - 1
        _check_order(order)
        if len(values) > order + 1:
            values = values[:order + 1]
        else:
            values.extend([0] * (order + 1 - len(values)))
        self._coeffs = values

    @classmethod
    def _wrap(cls, coeffs: List[int]) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        _check_order(order)
        return cls._wrap([1] + [0] * order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        _check_order(order)
        return cls._wrap([0] * (order + 1))

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        series = cls.zero(order)
        if 0 <= exp <= order:
            series._coeffs[exp] = coeff
        return series

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(self._coeffs)

    def __getitem__(self, index: int) -> int:
        if not 0 <= index <= self.order:
            raise SeriesError(f"Coefficient {index} is outside the truncation order {self.order}")
        return self._coeffs[index]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    # --------------------------
    def _coerce(self, other) -> Optional["TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.monomial(0, self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries._wrap([self._coeffs[i] + other._coeffs[i] for i in range(order + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._wrap([other * c for c in self._coeffs])
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k, keeping the order."""
        if k < 0:
            raise SeriesError("Negative shifts need Laurent support")
        if k > self.order:
            return TruncatedSeries.zero(self.order)
        return TruncatedSeries._wrap([0] * k + self._coeffs[:self.order + 1 - k])

    def dilate(self, d: int) -> "TruncatedSeries":
        """Substitute q -> q^d, keeping the order."""
        _check_positive("d", d)
        out = [0] * (self.order + 1)
        for i in range(0, self.order // d + 1):
            out[i * d] = self._coeffs[i]
        return TruncatedSeries._wrap(out)

    def div_one_minus(self, exp: int) -> "TruncatedSeries":
        """Divide by (1 - q^exp)."""
        _check_positive("exp", exp)
        out = list(self._coeffs)
        _div_one_minus(out, exp)
        return TruncatedSeries._wrap(out)

    def reciprocal(self) -> "TruncatedSeries":
        return reciprocal(self)


def multiply(a: TruncatedSeries, b: TruncatedSeries, method: str = "auto") -> TruncatedSeries:
    """
    Product through min(a.order, b.order).

    ``schoolbook`` is the O(N^2) baseline; ``kronecker`` packs both operands
    into big integers and lets CPython's multiplication do the work.
    """
    order = min(a.order, b.order)
    if method == "auto":
        method = "kronecker" if order >= KRONECKER_THRESHOLD else "schoolbook"
    if method == "schoolbook":
        return TruncatedSeries._wrap(_schoolbook(a._coeffs, b._coeffs, order))
    if method == "kronecker":
        return TruncatedSeries._wrap(_kronecker(a._coeffs, b._coeffs, order))
    raise SeriesError(f"Unknown multiplication method {method!r}")


def arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return multiply(a, b)
    raise SeriesError(f"Unknown series operation {op!r}")


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series whose constant term is a unit (+1 or -1)."""
    coeffs = a._coeffs
    head = coeffs[0]
    if head not in (1, -1):
        raise SeriesError(f"Reciprocal needs constant term +1 or -1, got {head}")
    order = a.order
    support = [(k, c) for k, c in enumerate(coeffs) if k and c]
    out = [0] * (order + 1)
    out[0] = head
    for n in range(1, order + 1):
        acc = 0
        for k, c in support:
            if k > n:
                break
            acc += c * out[n - k]
        out[n] = -head * acc
    return TruncatedSeries._wrap(out)


# --------------------------
# products of the monomial form (q^c; q^d)

def pochhammer_inf(c: int, d: int, order: int, negate_base: bool = False) -> TruncatedSeries:
    """(q^c; q^d)_inf, or (-q^c; q^d)_inf when ``negate_base`` is set."""
    _check_positive("c", c)
    _check_positive("d", d)
    _check_order(order)
    coeffs = [1] + [0] * order
    sign = 1 if negate_base else -1
    for exp in range(c, order + 1, d):
        _mul_binomial(coeffs, sign, exp)
    return TruncatedSeries._wrap(coeffs)


def pochhammer_inv_inf(c: int, d: int, order: int) -> TruncatedSeries:
    """1 / (q^c; q^d)_inf"""
    _check_positive("c", c)
    _check_positive("d", d)
    _check_order(order)
    coeffs = [1] + [0] * order
    for exp in range(c, order + 1, d):
        _div_one_minus(coeffs, exp)
    return TruncatedSeries._wrap(coeffs)


def pochhammer_fin(c: int, d: int, n_terms: int, order: int) -> TruncatedSeries:
    """(q^c; q^d)_n_terms; the empty product is 1."""
    _check_positive("c", c)
    _check_positive("d", d)
    _check_order(order)
    if n_terms < 0:
        raise SeriesError(f"n_terms must be nonnegative, got {n_terms}")
    coeffs = [1] + [0] * order
    for t in range(n_terms):
        exp = c + t * d
        if exp > order:
            break
        _mul_binomial(coeffs, -1, exp)
    return TruncatedSeries._wrap(coeffs)


def pochhammer_inv_fin(c: int, d: int, n_terms: int, order: int) -> TruncatedSeries:
    """1 / (q^c; q^d)_n_terms"""
    _check_positive("c", c)
    _check_positive("d", d)
    _check_order(order)
    if n_terms < 0:
        raise SeriesError(f"n_terms must be nonnegative, got {n_terms}")
    coeffs = [1] + [0] * order
    for t in range(n_terms):
        exp = c + t * d
        if exp > order:
            break
        _div_one_minus(coeffs, exp)
    return TruncatedSeries._wrap(coeffs)


def euler_product(order: int) -> TruncatedSeries:
    """(q; q)_inf"""
    return pochhammer_inf(1, 1, order)


def distinct_parts_gf(order: int) -> TruncatedSeries:
    """(-q; q)_inf"""
    return pochhammer_inf(1, 1, order, negate_base=True)


def generalized_pentagonals(limit: int) -> List[int]:
    """Sorted k(3k-1)/2 for k in Z, up to limit (0 included)."""
    out = [0]
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > limit:
            break
        out.append(first)
        second = k * (3 * k + 1) // 2
        if second <= limit:
            out.append(second)
        k += 1
    return out


def is_twice_pentagonal(n: int) -> bool:
    """n = j(3j-1) or j(3j+1) for some j >= 0."""
    return n % 2 == 0 and (n // 2) in set(generalized_pentagonals(n // 2))


def partition_gf(order: int) -> TruncatedSeries:
    """sum p(n) q^n via the pentagonal-number recurrence."""
    _check_order(order)
    signed = []
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > order:
            break
        sign = 1 if k % 2 else -1
        signed.append((first, sign))
        second = k * (3 * k + 1) // 2
        if second <= order:
            signed.append((second, sign))
        k += 1
    p = [0] * (order + 1)
    p[0] = 1
    for n in range(1, order + 1):
        acc = 0
        for g, sign in signed:
            if g > n:
                break
            if sign > 0:
                acc += p[n - g]
            else:
                acc -= p[n - g]
        p[n] = acc
    return TruncatedSeries._wrap(p)


def regular_partition_gf(modulus: int, order: int) -> TruncatedSeries:
    """Generating function of partitions with no part divisible by ``modulus``."""
    _check_positive("modulus", modulus)
    _check_order(order)
    coeffs = [1] + [0] * order
    for n in range(1, order + 1):
        if n % modulus:
            _div_one_minus(coeffs, n)
    return TruncatedSeries._wrap(coeffs)


def frequency_bounded_product(j: int, r: int, order: int) -> TruncatedSeries:
    """prod_{t > j} (1 + q^t + ... + q^(t(r-1))) = prod_{t > j} (1 - q^(rt)) / (1 - q^t)"""
    _check_positive("r", r)
    _check_order(order)
    if j < 0:
        raise SeriesError(f"j must be nonnegative, got {j}")
    coeffs = [1] + [0] * order
    for t in range(j + 1, order + 1):
        _div_one_minus(coeffs, t)
    for t in range(j + 1, order // r + 1):
        _mul_binomial(coeffs, -1, r * t)
    return TruncatedSeries._wrap(coeffs)


# --------------------------
# generating functions of the statistics

def gf_sigma_mex(order: int) -> TruncatedSeries:
    """(-q; q)_inf^2, the generating function of the sum of mex."""
    distinct = distinct_parts_gf(order)
    return distinct * distinct


def gf_sigma_rc_mex_rhs(r: int, order: int) -> TruncatedSeries:
    """-(r-1)/(q;q)_inf + (q^(r+1);q^(r+1))_inf/(q;q)_inf * sum_{m=1}^{r} 1/(q^m;q^(r+1))_inf"""
    _check_positive("r", r)
    _check_order(order)
    partitions = partition_gf(order)
    head = pochhammer_inf(r + 1, r + 1, order) * partitions
    total = TruncatedSeries.zero(order)
    for m in range(1, r + 1):
        total = total + pochhammer_inv_inf(m, r + 1, order)
    logger.debug(f"sigma rc-mex series built for r={r} through q^{order}")
    return head * total - (r - 1) * partitions


def gf_corollary_term(r: int, m: int, order: int) -> TruncatedSeries:
    """(q^(r+1);q^(r+1))_inf/(q;q)_inf * 1/(q^m;q^(r+1))_inf"""
    _check_positive("r", r)
    if not 1 <= m <= r + 1:
        raise SeriesError(f"m must lie in [1, {r + 1}], got {m}")
    head = pochhammer_inf(r + 1, r + 1, order) * partition_gf(order)
    return head * pochhammer_inv_inf(m, r + 1, order)


def two_color_product(r: int, m: int, order: int) -> TruncatedSeries:
    """
    1/(q^m;q^(r+1))_inf^2 times 1/(1-q^n) over the n that are neither
    multiples of r+1 nor congruent to m: (r+1)-regular partitions with the
    residue-m parts in two colours.
    """
    _check_positive("r", r)
    _check_order(order)
    if not 1 <= m <= r:
        raise SeriesError(f"m must lie in [1, {r}], got {m}")
    modulus = r + 1
    coeffs = [1] + [0] * order
    for n in range(1, order + 1):
        residue = n % modulus
        if residue == 0:
            continue
        _div_one_minus(coeffs, n)
        if residue == m:
            _div_one_minus(coeffs, n)
    return TruncatedSeries._wrap(coeffs)


def gf_largest_repeating(j: int, r: int, order: int) -> TruncatedSeries:
    """q^(rj)/(q;q)_j * prod_{m>j}(1 + q^m + ... + q^(m(r-1))): largest r-repeating part j."""
    _check_positive("r", r)
    if j < 0:
        raise SeriesError(f"j must be nonnegative, got {j}")
    body = pochhammer_inv_fin(1, 1, j, order) * frequency_bounded_product(j, r, order)
    return body.shift(r * j)


def lambert_sum(start: int, step: int, order: int) -> TruncatedSeries:
    """sum over m >= start of q^(m*step)/(1 - q^(m*step))"""
    _check_positive("start", start)
    _check_positive("step", step)
    _check_order(order)
    coeffs = [0] * (order + 1)
    m = start
    while m * step <= order:
        base = m * step
        for e in range(base, order + 1, base):
            coeffs[e] += 1
        m += 1
    return TruncatedSeries._wrap(coeffs)


def q_binomial_sides(zexp: int, order: int, base: int = 1) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    Both sides of the a=0 q-binomial theorem in base q^base with z = q^zexp:
    sum_n z^n/(q^base;q^base)_n and 1/(z;q^base)_inf.
    """
    _check_positive("zexp", zexp)
    _check_positive("base", base)
    _check_order(order)
    left = TruncatedSeries.zero(order)
    denominator = TruncatedSeries.one(order)
    n = 0
    while zexp * n <= order:
        left = left + denominator.shift(zexp * n)
        n += 1
        if base * n <= order:
            denominator = denominator.div_one_minus(base * n)
    right = pochhammer_inv_inf(zexp, base, order)
    return left, right


def q_binomial_specialized(zexp: int, order: int, base: int = 1) -> bool:
    left, right = q_binomial_sides(zexp, order, base)
    return left == right


def inner_sum_collapse_sides(m: int, r: int, order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """sum_{j=0}^{m-1} q^(j(r+1))/(q^(r+1);q^(r+1))_j against 1/(q^(r+1);q^(r+1))_(m-1)"""
    _check_positive("m", m)
    _check_positive("r", r)
    step = r + 1
    left = TruncatedSeries.zero(order)
    for j in range(m):
        left = left + pochhammer_inv_fin(step, step, j, order).shift(j * step)
    right = pochhammer_inv_fin(step, step, m - 1, order)
    return left, right


def gf_interm1_derivative_closed(j: int, r: int, order: int) -> TruncatedSeries:
    """
    The w-derivative at w=1 of the bivariate series for largest (r+1)-repeating
    part j, in product-times-Lambert form.
    """
    _check_positive("r", r)
    step = r + 1
    prefix = pochhammer_inv_fin(1, 1, j, order).shift(j * step)
    body = pochhammer_inf(step * (j + 1), step, order)
    coeffs = list(body._coeffs)
    for exp in range(j + 1, order + 1):
        _div_one_minus(coeffs, exp)
    lambert = lambert_sum(j + 1, 1, order) - step * lambert_sum(j + 1, step, order)
    return prefix * TruncatedSeries._wrap(coeffs) * lambert


def gf_final_stretch(r: int, order: int) -> TruncatedSeries:
    """
    (q^(r+1);q^(r+1))_inf/(q;q)_inf * sum_{m>=1} [ q^m/(1-q^m) / (q^(r+1);q^(r+1))_(m-1)
    - (r+1) q^(m(r+1)) / (q^(r+1);q^(r+1))_m ]
    """
    _check_positive("r", r)
    _check_order(order)
    step = r + 1
    total = TruncatedSeries.zero(order)
    previous = TruncatedSeries.one(order)  # 1/(q^step;q^step)_(m-1)
    for m in range(1, order + 1):
        current = previous.div_one_minus(step * m) if step * m <= order else previous
        lambert = TruncatedSeries.monomial(m, order).div_one_minus(m)
        total = total + lambert * previous - step * current.shift(step * m)
        previous = current
    head = pochhammer_inf(step, step, order) * partition_gf(order)
    return head * total


def gf_pre_final(r: int, order: int) -> TruncatedSeries:
    """(q^(r+1);q^(r+1))_inf/(q;q)_inf * (sum_{m=1}^{r} 1/(q^m;q^(r+1))_inf - r/(q^(r+1);q^(r+1))_inf)"""
    _check_positive("r", r)
    _check_order(order)
    step = r + 1
    inner = -r * pochhammer_inv_inf(step, step, order)
    for m in range(1, r + 1):
        inner = inner + pochhammer_inv_inf(m, step, order)
    return pochhammer_inf(step, step, order) * partition_gf(order) * inner


# --------------------------
class BivariateSeries:
    """
    Series in q whose coefficients are polynomials in w. Row d holds the
    coefficients of w^0..w^d at q^d.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]], order: Optional[int] = None):
        rows = [[int(c) for c in row] for row in rows]
        if order is None:
            if not rows:
                raise SeriesError("Empty row list needs an explicit order")
            order = len(rows) - 1
        _check_order(order)
        rows = rows[:order + 1]
        rows.extend([] for _ in range(order + 1 - len(rows)))
        for d, row in enumerate(rows):
            if any(row[d + 1:]):
                raise SeriesError(f"w-degree exceeds q-degree at q^{d}")
            del row[d + 1:]
            row.extend([0] * (d + 1 - len(row)))
        self._rows = rows

    @classmethod
    def _wrap(cls, rows: List[List[int]]) -> "BivariateSeries":
        obj = cls.__new__(cls)
        obj._rows = rows
        return obj

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        _check_order(order)
        rows = [[0] * (d + 1) for d in range(order + 1)]
        rows[0][0] = 1
        return cls._wrap(rows)

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> Tuple[int, ...]:
        return tuple(self._rows[n])

    def coefficient(self, n: int, j: int) -> int:
        if not 0 <= n <= self.order:
            raise SeriesError(f"q-degree {n} is outside the truncation order {self.order}")
        row = self._rows[n]
        return row[j] if 0 <= j < len(row) else 0

    def at_w_one(self) -> TruncatedSeries:
        return TruncatedSeries._wrap([sum(row) for row in self._rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self.order})"

    # --------------------------
    def times_series(self, series: TruncatedSeries) -> "BivariateSeries":
        """Multiply by a w-free series."""
        order = min(self.order, series.order)
        coeffs = series._coeffs
        support = [(k, c) for k, c in enumerate(coeffs[:order + 1]) if c]
        rows = []
        for d in range(order + 1):
            acc = [0] * (d + 1)
            for k, c in support:
                if k > d:
                    break
                for e, x in enumerate(self._rows[d - k]):
                    if x:
                        acc[e] += c * x
            rows.append(acc)
        return BivariateSeries._wrap(rows)


def _bi_mul_factor(rows: List[List[int]], coef: int, wexp: int, qexp: int):
    for d in range(len(rows) - 1, qexp - 1, -1):
        target = rows[d]
        for e, x in enumerate(rows[d - qexp]):
            if x:
                target[e + wexp] += coef * x


def _bi_div_one_minus(rows: List[List[int]], wexp: int, qexp: int):
    for d in range(qexp, len(rows)):
        target = rows[d]
        for e, x in enumerate(rows[d - qexp]):
            if x:
                target[e + wexp] += x


def w_derivative_at_1(series: BivariateSeries) -> TruncatedSeries:
    """d/dw at w=1, taken row by row."""
    return TruncatedSeries._wrap([sum(e * c for e, c in enumerate(row)) for row in series._rows])


def gf_alpha_bivariate(order: int) -> BivariateSeries:
    """1/((q;q^2)_inf (wq^2;q^2)_inf): w marks even parts, equivalently parts above the mex."""
    series = BivariateSeries.one(order)
    rows = series._rows
    for exp in range(1, order + 1, 2):
        _bi_div_one_minus(rows, 0, exp)
    for exp in range(2, order + 1, 2):
        _bi_div_one_minus(rows, 1, exp)
    return series


def gf_multiples_bivariate(r: int, order: int) -> BivariateSeries:
    """(q^r;q^r)_inf/(q;q)_inf * 1/(wq^r;q^r)_inf: w marks the parts divisible by r."""
    _check_positive("r", r)
    series = BivariateSeries.one(order)
    rows = series._rows
    for exp in range(1, order + 1):
        _bi_div_one_minus(rows, 0 if exp % r else 1, exp)
    return series


def gf_interm1(j: int, r: int, order: int) -> BivariateSeries:
    """
    q^(j(r+1)) ((wq^(j+1))^(r+1); q^(r+1))_inf / ((q;q)_j (wq^(j+1);q)_inf):
    largest (r+1)-repeating part j, w marking the parts greater than j.
    """
    _check_positive("r", r)
    _check_order(order)
    if j < 0:
        raise SeriesError(f"j must be nonnegative, got {j}")
    step = r + 1
    series = BivariateSeries.one(order)
    rows = series._rows
    for exp in range(j + 1, order + 1):
        _bi_div_one_minus(rows, 1, exp)
    for exp in range(step * (j + 1), order + 1, step):
        _bi_mul_factor(rows, -1, step, exp)
    prefix = pochhammer_inv_fin(1, 1, j, order).shift(j * step)
    return series.times_series(prefix)
