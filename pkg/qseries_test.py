import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from enumeration import count_colored, two_color_spec
from qseries import (
    BivariateSeries,
    SeriesError,
    TruncatedSeries,
    arith,
    distinct_parts_gf,
    euler_product,
    gf_alpha_bivariate,
    gf_corollary_term,
    gf_final_stretch,
    gf_interm1,
    gf_interm1_derivative_closed,
    gf_largest_repeating,
    gf_multiples_bivariate,
    gf_pre_final,
    gf_sigma_mex,
    gf_sigma_rc_mex_rhs,
    generalized_pentagonals,
    inner_sum_collapse_sides,
    is_twice_pentagonal,
    multiply,
    partition_gf,
    pochhammer_fin,
    pochhammer_inv_fin,
    q_binomial_specialized,
    reciprocal,
    two_color_product,
    w_derivative_at_1,
)

P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
SIGMA_MEX = [1, 2, 3, 6, 9, 14, 22, 32, 46, 66, 93]


def series_of(order, bound=10 ** 6):
    return st.lists(
        st.integers(min_value=-bound, max_value=bound), min_size=order + 1, max_size=order + 1
    ).map(TruncatedSeries)


small_series = series_of(30)
wide_series = series_of(200)


class TruncatedSeriesTestCase(unittest.TestCase):
    def test_construction(self):
        s = TruncatedSeries([1, 2, 3], order=5)
        self.assertEqual((1, 2, 3, 0, 0, 0), s.coeffs)
        self.assertEqual(5, s.order)
        self.assertEqual(2, TruncatedSeries([1, 2, 3, 4], order=2).order)
        self.assertEqual((0, 0, 7, 0), TruncatedSeries.monomial(2, 3, 7).coeffs)
        with self.assertRaises(SeriesError):
            TruncatedSeries([])
        with self.assertRaises(SeriesError):
            s[6]

    def test_arithmetic(self):
        a = TruncatedSeries([1, 1], order=4)
        b = TruncatedSeries([1, -1], order=3)
        self.assertEqual(3, (a + b).order)
        self.assertEqual((1, 0, -1, 0), (a * b).coeffs)
        self.assertEqual((0, 2, 0, 0), (a - b).coeffs)
        self.assertEqual((0, 0, 1, 1, 0), a.shift(2).coeffs)
        self.assertEqual((1, 0, 1, 0, 0), a.dilate(2).coeffs)
        self.assertEqual((1, 1, 1, 1, 1), TruncatedSeries.one(4).div_one_minus(1).coeffs)

    def test_kronecker_matches_schoolbook(self):
        a = TruncatedSeries([(-1) ** k * (k * k % 17) for k in range(120)])
        b = TruncatedSeries([(k * 7 % 11) - 5 for k in range(100)])
        self.assertEqual(multiply(a, b, "schoolbook"), multiply(a, b, "kronecker"))
        with self.assertRaises(SeriesError):
            multiply(a, b, "fft")

    def test_reciprocal(self):
        self.assertEqual(partition_gf(40), reciprocal(euler_product(40)))
        self.assertEqual(TruncatedSeries.one(20), reciprocal(distinct_parts_gf(20)) * distinct_parts_gf(20))
        with self.assertRaises(SeriesError):
            reciprocal(TruncatedSeries([2, 1]))


class SeriesRingPropertyTestCase(unittest.TestCase):
    @given(a=small_series, b=small_series, c=small_series)
    def test_ring_laws(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a + b, b + a)
        self.assertEqual(a, a * TruncatedSeries.one(30))
        self.assertEqual(a, a + TruncatedSeries.zero(30))
        self.assertEqual(TruncatedSeries.zero(30), a - a)

    @settings(max_examples=25, deadline=None)
    @given(a=wide_series, b=wide_series)
    def test_multiplication_commutes(self, a, b):
        self.assertEqual(a * b, b * a)

    @settings(deadline=None)
    @given(
        a=st.lists(st.integers(min_value=-2 ** 70, max_value=2 ** 70), min_size=1, max_size=150),
        b=st.lists(st.integers(min_value=-2 ** 70, max_value=2 ** 70), min_size=1, max_size=150),
    )
    def test_kronecker_matches_schoolbook_bit_exactly(self, a, b):
        a, b = TruncatedSeries(a), TruncatedSeries(b)
        self.assertEqual(multiply(a, b, "schoolbook"), multiply(a, b, "kronecker"))

    @given(a=small_series, b=small_series)
    def test_arith(self, a, b):
        self.assertEqual(a + b, arith(a, b, "add"))
        self.assertEqual(a - b, arith(a, b, "sub"))
        self.assertEqual(multiply(a, b, "schoolbook"), arith(a, b, "mul"))

    def test_arith_rejects_unknown_operation(self):
        with self.assertRaises(SeriesError):
            arith(TruncatedSeries.one(3), TruncatedSeries.one(3), "div")

    @given(a=small_series)
    def test_unit_reciprocal(self, a):
        unit = TruncatedSeries.one(30) + a.shift(1)
        self.assertEqual(TruncatedSeries.one(30), reciprocal(unit) * unit)


class ProductTestCase(unittest.TestCase):
    def test_euler_product(self):
        self.assertListEqual([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1], list(euler_product(12)))

    def test_partition_numbers(self):
        self.assertListEqual(P, list(partition_gf(10)))
        gf = partition_gf(100)
        self.assertEqual(5604, gf[30])
        self.assertEqual(190569292, gf[100])

    def test_pentagonals(self):
        self.assertListEqual([0, 1, 2, 5, 7, 12, 15, 22, 26], generalized_pentagonals(26))
        self.assertListEqual([0, 2, 4, 10, 14], [n for n in range(16) if is_twice_pentagonal(n)])

    def test_finite_products(self):
        self.assertEqual((1, -1, -1, 1, 0, 0, 0), pochhammer_fin(1, 1, 2, 6).coeffs)
        self.assertEqual(TruncatedSeries.one(10), pochhammer_fin(1, 1, 3, 10) * pochhammer_inv_fin(1, 1, 3, 10))
        self.assertEqual(TruncatedSeries.one(5), pochhammer_fin(1, 1, 0, 5))


class StatisticSeriesTestCase(unittest.TestCase):
    def test_sigma_mex(self):
        self.assertListEqual(SIGMA_MEX, list(gf_sigma_mex(10)))
        self.assertEqual(gf_sigma_mex(60), gf_sigma_rc_mex_rhs(1, 60))

    def test_sigma_mex_parity(self):
        for n, coeff in enumerate(gf_sigma_mex(200)):
            self.assertEqual(int(is_twice_pentagonal(n)), coeff % 2, f"n={n}")

    def test_corollary_terms_count_two_coloured_partitions(self):
        for r in (1, 2, 3):
            for m in range(1, r + 1):
                series = gf_corollary_term(r, m, 12)
                counts = [count_colored(n, two_color_spec(r + 1, m)) for n in range(13)]
                self.assertListEqual(counts, list(series), f"r={r} m={m}")
                self.assertEqual(series, two_color_product(r, m, 12))
        with self.assertRaises(SeriesError):
            two_color_product(2, 3, 10)

    def test_chain_of_forms(self):
        for r in (1, 2, 3):
            pre_final = gf_pre_final(r, 50)
            self.assertEqual(gf_final_stretch(r, 50), pre_final)
            self.assertEqual(gf_sigma_rc_mex_rhs(r, 50), partition_gf(50) + pre_final)

    def test_q_binomial(self):
        for zexp in (1, 2, 3):
            for base in (1, 2):
                self.assertTrue(q_binomial_specialized(zexp, 40, base))

    def test_inner_collapse(self):
        for m in range(1, 6):
            left, right = inner_sum_collapse_sides(m, 2, 40)
            self.assertEqual(left, right)

    def test_largest_repeating_sums_to_partitions(self):
        total = TruncatedSeries.zero(20)
        for j in range(21):
            total = total + gf_largest_repeating(j, 2, 20)
        self.assertEqual(partition_gf(20), total)


class BivariateSeriesTestCase(unittest.TestCase):
    def test_rows(self):
        series = BivariateSeries([[1], [0, 2], [3]], order=3)
        self.assertEqual((0, 2), series.row(1))
        self.assertEqual((3, 0, 0), series.row(2))
        self.assertEqual(0, series.coefficient(3, 1))
        with self.assertRaises(SeriesError):
            BivariateSeries([[1], [0, 0, 1]])

    def test_alpha_and_multiples(self):
        alpha = gf_alpha_bivariate(10)
        self.assertEqual(partition_gf(10), alpha.at_w_one())
        self.assertEqual(3, alpha.coefficient(7, 2))
        self.assertEqual(5, gf_multiples_bivariate(3, 7).coefficient(7, 1))
        self.assertEqual(alpha, gf_multiples_bivariate(2, 10))

    def test_interm1(self):
        for r in (1, 2):
            for j in range(4):
                series = gf_interm1(j, r, 25)
                self.assertEqual(gf_largest_repeating(j, r + 1, 25), series.at_w_one())
                self.assertEqual(gf_interm1_derivative_closed(j, r, 25), w_derivative_at_1(series))


if __name__ == '__main__':
    unittest.main()
