import unittest

import numpy as np

import census
from census import (
    alpha_census,
    chain_maex_census,
    euler_census,
    fk_sum_census,
    franklin_glaisher_census,
    gap_bounded_table,
    glaisher_census,
    m_weighted_census,
    q_bivariate_census,
    q_bivariate_grid,
    refine_census,
    sigma_chain_mex,
    sigma_chain_mex_many,
    three_way_census,
)
from partition import PartitionError

P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


class CensusTestCase(unittest.TestCase):
    def tearDown(self):
        census.set_cache_limit(40)

    def test_three_way_at_seven(self):
        table = three_way_census(7, 2)
        self.assertEqual((3, 3, 3), tuple(table.cell(2, column=c) for c in table.columns))
        table = three_way_census(7, 3)
        self.assertEqual((5, 5, 5), tuple(table.cell(1, column=c) for c in table.columns))
        for column in table.columns:
            self.assertEqual(15, table.column_total(column))
        self.assertEqual(0, table.cell(99, column="multiples_of_r"))

    def test_three_way_listings(self):
        table = three_way_census(7, 2, listings=True, only_j=2)
        self.assertListEqual(
            ["5+2", "4+3", "3+3+1"], [str(p) for p in table.listing((2,), "above_chain_mex")]
        )
        self.assertListEqual([], table.listing((1,), "above_chain_mex"))

    def test_three_way_columns_agree(self):
        for r in (2, 3, 4):
            for n in range(13):
                table = three_way_census(n, r)
                self.assertIsNone(table.first_mismatch("multiples_of_r", "largest_r_repeating"))
                self.assertIsNone(table.first_mismatch("multiples_of_r", "above_chain_mex"))
        with self.assertRaises(PartitionError):
            three_way_census(5, 1)

    def test_threaded_tally_matches_serial(self):
        census.set_cache_limit(5)
        serial = three_way_census(14, 3, workers=1)
        threaded = three_way_census(14, 3, workers=3)
        self.assertTrue(np.array_equal(serial.cells, threaded.cells))

    def test_population_cache(self):
        census.set_cache_limit(10)
        first = census.population(6)
        self.assertIs(first, census.population(6))
        self.assertEqual(11, len(first))
        self.assertEqual(P[10], sum(1 for _ in census.population(10)))

    def test_sigma_chain_mex(self):
        self.assertListEqual([1, 2, 3, 6, 9, 14], [sigma_chain_mex(n, 1) for n in range(6)])
        self.assertEqual(1, sigma_chain_mex(0, 3))

    def test_sigma_chain_mex_many(self):
        for n in range(9):
            totals = sigma_chain_mex_many(n, (1, 2, 3))
            self.assertEqual({r: sigma_chain_mex(n, r) for r in (1, 2, 3)}, totals)
        self.assertEqual({1: 14}, sigma_chain_mex_many(5, (1,)))
        with self.assertRaises(PartitionError):
            sigma_chain_mex_many(5, (1, 0))

    def test_glaisher_census(self):
        counts = glaisher_census(4, (2, 3))
        self.assertEqual((2, 2), counts[2])
        for n in range(10):
            for r, pair in glaisher_census(n, (2, 3, 4)).items():
                scalars = franklin_glaisher_census(n, r).scalars
                self.assertEqual((scalars["regular"], scalars["frequency_below_r"]), pair)
        with self.assertRaises(PartitionError):
            glaisher_census(4, (1,))

    def test_refine(self):
        for r in (1, 2, 3):
            for n in range(11):
                chain_side, repeating_side = refine_census(n, r)
                self.assertTrue(np.array_equal(chain_side.cells, repeating_side.cells), f"r={r} n={n}")
                self.assertEqual(P[n], chain_side.column_total("count"))

    def test_franklin(self):
        table = franklin_glaisher_census(4, 2)
        self.assertEqual(3, table.cell(1, column="distinct_multiples"))
        self.assertEqual(3, table.cell(1, column="distinct_repeating"))
        self.assertEqual({"regular": 2, "frequency_below_r": 2}, table.scalars)

    def test_chain_maex(self):
        table = chain_maex_census(4, 2)
        self.assertEqual(2, table.cell(1, column="smallest_r_repeating"))
        self.assertEqual(1, table.cell(2, column="smallest_r_repeating"))
        self.assertEqual("exists", table.params["interpretation"])
        for n in range(12):
            table = chain_maex_census(n, 2)
            self.assertIsNone(table.first_mismatch("above_chain_maex", "smallest_r_repeating"), f"n={n}")
        with self.assertRaises(PartitionError):
            chain_maex_census(5, 2, "sometimes")

    def test_alpha(self):
        for n in range(12):
            table = alpha_census(n)
            self.assertIsNone(table.first_mismatch("above_mex", "even_parts"))
            self.assertIsNone(table.first_mismatch("above_mex", "largest_repeating"))

    def test_euler(self):
        scalars = euler_census(7).scalars
        self.assertEqual(5, scalars["odd_parts"])
        self.assertEqual(5, scalars["distinct_parts"])
        self.assertEqual(5, scalars["gap_free"])

    def test_q_bivariate(self):
        grid = q_bivariate_grid(8, 2)
        for j in range(5):
            single = q_bivariate_census(8, 2, j)
            self.assertTrue(np.array_equal(grid.cells[j], single.cells))
        self.assertEqual(P[8], int(grid.cells.sum()))
        weighted = sum(m * int(grid.cells[1, m, 0]) for m in range(9))
        self.assertEqual(weighted, m_weighted_census(8, 2, 1))

    def test_gap_bounded(self):
        cells = gap_bounded_table(6, 2)
        self.assertEqual(1, cells[0, 0])
        self.assertEqual(1, cells[2, 3])
        self.assertEqual(1, cells[2, 4])
        self.assertEqual(1, cells[1, 3])
        self.assertEqual(0, cells[3, 3])
        self.assertEqual(fk_sum_census(6, 1, 2), fk_sum_census(6, 1, 2, table=cells))


if __name__ == '__main__':
    unittest.main()
