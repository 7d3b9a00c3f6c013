import unittest

from enumeration import (
    ColoredSpec,
    ConstraintError,
    ConstraintSpec,
    colored_partitions,
    count_colored,
    count_distinct_two_colored,
    count_partitions,
    partitions,
    partitions_constrained,
    partitions_with_largest,
    two_color_spec,
)
from filters import FilterChain, MaxFrequencyFilter, MaxSuccessiveGapFilter
from partition import from_parts

P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


class EnumerationTestCase(unittest.TestCase):
    def test_partition_counts(self):
        self.assertListEqual(P, [count_partitions(n) for n in range(11)])
        self.assertEqual(5604, count_partitions(30))

    def test_order(self):
        self.assertListEqual(
            ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"], [str(p) for p in partitions(4)]
        )
        self.assertListEqual(["()"], [str(p) for p in partitions(0)])

    def test_strata_cover_everything(self):
        for n in range(9):
            strata = [p for k in range(n, -1, -1) for p in partitions_with_largest(n, k)]
            self.assertListEqual(list(partitions(n)), strata)

    def test_pruned_matches_filter_chain(self):
        specs = [
            ConstraintSpec(max_frequency=2, forbidden_residues=(3, frozenset({0}))),
            ConstraintSpec(distinct=True, min_part=2),
            ConstraintSpec(exact_largest_part=4, max_successive_gap=1),
            ConstraintSpec.regular(2),
        ]
        for spec in specs:
            chain = spec.to_filter_chain()
            for n in range(13):
                expected = [p for p in partitions(n) if chain.accepts(p)]
                self.assertListEqual(expected, list(partitions_constrained(n, spec)), f"{spec} n={n}")

    def test_pruned_matches_filter_chain_for_census_specs(self):
        specs = [ConstraintSpec(distinct=True), ConstraintSpec(min_part=2)]
        for r in range(1, 5):
            specs.append(ConstraintSpec.regular(r + 1))
            specs.append(ConstraintSpec(max_frequency=r))
        for r in range(2, 5):
            specs.extend(
                ConstraintSpec(exact_largest_part=k, max_successive_gap=r - 1) for k in range(1, 31)
            )
        chains = [(spec, spec.to_filter_chain()) for spec in specs]
        for n in range(31):
            everything = list(partitions(n))
            for spec, chain in chains:
                expected = [p for p in everything if chain.accepts(p)]
                self.assertListEqual(expected, list(partitions_constrained(n, spec)), f"{spec} n={n}")

    def test_distinct_equals_odd(self):
        for n in range(16):
            self.assertEqual(
                count_partitions(n, ConstraintSpec(distinct=True)),
                count_partitions(n, ConstraintSpec.regular(2)),
            )

    def test_two_coloured(self):
        self.assertEqual(2, count_colored(1, two_color_spec(3, 1)))
        self.assertEqual(1, count_colored(1, two_color_spec(3, 2)))
        self.assertEqual(4, count_colored(2, two_color_spec(3, 1)))
        self.assertEqual(3, count_colored(2, two_color_spec(3, 2)))
        self.assertListEqual([1, 2, 3, 6, 9, 14], [count_distinct_two_colored(n) for n in range(6)])

    def test_colored_stream_matches_count(self):
        spec = ColoredSpec(modulus=3, two_color_residue=1, color_max_frequency=2)
        for n in range(9):
            stream = list(colored_partitions(n, spec))
            self.assertEqual(len(stream), len(set(stream)))
            self.assertEqual(count_colored(n, spec), len(stream))

    def test_bad_specs(self):
        with self.assertRaises(ConstraintError):
            ConstraintSpec(max_frequency=0)
        with self.assertRaises(ConstraintError):
            ColoredSpec(modulus=3, two_color_residue=5)
        with self.assertRaises(ConstraintError):
            count_partitions(-1)


class FilterTestCase(unittest.TestCase):
    def test_chain(self):
        chain = FilterChain()
        gap = MaxSuccessiveGapFilter(1)
        chain.add_filter(MaxFrequencyFilter(2))
        chain.add_filter(gap)
        self.assertEqual(2, len(chain))
        self.assertTrue(chain.accepts(from_parts([3, 2, 1, 1])))
        self.assertFalse(chain.accepts(from_parts([3, 1])))
        self.assertFalse(chain.accepts(from_parts([2])))
        self.assertFalse(chain.accepts(from_parts([1, 1, 1])))
        chain.remove_filter(gap)
        self.assertTrue(chain.accepts(from_parts([3, 1])))


if __name__ == '__main__':
    unittest.main()
