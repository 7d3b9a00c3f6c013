import unittest
from unittest import mock

import census
import qseries
from base_identity import IdentityCheckError, ResourceCeilingError, UnknownIdentityError, VerifyParams
from identities import ALL_CHECKS
from verify import check_ceiling, lookup, registry, run_suite, verify_identity

real_sigma_mex = qseries.gf_sigma_mex


def corrupted_sigma_mex(order):
    return real_sigma_mex(order) + qseries.TruncatedSeries.monomial(3, order)


class RegistryTestCase(unittest.TestCase):
    def test_registry(self):
        ids = [identity_id for identity_id, _ in registry()]
        self.assertEqual(24, len(ids))
        self.assertEqual(len(ids), len(set(ids)))
        self.assertEqual("euler", ids[0])
        self.assertEqual("gf-vs-census-suite", ids[-1])
        self.assertTrue(all(description for _, description in registry()))

    def test_lookup(self):
        self.assertIs(ALL_CHECKS[0], lookup("euler"))
        with self.assertRaises(UnknownIdentityError):
            lookup("no-such-id")

    def test_ceiling(self):
        with self.assertRaises(ResourceCeilingError):
            check_ceiling(lookup("thm-3way"), VerifyParams(max_n=200), 90, 5000)
        with self.assertRaises(ResourceCeilingError):
            check_ceiling(lookup("qbinom-a0"), VerifyParams(order=10000), 90, 5000)
        # only exhaustive checks are bounded by the scan ceiling
        check_ceiling(lookup("qbinom-a0"), VerifyParams(max_n=200), 90, 5000)
        check_ceiling(lookup("thm-3way"), VerifyParams(max_n=200, allow_large=True), 90, 5000)


class VerifyTestCase(unittest.TestCase):
    def test_three_way_passes(self):
        report = verify_identity("thm-3way", VerifyParams(max_n=10, r_values=(2, 3)))
        self.assertEqual("pass", report.status)
        self.assertTrue(report.passed)
        self.assertIsNone(report.witness)
        self.assertIsNone(report.to_dict()["duration_ms"])
        self.assertIsNotNone(report.to_dict(timing=True)["duration_ms"])

    def test_illustration_tables(self):
        report = verify_identity("tables-n7", VerifyParams())
        self.assertEqual("pass", report.status)
        self.assertEqual([3, 3, 3], report.details["counts"]["r=2,j=2"])

    def test_corrupted_builder_gives_witness(self):
        with mock.patch("qseries.gf_sigma_mex", side_effect=corrupted_sigma_mex):
            report = verify_identity("sigma-mex-r1", VerifyParams(max_n=6))
        self.assertEqual("fail", report.status)
        self.assertEqual(3, report.witness.n)
        self.assertEqual((6, 7), (report.witness.lhs, report.witness.rhs))

    def test_member_exception_propagates(self):
        with mock.patch("census.sigma_chain_mex", side_effect=RuntimeError("boom")):
            with self.assertRaises(IdentityCheckError) as raised:
                verify_identity("sigma-mex-r1", VerifyParams(max_n=4))
        self.assertEqual("sigma-mex-r1", raised.exception.identity_id)
        self.assertIsInstance(raised.exception.cause, RuntimeError)
        self.assertIn("boom", str(raised.exception))

    def test_chain_maex_records_interpretations(self):
        report = verify_identity("thm-chain-maex", VerifyParams(max_n=8, r_values=(2, 3)))
        outcomes = report.details["interpretations"]
        self.assertEqual({"exists": "pass"}, outcomes["r=2"])
        self.assertEqual(3, len(outcomes["r=3"]))


class SuiteTestCase(unittest.TestCase):
    def test_suite_passes_in_registry_order(self):
        params = VerifyParams(max_n=8, r_values=(1, 2, 3), order=40)
        reports = run_suite(params, workers=3)
        self.assertListEqual([identity_id for identity_id, _ in registry()], [r.identity_id for r in reports])
        failed = [(r.identity_id, r.witness) for r in reports if not r.passed]
        self.assertListEqual([], failed)

    def test_subset_with_one_failure(self):
        params = VerifyParams(max_n=6, r_values=(1, 2), order=30)
        with mock.patch("qseries.gf_sigma_mex", side_effect=corrupted_sigma_mex):
            reports = run_suite(params, workers=2, identity_ids=["euler", "sigma-mex-r1"])
        self.assertEqual(["pass", "fail"], [r.status for r in reports])

    def test_suite_propagates_member_errors(self):
        params = VerifyParams(max_n=4, r_values=(1, 2), order=20)
        with mock.patch("census.sigma_chain_mex", side_effect=RuntimeError("boom")):
            with self.assertRaises(IdentityCheckError) as raised:
                run_suite(params, workers=2, identity_ids=["euler", "sigma-mex-r1"])
        self.assertEqual("sigma-mex-r1", raised.exception.identity_id)

    def test_sigma_checks_share_one_scan_per_n(self):
        params = VerifyParams(max_n=12, r_values=(1, 2, 3, 4, 5))
        with mock.patch("census.sigma_chain_mex_many", wraps=census.sigma_chain_mex_many) as scans:
            report = verify_identity("gfn-sigma-rc-mex", params)
        self.assertEqual("pass", report.status)
        self.assertEqual(13, scans.call_count)

    def test_suite_checks_ceilings_first(self):
        with self.assertRaises(ResourceCeilingError):
            run_suite(VerifyParams(max_n=500), identity_ids=["euler"])


if __name__ == '__main__':
    unittest.main()
