import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import qseries
from cli import EXIT_CEILING, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, int_list, main

real_sigma_mex = qseries.gf_sigma_mex


class CliTestCase(unittest.TestCase):
    def setUp(self):
        patcher = mock.patch("config.load_dotenv")
        patcher.start()
        self.addCleanup(patcher.stop)

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_sequence(self):
        code, out, _ = self.run_cli("seq", "p", "--max-n", "10")
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("p: 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42\n", out)
        _, oracle, _ = self.run_cli("seq", "p", "--max-n", "10", "--oracle")
        self.assertEqual(out, oracle)

    def test_sequence_bfile(self):
        code, out, _ = self.run_cli("seq", "d2", "--max-n", "5", "--format", "bfile")
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("0 1\n1 2\n2 3\n3 6\n4 9\n5 14\n", out)

    def test_sigma_rc_mex_routes_agree(self):
        _, series, _ = self.run_cli("seq", "sigma-rc-mex", "--r", "2", "--max-n", "12", "--format", "json")
        _, oracle, _ = self.run_cli("seq", "sigma-rc-mex", "--r", "2", "--max-n", "12", "--oracle", "--format", "json")
        self.assertEqual(json.loads(series), json.loads(oracle))

    def test_p_colored_rejects_bad_residue(self):
        code, _, err = self.run_cli("seq", "p-colored", "--m", "3", "--j", "3")
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("p-colored", err)

    def test_stats(self):
        code, out, _ = self.run_cli("stats", "--parts", "7,4,4,4,3,1,1", "--r", "2", "--format", "json")
        self.assertEqual(EXIT_OK, code)
        stats = json.loads(out)
        self.assertEqual(2, stats["mex"])
        self.assertEqual(5, stats["chain_mex"]["r=2"])
        self.assertEqual(6, stats["maex"])
        self.assertEqual("7+5+5+4+1+1+1", stats["conjugate"])
        code, out, _ = self.run_cli("stats", "--parts", "3,2,1", "--t", "1")
        self.assertIn("absent", out)

    def test_bad_partition(self):
        code, _, err = self.run_cli("stats", "--parts", "7,0")
        self.assertEqual(EXIT_USAGE, code)
        self.assertIn("positive", err)
        code, out, err = self.run_cli("stats", "--parts", "0", "--format", "json")
        self.assertEqual(EXIT_USAGE, code)
        self.assertEqual("", out)
        self.assertIn("positive", err)

    def test_table(self):
        code, out, _ = self.run_cli("table", "three-way", "--n", "7", "--r", "2", "--j", "2", "--list-partitions")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("4+3", out)
        self.assertIn("2 parts > 1-chain mex", out)
        code, out, _ = self.run_cli("table", "franklin", "--n", "4", "--format", "csv")
        self.assertEqual("n,j,distinct_multiples,distinct_repeating", out.splitlines()[0])
        self.assertIn("4,1,3,3", out.splitlines())

    def test_table_ceiling(self):
        code, _, err = self.run_cli("table", "three-way", "--n", "200")
        self.assertEqual(EXIT_CEILING, code)
        self.assertIn("ceiling", err)

    def test_verify(self):
        code, out, _ = self.run_cli("verify", "thm-3way", "--max-n", "7", "--r", "2,3")
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(out.startswith("PASS"))
        self.assertIn("1/1 passed", out)

    def test_verify_failure(self):
        def corrupted(order):
            return real_sigma_mex(order) + qseries.TruncatedSeries.monomial(3, order)

        with mock.patch("qseries.gf_sigma_mex", side_effect=corrupted):
            code, out, _ = self.run_cli("verify", "sigma-mex-r1", "--max-n", "6", "--format", "json")
        self.assertEqual(EXIT_FAILURE, code)
        report = json.loads(out)[0]
        self.assertEqual("fail", report["status"])
        self.assertEqual(3, report["witness"]["n"])
        self.assertIsNone(report["duration_ms"])

    def test_verify_usage(self):
        self.assertEqual(EXIT_USAGE, self.run_cli("verify", "no-such-id")[0])
        self.assertEqual(EXIT_USAGE, self.run_cli("verify")[0])
        self.assertEqual(EXIT_USAGE, self.run_cli("bogus")[0])
        code, out, err = self.run_cli("verify", "thm-3way", "--suite", "all")
        self.assertEqual(EXIT_USAGE, code)
        self.assertEqual("", out)
        self.assertIn("not both", err)
        code, out, _ = self.run_cli("verify", "--list", "--format", "json")
        self.assertEqual(EXIT_OK, code)
        self.assertEqual(24, len(json.loads(out)))

    def test_verify_raising_check(self):
        with mock.patch("census.sigma_chain_mex", side_effect=RuntimeError("boom")):
            code, out, err = self.run_cli("verify", "sigma-mex-r1", "--max-n", "4")
        self.assertEqual(EXIT_FAILURE, code)
        self.assertEqual("", out)
        self.assertIn("boom", err)

    def test_gf(self):
        code, out, _ = self.run_cli("gf", "euler-product", "--order", "7")
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("euler-product: 1, -1, -1, 0, 0, 1, 0, 1\n", out)
        code, out, _ = self.run_cli("gf", "alpha", "--order", "3")
        self.assertIn("q^2: 1 1 0", out)
        self.assertEqual(EXIT_USAGE, self.run_cli("gf", "alpha", "--order", "3", "--format", "bfile")[0])
        self.assertEqual(EXIT_USAGE, self.run_cli("gf", "two-color", "--r", "2", "--m", "3")[0])

    def test_save(self):
        with tempfile.TemporaryDirectory() as tmp:
            with mock.patch.dict(os.environ, {"MEXLAB_OUTPUT_DIR": tmp}):
                code, out, _ = self.run_cli("seq", "p", "--max-n", "5", "--save", "--format", "csv")
            self.assertEqual(EXIT_OK, code)
            saved = os.listdir(tmp)
            self.assertEqual(1, len(saved))
            self.assertTrue(saved[0].startswith("seq_") and saved[0].endswith(".csv"))
            with open(os.path.join(tmp, saved[0]), encoding="utf-8") as f:
                self.assertEqual(out, f.read())

    def test_int_list(self):
        self.assertEqual((1, 2, 3, 5), int_list("1-3,5"))
        self.assertEqual((2, 3), int_list("2, 3"))


if __name__ == '__main__':
    unittest.main()
