import os
import unittest
from unittest import mock

from config import MexLabConfig


@mock.patch("config.load_dotenv")
class ConfigTestCase(unittest.TestCase):
    def test_defaults(self, _load_dotenv):
        with mock.patch.dict(os.environ, {}, clear=True):
            cfg = MexLabConfig.from_env()
        self.assertEqual(MexLabConfig(), cfg)
        self.assertEqual(90, cfg.max_n)
        self.assertEqual(120, cfg.default_order)

    def test_overrides(self, _load_dotenv):
        env = {
            "MEXLAB_MAX_N": "60",
            "MEXLAB_MAX_ORDER": "800",
            "MEXLAB_DEFAULT_MAX_N": "12",
            "MEXLAB_ORDER": "64",
            "MEXLAB_WORKERS": "0",
            "MEXLAB_CACHE_N": "20",
            "MEXLAB_OUTPUT_DIR": "/tmp/mexlab",
            "LOG_LEVEL": "DEBUG",
        }
        with mock.patch.dict(os.environ, env, clear=True):
            cfg = MexLabConfig.from_env()
        self.assertEqual(60, cfg.max_n)
        self.assertEqual(800, cfg.max_order)
        self.assertEqual(12, cfg.default_max_n)
        self.assertEqual(64, cfg.default_order)
        self.assertEqual(1, cfg.workers)
        self.assertEqual(20, cfg.cache_n)
        self.assertEqual("/tmp/mexlab", cfg.output_dir)
        self.assertEqual("DEBUG", cfg.log_level)


if __name__ == '__main__':
    unittest.main()
