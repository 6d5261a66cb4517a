import copy
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from corequot.config_manager.config import DEFAULT_CONFIG, ConfigError, load_config, validate_config

CONFIG_MODULE = 'corequot.config_manager.config'


class TestLoadConfig(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        root = Path(self.tmp.name)
        self.config_path = root / "config.toml"
        self.local_path = root / "config.local.toml"
        patchers = [
            patch(f'{CONFIG_MODULE}.CONFIG_FILE_PATH', self.config_path),
            patch(f'{CONFIG_MODULE}.LOCAL_CONFIG_FILE_PATH', self.local_path),
            patch(f'{CONFIG_MODULE}.load_dotenv'),
            patch.dict(os.environ, {}, clear=False),
        ]
        for patcher in patchers:
            patcher.start()
            self.addCleanup(patcher.stop)
        for name in ("COREQUOT_MAX_N", "COREQUOT_MAX_T", "COREQUOT_ORDER", "COREQUOT_WORKERS"):
            os.environ.pop(name, None)
        self.addCleanup(self.tmp.cleanup)

    def test_defaults_without_files(self):
        self.assertEqual(load_config(), DEFAULT_CONFIG)

    def test_defaults_are_not_shared(self):
        config = load_config()
        config['verification']['max_n'] = 99
        self.assertEqual(DEFAULT_CONFIG['verification']['max_n'], 25)

    def test_file_values_are_layered_over_defaults(self):
        self.config_path.write_text("[verification]\nmax_n = 12\n")
        config = load_config()
        self.assertEqual(config['verification']['max_n'], 12)
        self.assertEqual(config['verification']['order'], 40)
        self.assertEqual(config['qseries']['window_margin'], 1)

    def test_local_file_wins(self):
        self.config_path.write_text("[verification]\nmax_n = 12\n")
        self.local_path.write_text("[verification]\nmax_n = 7\n")
        self.assertEqual(load_config()['verification']['max_n'], 7)

    def test_explicit_path(self):
        explicit = Path(self.tmp.name) / "other.toml"
        explicit.write_text("[logging]\nlog_level = \"DEBUG\"\n")
        self.assertEqual(load_config(explicit)['logging']['log_level'], "DEBUG")

    def test_missing_explicit_path(self):
        with self.assertRaises(ConfigError):
            load_config(Path(self.tmp.name) / "missing.toml")

    def test_malformed_toml(self):
        self.config_path.write_text("[verification\nmax_n = ")
        with self.assertRaises(ConfigError):
            load_config()

    def test_invalid_values(self):
        self.config_path.write_text("[verification]\nworkers = 0\n")
        with self.assertRaises(ConfigError):
            load_config()
        self.config_path.write_text("[qseries]\nwindow_margin = -1\n")
        with self.assertRaises(ConfigError):
            load_config()

    def test_environment_overrides(self):
        os.environ["COREQUOT_MAX_N"] = "9"
        os.environ["COREQUOT_WORKERS"] = "1"
        config = load_config()
        self.assertEqual(config['verification']['max_n'], 9)
        self.assertEqual(config['verification']['workers'], 1)

    def test_bad_environment_override(self):
        os.environ["COREQUOT_ORDER"] = "lots"
        with self.assertRaises(ConfigError):
            load_config()
        os.environ["COREQUOT_ORDER"] = "0"
        with self.assertRaises(ConfigError):
            load_config()

    def test_wright_cap_must_be_nonnegative(self):
        self.config_path.write_text("[verification]\nwright_max_weight = 10\n")
        self.assertEqual(load_config()['verification']['wright_max_weight'], 10)
        self.config_path.write_text("[verification]\nwright_max_weight = -2\n")
        with self.assertRaises(ConfigError):
            load_config()


class TestValidateConfig(unittest.TestCase):
    def test_defaults_are_valid(self):
        validate_config(copy.deepcopy(DEFAULT_CONFIG))

    def test_rejects_values_set_after_loading(self):
        for key, value in (("workers", 0), ("order", -1), ("max_n", "6"), ("seed", 1.5), ("wright_max_weight", True)):
            with self.subTest(key=key):
                config = copy.deepcopy(DEFAULT_CONFIG)
                config['verification'][key] = value
                with self.assertRaises(ConfigError) as ctx:
                    validate_config(config)
                self.assertIn(key, str(ctx.exception))


if __name__ == '__main__':
    unittest.main()
