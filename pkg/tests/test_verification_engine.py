import copy
import unittest
from unittest.mock import patch

from corequot.config_manager.config import ConfigError
from corequot.partition_core.partition import DomainError
from corequot.qseries.identities import IdentityReport
from corequot.verification_engine.engine import SweepReport, VerificationEngine, wright_rows

PATCH_PATH_DECOMPOSE = 'corequot.verification_engine.engine.decompose'
PATCH_PATH_ENTRY_BOUND = 'corequot.verification_engine.engine.WRIGHT_ENTRY_BOUND'
PATCH_PATH_MAX_ROW = 'corequot.verification_engine.engine.WRIGHT_MAX_ROW'


class TestSweepReport(unittest.TestCase):
    def test_keeps_only_a_sample_of_failures(self):
        report = SweepReport("demo", sample_limit=2)
        for k in range(5):
            report.check(k == 0, f"case {k}")
        self.assertEqual((report.cases, report.failed), (5, 4))
        self.assertEqual(report.failures, ["case 1", "case 2"])
        self.assertFalse(report.passed)
        self.assertEqual(report.to_payload()["failed"], 4)


class TestVerificationEngine(unittest.TestCase):

    def setUp(self):
        # Small depths keep every sweep fast
        self.sample_config = {
            'logging': {'log_level': 'WARNING', 'log_file': ''},
            'verification': {
                'order': 12,
                'max_n': 6,
                'max_t': 3,
                'workers': 2,
                'seed': 7,
                'failure_sample': 2,
                'wright_max_weight': 6,
            },
            'qseries': {'window_margin': 1},
        }
        self.engine = VerificationEngine(self.sample_config)

    def test_missing_key_raises_config_error(self):
        config = copy.deepcopy(self.sample_config)
        del config['verification']['max_n']
        with self.assertRaises(ConfigError):
            VerificationEngine(config)

    def test_invalid_value_raises_config_error(self):
        config = copy.deepcopy(self.sample_config)
        config['verification']['order'] = 'many'
        with self.assertRaises(ConfigError):
            VerificationEngine(config)

    def test_bijection_sweep_counts_every_case(self):
        [report] = self.engine.run(["bijection"])
        self.assertTrue(report.passed)
        # p(0) + ... + p(6) = 30 partitions, three moduli each
        self.assertEqual(report.cases, 90)

    def test_every_sweep_passes(self):
        results = self.engine.run(list(self.engine.sweeps))
        self.assertEqual([r.name for r in results], sorted(self.engine.sweeps))
        for report in results:
            with self.subTest(sweep=report.name):
                self.assertTrue(report.passed, report.failures)
                self.assertGreater(report.cases, 0)

    def test_wright_grid_has_every_row(self):
        # C(12,0) + C(12,1) + ... + C(12,5)
        self.assertEqual(len(wright_rows()), 1586)
        self.assertEqual(len(set(wright_rows())), 1586)

    @patch(PATCH_PATH_MAX_ROW, 2)
    @patch(PATCH_PATH_ENTRY_BOUND, 4)
    def test_uncapped_wright_sweep_covers_the_whole_grid(self):
        config = copy.deepcopy(self.sample_config)
        config['verification']['wright_max_weight'] = 0
        [report] = VerificationEngine(config).run(["wright"])
        self.assertTrue(report.passed, report.failures)
        # 11 rows give 121 arrays; 30 partitions of n <= 6 at nine offsets give 270 images
        self.assertEqual(report.cases, 121 + 270)

    @patch(PATCH_PATH_MAX_ROW, 2)
    @patch(PATCH_PATH_ENTRY_BOUND, 4)
    def test_wright_cap_keeps_only_light_arrays(self):
        config = copy.deepcopy(self.sample_config)
        config['verification']['wright_max_weight'] = 1
        [report] = VerificationEngine(config).run(["wright"])
        # weight <= 1: (|), (|0), (|1), (|1 0), (0|), (0|0)
        self.assertEqual(report.cases, 6 + 270)

    def test_identity_with_fixed_modulus(self):
        [report] = self.engine.run(["sc"], t=3)
        self.assertIsInstance(report, IdentityReport)
        self.assertEqual(report.t, 3)
        self.assertTrue(report.passed)

    def test_identity_over_default_moduli(self):
        results = self.engine.run(["tcore-theta"])
        self.assertEqual([r.t for r in results], [2, 3, 4, 5])
        self.assertTrue(all(r.passed for r in results))

    def test_modulus_free_identity(self):
        [report] = self.engine.run(["jtp"], t=4)
        self.assertIsNone(report.t)
        self.assertTrue(report.passed)

    def test_unknown_check(self):
        with self.assertRaises(DomainError):
            self.engine.run(["nonsense"])

    def test_available_lists_sweeps_and_identities(self):
        names = self.engine.available()
        self.assertIn("wright", names)
        self.assertIn("constant-term", names)

    @patch(PATCH_PATH_DECOMPOSE)
    def test_errors_are_recorded_as_failures(self, mock_decompose):
        mock_decompose.side_effect = DomainError("boom")
        [report] = self.engine.run(["bijection"])
        self.assertEqual(report.failed, report.cases)
        self.assertEqual(len(report.failures), 2)
        self.assertIn("DomainError: boom", report.failures[0])


if __name__ == '__main__':
    unittest.main()
