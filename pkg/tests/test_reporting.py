import unittest

import pandas as pd

from corequot.analytics_reporting.renderer import render
from corequot.analytics_reporting.reporter import (
    SUMMARY_COLUMNS,
    coefficient_table,
    generate_verification_summary,
    summary_totals,
)
from corequot.partition_core.partition import EMPTY, Partition
from corequot.qseries.identities import IdentityReport
from corequot.qseries.series import QSeries
from corequot.verification_engine.engine import SweepReport


def _identity(passing):
    report = IdentityReport("demo", 2, t=3)
    report.compare("left", QSeries([1, 1, 2], 2), "right", QSeries([1, 1, 2 if passing else 3], 2))
    return report


class TestSummary(unittest.TestCase):
    def test_empty_results(self):
        summary = generate_verification_summary([])
        self.assertTrue(summary.empty)
        self.assertEqual(list(summary.columns), SUMMARY_COLUMNS)
        self.assertEqual(summary_totals(summary), {"checks": 0, "passed": 0, "failed": 0})

    def test_sweeps_and_identities(self):
        sweep = SweepReport("bijection")
        sweep.check(True, "a")
        sweep.check(False, "b")
        summary = generate_verification_summary([sweep, _identity(True), _identity(False)])
        self.assertIsInstance(summary, pd.DataFrame)
        self.assertEqual(list(summary['kind']), ['sweep', 'identity', 'identity'])
        self.assertEqual(summary.loc[0, 'detail'], "b")
        self.assertEqual(summary.loc[1, 'cases'], 3)
        self.assertEqual(summary.loc[2, 'detail'], "q^2: left has 2, right has 3")
        self.assertEqual(summary_totals(summary), {"checks": 3, "passed": 1, "failed": 2})

    def test_modulus_column_stays_integer(self):
        summary = generate_verification_summary([SweepReport("wright"), _identity(True)])
        self.assertEqual(str(summary['t'].dtype), 'Int64')
        self.assertTrue(pd.isna(summary.loc[0, 't']))
        self.assertEqual(summary.loc[1, 't'], 3)
        text = summary.to_string(index=False)
        self.assertNotIn("3.0", text)
        self.assertNotIn("NaN", text)

    def test_coefficient_table(self):
        table = coefficient_table(_identity(False))
        self.assertEqual(list(table.columns), ['left', 'right', 'agree'])
        self.assertEqual(table.index.name, 'n')
        self.assertEqual(list(table['agree']), [True, True, False])


class TestRender(unittest.TestCase):
    def test_stars(self):
        self.assertEqual(render(Partition((3, 1))), "***\n*")
        self.assertEqual(render(EMPTY), "(empty)")

    def test_hook_lengths(self):
        self.assertEqual(render(Partition((2, 1)), hooks=True), "3 1\n1")
        lines = render(Partition((8, 7, 7, 4, 4, 2)), hooks=True).split("\n")
        self.assertEqual(lines[0], "13 12 10  9  6  5  4  1")
        self.assertEqual(lines[-1], " 2  1")


if __name__ == '__main__':
    unittest.main()
