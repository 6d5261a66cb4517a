import pandas as pd

SUMMARY_COLUMNS = ['check', 't', 'kind', 'cases', 'failed', 'passed', 'detail']


def generate_verification_summary(results):
    """
    Builds a summary table from a verification run.

    Args:
        results (list): SweepReport and IdentityReport objects, as returned by
                        VerificationEngine.run.

    Returns:
        pd.DataFrame: One row per check with the columns in SUMMARY_COLUMNS.
    """
    rows = []
    for result in results:
        if hasattr(result, 'cases'):
            rows.append({
                'check': result.name,
                't': None,
                'kind': 'sweep',
                'cases': result.cases,
                'failed': result.failed,
                'passed': result.passed,
                'detail': result.failures[0] if result.failures else '',
            })
        else:
            rows.append({
                'check': result.name,
                't': result.t,
                'kind': 'identity',
                'cases': len(result.comparisons) * (result.order + 1),
                'failed': 0 if result.passed else 1,
                'passed': result.passed,
                'detail': str(result.mismatch) if result.mismatch is not None else '',
            })
    if not rows:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    summary = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    # nullable ints: sweeps have no modulus
    summary['t'] = pd.array([row['t'] for row in rows], dtype='Int64')
    return summary


def coefficient_table(report):
    """
    Lays the series of an identity check side by side, one row per power of q.

    The 'agree' column is True where every series has the same coefficient.

    Args:
        report (IdentityReport): A finished identity check.

    Returns:
        pd.DataFrame: Indexed by n, one column per series label.
    """
    order = report.order
    table = pd.DataFrame(
        {label: [series[n] for n in range(order + 1)] for label, series in report.sides.items()},
        index=pd.RangeIndex(order + 1, name='n'),
        dtype=object,
    )
    table['agree'] = table.nunique(axis=1) == 1
    return table


def summary_totals(summary):
    """Counts of checks, passes and failures in a summary table."""
    return {
        "checks": int(len(summary)),
        "passed": int(summary['passed'].sum()) if not summary.empty else 0,
        "failed": int((~summary['passed'].astype(bool)).sum()) if not summary.empty else 0,
    }
