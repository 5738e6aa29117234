"""CSV output for evaluation runs.

Summary tables (one row per sweep arm) and the per-trial error table used for
CDF plots. Header row, ',' separator, '.' decimals, LF endings, metres with 4
decimals, so output is byte-stable for a given seed.
"""
import csv
import io
from collections.abc import Sequence

from evaluation import ErrorReport, SpacingRow, SweepRow

SWEEP_HEADERS = ['k', 'mean_m', 'median_m', 'p95_m']
SPACING_HEADERS = ['spacing_m', 'entries', 'k', 'mean_m', 'median_m', 'p95_m']
TRIAL_HEADERS = ['trial', 'true_x', 'true_y', 'est_x', 'est_y', 'error_m']


def _m(value: float) -> str:
    return f"{value:.4f}"


def _render(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    return _render(SWEEP_HEADERS, [[r.k, _m(r.mean_m), _m(r.median_m), _m(r.p95_m)] for r in rows])


def spacing_csv(rows: Sequence[SpacingRow]) -> str:
    return _render(SPACING_HEADERS, [
        [f"{r.spacing_m:g}", r.entries, r.k, _m(r.mean_m), _m(r.median_m), _m(r.p95_m)] for r in rows
    ])


def trials_csv(report: ErrorReport) -> str:
    return _render(TRIAL_HEADERS, [
        [r.trial.index, _m(r.trial.true_pos[0]), _m(r.trial.true_pos[1]),
         _m(r.estimate_pos[0]), _m(r.estimate_pos[1]), _m(r.error_m)]
        for r in report.results
    ])
