import pytest

from qmac import BreakdownReport
from qmac.metrics import REPORT_COLUMNS, mean_over_seeds, report_frame
from qmac.metrics import report_row


def report(n_qc, qsf, mode, seed, makespan=100.0):
    return BreakdownReport(10.0, 20.0, 30.0, 40.0, makespan,
                           {'n_qc': n_qc, 'qsf': qsf, 'mode': mode,
                            'seed': seed})


def test_report_row():
    row = report_row(report(4, 0.5, 'id', 2))
    assert list(row) == REPORT_COLUMNS
    assert row['mode'] == 'id'
    assert row['c_comm_ns'] == 30.0
    assert row['c_comm_share'] == pytest.approx(0.3)


def test_report_frame_is_sorted():
    frame = report_frame([report(4, 0.1, 'ct', 1), report(2, 0.1, 'id', 0),
                          report(4, 1.0, 'ct', 0), report(4, 0.1, 'ct', 0)])
    assert list(frame.columns) == REPORT_COLUMNS
    keys = list(frame[['n_qc', 'qsf', 'seed']].itertuples(index=False,
                                                         name=None))
    assert keys == [(2, 0.1, 0), (4, 1.0, 0), (4, 0.1, 0), (4, 0.1, 1)]


def test_mean_over_seeds():
    frame = report_frame([report(2, 1.0, 'ct', 0, 100.0),
                          report(2, 1.0, 'ct', 1, 200.0),
                          report(2, 1.0, 'id', 0, 50.0)])
    means = mean_over_seeds(frame, ['n_qc', 'qsf', 'mode'])
    assert len(means) == 2
    assert list(means['makespan_ns']) == [150.0, 50.0]
    assert 'seed' not in means.columns
