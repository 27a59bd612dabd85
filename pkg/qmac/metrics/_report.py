import pandas as pd

from qmac.metrics._breakdown import classical_fraction


# Column order of the report CSV
REPORT_COLUMNS = ['n_qc', 'qsf', 'mode', 'seed', 'q_comm_ns', 'q_comp_ns',
                  'c_comm_ns', 'c_comp_ns', 'makespan_ns', 'c_comm_share']


def report_row(report):
    '''
    One report CSV row for ``report``.

    :rtype: dict
    '''
    row = {key: report.metadata.get(key) for key in REPORT_COLUMNS[:4]}
    for name, time in report.times.items():
        row[name + '_ns'] = time
    row['makespan_ns'] = report.makespan
    row['c_comm_share'] = classical_fraction(report)
    return row


def report_frame(reports):
    '''
    The report CSV as a :class:`pandas.DataFrame`, sorted by
    ``(n_qc, qsf, mode, seed)`` whatever order the reports came in.

    :rtype: pandas.DataFrame
    '''
    frame = pd.DataFrame([report_row(r) for r in reports],
                         columns=REPORT_COLUMNS)
    return _sorted(frame, REPORT_COLUMNS[:4])


def mean_over_seeds(frame, keys):
    '''
    Averages every numeric report column over the seeds of each ``keys``
    group.

    :rtype: pandas.DataFrame
    '''
    values = [c for c in REPORT_COLUMNS[4:] if c in frame.columns]
    return frame.groupby(keys, sort=True, as_index=False)[values].mean()


# PRIVATE

def _sorted(frame, keys):
    return frame.sort_values(keys, ascending=[k != 'qsf' for k in keys],
                             kind='mergesort').reset_index(drop=True)
