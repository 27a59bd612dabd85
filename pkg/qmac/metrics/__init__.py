from ._breakdown import BreakdownReport, breakdown, classical_fraction
from ._breakdown import speedup, coherence_improvement, fidelity_proxy
from ._breakdown import DEFAULT_T2_NS
from ._report import REPORT_COLUMNS, report_row, report_frame, mean_over_seeds

__all__ = ['BreakdownReport', 'breakdown', 'classical_fraction', 'speedup',
           'coherence_improvement', 'fidelity_proxy', 'DEFAULT_T2_NS',
           'REPORT_COLUMNS', 'report_row', 'report_frame', 'mean_over_seeds']
