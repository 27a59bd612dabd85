import math
from dataclasses import dataclass, field

from qmac.engine import Category


# Default coherence time of the fidelity proxy: 100 us
DEFAULT_T2_NS = 100000.0


@dataclass(frozen=True)
class BreakdownReport:
    '''
    The accumulated busy time of every category in a run, in ns.

    .. code-block:: python


        report = breakdown(trace)
        report.shares['c_comm']

    :var makespan: the end of the last interval of the run
    :var metadata: ``n_qc``, ``qsf``, ``mode`` and ``seed`` of the run
    '''
    q_comm: float = 0.0
    q_comp: float = 0.0
    c_comm: float = 0.0
    c_comp: float = 0.0
    makespan: float = 0.0
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def total(self):
        return self.q_comm + self.q_comp + self.c_comm + self.c_comp

    @property
    def times(self):
        return {category.value: getattr(self, category.value)
                for category in Category}

    @property
    def shares(self):
        '''
        Every category over the sum of all categories, or ``None`` for an
        empty run.

        :rtype: dict or None
        '''
        total = self.total
        if total <= 0:
            return None
        return {name: time / total for name, time in self.times.items()}


def breakdown(trace):
    '''
    Sums the interval durations of ``trace`` by category.

    :param trace: the trace of a finished run
    :paramtype trace: qmac.engine.Trace

    :rtype: qmac.metrics.BreakdownReport
    '''
    times = {category.value: 0.0 for category in Category}
    for interval in trace:
        times[interval.category.value] += interval.duration
    return BreakdownReport(makespan=trace.makespan,
                           metadata=dict(trace.metadata), **times)


def classical_fraction(report):
    '''
    The share of classical communication in the accumulated busy time; 0
    for an empty run.

    :rtype: float
    '''
    total = report.total
    return report.c_comm / total if total > 0 else 0.0


def speedup(ct_report, id_report):
    '''
    The makespan saved by the instruction-directed policy, in percent of
    the circulating-token makespan.

    .. code-block:: python


        speedup(BreakdownReport(makespan=200), BreakdownReport(makespan=100))
        # 50.0

    :rtype: float
    '''
    if ct_report.makespan <= 0:
        return 0.0
    saved = ct_report.makespan - id_report.makespan
    return saved / ct_report.makespan * 100


def fidelity_proxy(makespan, t2=DEFAULT_T2_NS):
    return math.exp(-makespan / t2)


def coherence_improvement(ct_makespan, id_makespan, t2=DEFAULT_T2_NS):
    '''
    The relative gain of the exponential-decay fidelity proxy
    ``exp(-T / t2)`` when running in ``id_makespan`` instead of
    ``ct_makespan``, in percent.

    :param t2: the coherence time, in ns; ``math.inf`` disables decay
    :rtype: float
    :raises ValueError: when ``t2`` is not positive
    '''
    if t2 <= 0:
        raise ValueError('t2 must be positive')
    ct = fidelity_proxy(ct_makespan, t2)
    return (fidelity_proxy(id_makespan, t2) - ct) / ct * 100
