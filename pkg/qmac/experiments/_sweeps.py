import pandas as pd

from qmac.core.result import Result
from qmac.experiments._experiment import Experiment
from qmac.metrics import BreakdownReport, mean_over_seeds, report_frame
from qmac.metrics import speedup


# Rows of the seed-averaged sweep tables
SWEEP_KEYS = ['n_qc', 'qsf', 'mode']


class SweepSize(Experiment):
    def run(self, config):
        '''
        Grows the system over the size grid with the workload scaled
        alongside: ``qubits_per_qc * n`` qubits and ``gates_per_qc * n``
        gates on ``n`` cores, seed-averaged per size and mode.

        :rtype: qmac.core.result.Result
        '''
        qsf = self._timing(config).qsf
        jobs = self._sweep_jobs(config, [qsf], config.modes)
        return _averaged('sweep-size', self.simulator.execute(jobs))


class SweepQsf(Experiment):
    def run(self, config):
        '''
        The size sweep repeated for every quantum scaling factor of the
        configuration.

        :rtype: qmac.core.result.Result
        '''
        jobs = self._sweep_jobs(config, config.sweep.qsfs, config.modes)
        return _averaged('sweep-qsf', self.simulator.execute(jobs))


class CompareMac(Experiment):
    def run(self, config):
        '''
        Compares both MAC policies over sizes and scaling factors: the
        classical communication share of each, the ratio of their
        classical communication times and the makespan speedup.

        :rtype: qmac.core.result.Result
        '''
        jobs = self._sweep_jobs(config, config.sweep.qsfs, ('ct', 'id'))
        results = self.simulator.execute(jobs)
        means = mean_over_seeds(report_frame([r.report for r in results]),
                                SWEEP_KEYS)
        ct = means[means['mode'] == 'ct'].set_index(['n_qc', 'qsf'])
        id_ = means[means['mode'] == 'id'].set_index(['n_qc', 'qsf'])
        frame = pd.DataFrame({
            'ct_c_comm_share': ct['c_comm_share'],
            'id_c_comm_share': id_['c_comm_share'],
            'c_comm_ratio': id_['c_comm_ns'] / ct['c_comm_ns'],
            'speedup_pct': _speedups(ct['makespan_ns'], id_['makespan_ns'])
        }).reset_index()
        return Result('compare-mac', frame, results)


def _averaged(command, results):
    frame = report_frame([r.report for r in results])
    return Result(command, mean_over_seeds(frame, SWEEP_KEYS), results)


# Seed-averaged makespans of both policies, aligned on (n_qc, qsf)
def _speedups(ct, id_):
    id_ = id_.reindex(ct.index)
    return pd.Series(
        [speedup(BreakdownReport(makespan=c), BreakdownReport(makespan=i))
         for c, i in zip(ct, id_)], index=ct.index)
