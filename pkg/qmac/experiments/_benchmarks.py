import pandas as pd

from qmac.core.job import Workload
from qmac.core.result import Result
from qmac.experiments._experiment import Experiment
from qmac.metrics import BreakdownReport, coherence_improvement, speedup


# Columns of the benchmark table
BENCHMARK_COLUMNS = ['benchmark', 'n_qubits', 'n_qc', 'teleports',
                     'ct_makespan_ns', 'id_makespan_ns', 'improvement_pct']


class Benchmarks(Experiment):
    def run(self, config):
        '''
        Runs every benchmark circuit under both MAC policies and reports
        the seed-averaged makespans and the improvement of the
        instruction-directed policy.

        .. code-block:: python


            table = simulator.experiments.benchmarks.run(config).frame

        :rtype: qmac.core.result.Result
        '''
        results = self._execute(config)
        return Result('benchmarks', self._table(config, results), results)

    # PROTECTED

    def _execute(self, config):
        section = config.benchmarks
        timing = self._timing(config)
        jobs = [self._job(config, self._workload(section, name),
                          section.n_qc, section.slots_per_qc, mode, seed,
                          timing, label=name)
                for name in section.names
                for mode in ('ct', 'id') for seed in config.seeds]
        return self.simulator.execute(jobs)

    @staticmethod
    def _workload(section, name):
        if name in section.files:
            with open(section.files[name]) as file:
                return Workload(text=file.read())
        params = {'n_qubits': section.n_qubits}
        if name == 'random':
            params['n_gates'] = section.random_gates
        return Workload(name, params)

    @staticmethod
    def _table(config, results):
        runs = pd.DataFrame(
            [(r.job.label, r.job.mode, r.report.makespan, r.teleports)
             for r in results],
            columns=['benchmark', 'mode', 'makespan_ns', 'teleports'])
        means = runs.groupby(['benchmark', 'mode'], sort=False).mean()
        rows = []
        for name in config.benchmarks.names:
            ct = means.loc[(name, 'ct')]
            id_ = means.loc[(name, 'id')]
            rows.append((name, config.benchmarks.n_qubits,
                         config.benchmarks.n_qc, ct['teleports'],
                         ct['makespan_ns'], id_['makespan_ns'],
                         speedup(BreakdownReport(makespan=ct['makespan_ns']),
                                 BreakdownReport(makespan=id_['makespan_ns']))))
        return pd.DataFrame(rows, columns=BENCHMARK_COLUMNS)


class Coherence(Benchmarks):
    def run(self, config):
        '''
        The benchmark table with the relative gain of the exponential
        fidelity proxy for the configured ``t2_ns``.

        :rtype: qmac.core.result.Result
        '''
        results = self._execute(config)
        frame = self._table(config, results)
        frame['t2_ns'] = config.t2_ns
        frame['coherence_improvement_pct'] = [
            coherence_improvement(ct, id_, config.t2_ns)
            for ct, id_ in zip(frame['ct_makespan_ns'],
                              frame['id_makespan_ns'])]
        return Result('coherence', frame, results)
