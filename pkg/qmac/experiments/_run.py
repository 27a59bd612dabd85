from qmac.core.result import Result
from qmac.experiments._experiment import Experiment, workload_of
from qmac.metrics import report_frame


class Run(Experiment):
    def run(self, config):
        '''
        Runs the configured workload on the configured system, once per
        mode and seed.

        .. code-block:: python


            simulator.experiments.run.run(simulator.load_config())

        :param config: the experiment configuration
        :paramtype config: qmac.core.config.ExperimentConfig

        :rtype: qmac.core.result.Result, one report row per mode and seed
        :raises qmac.SimulationError: if a run fails
        '''
        system = config.system
        workload = workload_of(config.workload)
        timing = self._timing(config)
        jobs = [self._job(config, workload, system.n_qc, system.slots_per_qc,
                          mode, seed, timing)
                for mode in config.modes for seed in config.seeds]
        results = self.simulator.execute(jobs)
        return Result('run', report_frame([r.report for r in results]),
                      results)
