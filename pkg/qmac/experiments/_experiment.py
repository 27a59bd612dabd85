from qmac.core.decorator import Decorator
from qmac.core.job import Job, Workload


class Experiment(Decorator, object):
    '''
    The base of every experiment: builds jobs from a configuration with the
    simulator's defaults.
    '''

    # PROTECTED

    # The latencies of a job: simulator defaults, then the configuration's
    # overrides, then the experiment's own
    def _timing(self, config, **overrides):
        return self.simulator.timing.with_overrides(
            **dict(config.timing, **overrides))

    def _job(self, config, workload, n_qc, slots_per_qc, mode, seed, timing,
             label=None):
        system = config.system
        return Job(workload, n_qc, slots_per_qc, mode, seed, timing,
                   system.system_config(), system.to_bits,
                   system.overflow_slots, label,
                   keep_trace=config.output.trace is not None)

    # One random circuit per size and seed, scaled with the core count
    def _sweep_jobs(self, config, qsfs, modes):
        sweep = config.sweep
        jobs = []
        for qsf in qsfs:
            timing = self._timing(config, qsf=qsf)
            for n_qc in sweep.grid:
                workload = Workload('random', {
                    'n_qubits': sweep.qubits_per_qc * n_qc,
                    'n_gates': sweep.gates_per_qc * n_qc,
                    'two_qubit_fraction': sweep.two_qubit_fraction
                })
                jobs += [self._job(config, workload, n_qc,
                                   sweep.qubits_per_qc, mode, seed, timing)
                         for mode in modes for seed in config.seeds]
        return jobs


def workload_of(section):
    '''
    The workload a configuration's ``workload`` section describes.

    :rtype: qmac.core.job.Workload
    '''
    if section.path is not None:
        with open(section.path) as file:
            return Workload(text=file.read())
    return Workload(section.generator, dict(section.params))
