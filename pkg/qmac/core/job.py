from dataclasses import dataclass, field
from typing import Any, Optional

from qmac.circuit import (gen_ghz, gen_graphstate, gen_qft,
                          gen_random_circuit, parse_circuit_file,
                          random_regular_edges)
from qmac.compiler import build_program
from qmac.metrics import breakdown
from qmac.system import Machine, SystemConfig, TimingConfig


@dataclass(frozen=True)
class Workload:
    '''
    How to obtain the circuit of a job: a generator name with its
    parameters, or the text of a circuit file.

    .. code-block:: python


        Workload('random', {'n_qubits': 32, 'n_gates': 320}).build(seed=1)
    '''
    generator: Optional[str] = None
    params: dict = field(default_factory=dict)
    text: Optional[str] = None

    def build(self, seed):
        '''
        The circuit of this workload. Random generators draw from ``seed``
        unless the parameters carry their own.

        :rtype: qmac.LogicalCircuit
        '''
        if self.text is not None:
            return parse_circuit_file(self.text)
        params = dict(self.params)
        seed = params.pop('seed', seed)
        if self.generator == 'random':
            return gen_random_circuit(params['n_qubits'], params['n_gates'],
                                      params.get('two_qubit_fraction', 0.5),
                                      seed=seed)
        if self.generator == 'ghz':
            return gen_ghz(params['n_qubits'])
        if self.generator == 'qft':
            return gen_qft(params['n_qubits'])
        n_qubits = params['n_qubits']
        edges = params.get('edges') or random_regular_edges(
            n_qubits, params.get('degree', 2), seed=seed)
        return gen_graphstate([tuple(e) for e in edges], n_qubits)


@dataclass(frozen=True)
class Job:
    '''
    One simulation point: a workload compiled for a system and run under
    one MAC mode with one seed. Jobs hold plain values only, so they can be
    sent to worker processes.
    '''
    workload: Workload
    n_qc: int
    slots_per_qc: int
    mode: str
    seed: int
    timing: TimingConfig = field(default_factory=TimingConfig)
    system: SystemConfig = field(default_factory=SystemConfig)
    to_bits: int = 8
    overflow_slots: Optional[int] = None
    label: Any = None
    keep_trace: bool = False

    def run(self):
        '''
        Builds, compiles and runs the job.

        :rtype: qmac.core.job.JobResult
        '''
        circuit = self.workload.build(self.seed)
        program = build_program(circuit, self.n_qc, self.slots_per_qc,
                                self.overflow_slots, self.to_bits)
        machine = Machine(program, self.timing, self.mode, self.seed,
                          self.system)
        trace = machine.run()
        return JobResult(self, breakdown(trace), machine.queue.popped,
                         program.teleport_count,
                         trace if self.keep_trace else None)


@dataclass(frozen=True)
class JobResult:
    '''
    What a job produced.

    :var report: the category breakdown of the run
    :var events: the number of events the run processed
    :var teleports: the number of teleports of the compiled program
    :var trace: the full trace, when the job asked to keep it
    '''
    job: Job
    report: Any
    events: int
    teleports: int
    trace: Any = None


def run_job(job):
    return job.run()
