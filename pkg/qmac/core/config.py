from dataclasses import dataclass, field
from typing import Optional, Tuple

from qmac.metrics import DEFAULT_T2_NS
from qmac.system import SystemConfig


# The circuit generators a workload may name
GENERATORS = ('random', 'ghz', 'qft', 'graphstate')

# The system sizes of the default size sweep
SIZE_GRID = (1, 2, 4, 8, 16, 32, 64, 100)

# The quantum scaling factors of the default QSF sweep
QSF_GRID = (1.0, 0.5, 0.25, 0.125)


@dataclass(frozen=True)
class SystemSection:
    '''
    The ``system`` section: the target machine and execution model.
    '''
    n_qc: int = 2
    slots_per_qc: int = 16
    to_bits: int = 8
    overflow_slots: Optional[int] = None
    epr_capacity: int = 1
    deterministic_epr: bool = False
    ct_service: str = 'exhaustive'
    ct_idle: str = 'circulate'

    def system_config(self):
        return SystemConfig(self.epr_capacity, self.deterministic_epr,
                            self.ct_service, self.ct_idle)


@dataclass(frozen=True)
class WorkloadSection:
    '''
    The ``workload`` section: a generator with its parameters, or the path
    of a circuit file.
    '''
    generator: str = 'ghz'
    params: dict = field(default_factory=lambda: {'n_qubits': 4})
    path: Optional[str] = None


@dataclass(frozen=True)
class SweepSection:
    '''
    The ``sweep`` section. ``full_grid`` replaces ``sizes`` by every size
    from 1 to 100.
    '''
    sizes: Tuple[int, ...] = SIZE_GRID
    qsfs: Tuple[float, ...] = QSF_GRID
    full_grid: bool = False
    qubits_per_qc: int = 16
    gates_per_qc: int = 160
    two_qubit_fraction: float = 0.5

    @property
    def grid(self):
        return tuple(range(1, 101)) if self.full_grid else self.sizes


@dataclass(frozen=True)
class BenchmarksSection:
    '''
    The ``benchmarks`` section. ``files`` maps extra benchmark names to
    circuit files.
    '''
    names: Tuple[str, ...] = ('ghz', 'qft', 'graphstate', 'random')
    n_qubits: int = 25
    n_qc: int = 4
    slots_per_qc: int = 9
    random_gates: int = 250
    files: dict = field(default_factory=dict)


@dataclass(frozen=True)
class OutputSection:
    report: Optional[str] = None
    trace: Optional[str] = None
    manifest: Optional[str] = None


@dataclass(frozen=True)
class ExperimentConfig:
    '''
    One experiment configuration document.

    :var timing: overrides of :class:`qmac.system.TimingConfig` fields
    :var modes: the MAC modes to run, ``"ct"`` and/or ``"id"``
    :var seeds: the seeds every point is run with
    :var t2_ns: the coherence time of the fidelity proxy
    '''
    timing: dict = field(default_factory=dict)
    system: SystemSection = field(default_factory=SystemSection)
    workload: WorkloadSection = field(default_factory=WorkloadSection)
    modes: Tuple[str, ...] = ('ct', 'id')
    seeds: Tuple[int, ...] = (0, 1, 2, 3, 4)
    sweep: SweepSection = field(default_factory=SweepSection)
    benchmarks: BenchmarksSection = field(default_factory=BenchmarksSection)
    t2_ns: float = DEFAULT_T2_NS
    output: OutputSection = field(default_factory=OutputSection)
