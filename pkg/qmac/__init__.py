from .simulator import Simulator
from .version import version

from .circuit import Gate, LogicalCircuit, Opcode
from .circuit import gen_random_circuit, gen_ghz, gen_qft, gen_graphstate
from .circuit import parse_circuit_file, serialize_circuit
from .compiler import Program, build_program
from .engine import Trace
from .mac import Mode
from .system import TimingConfig, SystemConfig, run_program, audit_trace
from .metrics import BreakdownReport, breakdown, classical_fraction
from .metrics import speedup, coherence_improvement
from .core.config import ExperimentConfig
from .core.job import Job, Workload
from .core.result import Result
from .core.errors import SimulationError, CircuitError, CapacityError
from .core.errors import CompilationError, PacketError, CausalityError
from .core.errors import ChannelError, ProtocolError, DeadlockError
from .core.errors import ConfigError

__all__ = [
    'Simulator', 'version', 'Gate', 'LogicalCircuit', 'Opcode',
    'gen_random_circuit', 'gen_ghz', 'gen_qft', 'gen_graphstate',
    'parse_circuit_file', 'serialize_circuit', 'Program', 'build_program',
    'Trace', 'Mode', 'TimingConfig', 'SystemConfig', 'run_program',
    'audit_trace', 'BreakdownReport', 'breakdown', 'classical_fraction',
    'speedup', 'coherence_improvement', 'ExperimentConfig', 'Job',
    'Workload', 'Result', 'SimulationError', 'CircuitError',
    'CapacityError', 'CompilationError', 'PacketError', 'CausalityError',
    'ChannelError', 'ProtocolError', 'DeadlockError', 'ConfigError'
]
