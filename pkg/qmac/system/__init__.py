from ._timing import TimingConfig, SystemConfig, QUANTUM_FIELDS
from ._core import QcState
from ._epr import EprGenerator
from ._machine import Machine, Teleport, EocSlot, run_program, eoc_schedule
from ._machine import make_instruction_packet
from ._audit import audit_trace

__all__ = ['TimingConfig', 'SystemConfig', 'QUANTUM_FIELDS', 'QcState',
           'EprGenerator', 'Machine', 'Teleport', 'EocSlot', 'run_program',
           'eoc_schedule', 'make_instruction_packet', 'audit_trace']
