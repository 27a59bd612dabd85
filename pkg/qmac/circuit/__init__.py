from ._gate import Gate, LogicalCircuit, Opcode
from ._generators import gen_random_circuit, gen_ghz, gen_qft
from ._generators import gen_graphstate, random_regular_edges
from ._generators import two_qubit_count
from ._parser import parse_circuit_file, serialize_circuit

__all__ = ['Gate', 'LogicalCircuit', 'Opcode', 'gen_random_circuit',
           'gen_ghz', 'gen_qft', 'gen_graphstate', 'random_regular_edges',
           'two_qubit_count', 'parse_circuit_file', 'serialize_circuit']
