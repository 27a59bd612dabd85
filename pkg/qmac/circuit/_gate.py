from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from qmac.core.errors import CircuitError


class Opcode(Enum):
    '''
    The 4-bit opcode table shared by gates and teleport instructions.

    Gate mnemonics take codes 0 to 13, ``TPS`` and ``TPD`` the last two codes,
    so that every instruction fits the 4-bit opcode field.

    .. code-block:: python


        from qmac import Opcode

        Opcode.from_mnemonic('cx')  # Opcode.CX
    '''
    I = 0  # noqa: E741
    X = 1
    Y = 2
    Z = 3
    H = 4
    S = 5
    SDG = 6
    T = 7
    TDG = 8
    SX = 9
    SXDG = 10
    RZ = 11
    CX = 12
    CZ = 13
    TPS = 14
    TPD = 15

    @property
    def arity(self):
        return 2 if self in (Opcode.CX, Opcode.CZ) else 1

    @property
    def mnemonic(self):
        return self.name.lower()

    @property
    def is_gate(self):
        return self not in (Opcode.TPS, Opcode.TPD)

    @classmethod
    def from_mnemonic(cls, mnemonic):
        opcode = cls.__members__.get(mnemonic.upper())
        if opcode is None or not opcode.is_gate:
            raise CircuitError('unknown mnemonic: {0}'.format(mnemonic))
        return opcode


@dataclass(frozen=True)
class Gate:
    '''
    One logical gate.

    :var opcode: the gate identifier
    :vartype opcode: qmac.Opcode

    :var operands: the logical qubits the gate acts on, control first
    :vartype operands: tuple
    '''
    opcode: Opcode
    operands: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'operands', tuple(self.operands))
        if not self.opcode.is_gate:
            raise CircuitError(
                '{0} is not a gate'.format(self.opcode.mnemonic))
        if len(self.operands) != self.opcode.arity:
            raise CircuitError('{0} expects {1} operand(s), got {2}'.format(
                self.opcode.mnemonic, self.opcode.arity, len(self.operands)))
        if len(set(self.operands)) != len(self.operands):
            raise CircuitError('{0} operands must be distinct: {1}'.format(
                self.opcode.mnemonic, self.operands))
        if any(q < 0 for q in self.operands):
            raise CircuitError('negative qubit index in {0}'.format(
                self.operands))

    @property
    def is_two_qubit(self):
        return self.opcode.arity == 2


@dataclass(frozen=True)
class LogicalCircuit:
    '''
    An ordered gate list over ``n_qubits`` logical qubits. The list order is
    the program order; dependencies follow from shared operands.
    '''
    n_qubits: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'gates', tuple(self.gates))
        if self.n_qubits < 1:
            raise CircuitError('a circuit needs at least one qubit')
        for gate in self.gates:
            if max(gate.operands) >= self.n_qubits:
                raise CircuitError('qubit {0} out of range for {1} '
                                   'qubits'.format(max(gate.operands),
                                                   self.n_qubits))

    def __len__(self):
        return len(self.gates)

    @property
    def two_qubit_count(self):
        return sum(1 for gate in self.gates if gate.is_two_qubit)
