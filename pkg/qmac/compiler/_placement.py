import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

from qmac.core.errors import CapacityError


@dataclass(frozen=True)
class Placement:
    '''
    Where each logical qubit lives: a ``(qc_id, slot)`` address.

    :var locations: logical qubit to ``(qc_id, slot)``
    :vartype locations: dict

    :var n_qc: the number of quantum cores
    :vartype n_qc: int

    :var slots_per_qc: the data slots of each core
    :vartype slots_per_qc: int
    '''
    n_qc: int
    slots_per_qc: int
    locations: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        taken = set()
        for qubit, (qc, slot) in self.locations.items():
            if not 0 <= qc < self.n_qc:
                raise CapacityError('qubit {0} placed on missing QC {1}'.format(
                    qubit, qc))
            if (qc, slot) in taken:
                raise CapacityError('qubits share address ({0}, {1})'.format(
                    qc, slot))
            taken.add((qc, slot))

    def __getitem__(self, qubit):
        return self.locations[qubit]

    def covers(self, n_qubits):
        return all(q in self.locations for q in range(n_qubits))

    def to_json(self):
        return {
            'n_qc': self.n_qc,
            'slots_per_qc': self.slots_per_qc,
            'locations': [[q, qc, slot] for q, (qc, slot)
                          in sorted(self.locations.items())]
        }

    @classmethod
    def from_json(cls, data):
        locations = {q: (qc, slot) for q, qc, slot in data['locations']}
        return cls(data['n_qc'], data['slots_per_qc'], locations)


def map_modulo(circuit, n_qc, slots_per_qc):
    '''
    Places logical qubit ``i`` on core ``i mod n_qc`` at slot ``i div n_qc``.

    .. code-block:: python


        map_modulo(circuit, n_qc=2, slots_per_qc=16)[3]  # (1, 1)

    :rtype: qmac.compiler.Placement
    :raises qmac.CapacityError: when the cores can not hold the circuit
    '''
    if n_qc < 1 or slots_per_qc < 1:
        raise CapacityError('need at least one core and one slot')
    needed = math.ceil(circuit.n_qubits / n_qc)
    if needed > slots_per_qc:
        raise CapacityError(
            '{0} qubits need {1} slots per QC, only {2} available'.format(
                circuit.n_qubits, needed, slots_per_qc))
    locations = {q: (q % n_qc, q // n_qc) for q in range(circuit.n_qubits)}
    return Placement(n_qc, slots_per_qc, locations)
