from collections import deque
from itertools import count

from qmac.core.errors import CapacityError, CompilationError
from qmac.isa import BitWidths
from qmac.compiler._placement import Placement
from qmac.compiler._program import Bundle, Local, Program, TPD, TPS


class _Cores(object):
    '''
    The slot occupancy of every core while compiling.
    '''

    def __init__(self, placement, overflow_slots):
        self.locations = dict(placement.locations)
        self.capacity = None if overflow_slots is None else \
            placement.slots_per_qc + overflow_slots
        self.occupied = [set() for _ in range(placement.n_qc)]
        for qc, slot in self.locations.values():
            self.occupied[qc].add(slot)
        self.peak = max([slot + 1 for qc, slot in self.locations.values()],
                        default=1)

    def allocate(self, qc):
        slot = next(s for s in count() if s not in self.occupied[qc])
        if self.capacity is not None and slot >= self.capacity:
            raise CapacityError('QC {0} has no free slot for a teleport'.format(
                qc))
        self.occupied[qc].add(slot)
        self.peak = max(self.peak, slot + 1)
        return slot

    def move(self, qubit, address):
        qc, slot = self.locations[qubit]
        self.occupied[qc].discard(slot)
        self.locations[qubit] = address


def compile_circuit(circuit, placement, overflow_slots=None, to_bits=8):
    '''
    Compiles ``circuit`` into instruction bundles by ASAP layering.

    Every round emits one bundle holding all ready gates that act inside a
    single core. A ready two-qubit gate across cores is preceded by a
    teleport moving its first operand into a fresh slot of the second
    operand's core; each core takes part in at most one teleport as source
    and one as destination per bundle, the rest wait for later rounds.
    Teleported qubits stay where they arrived.

    .. code-block:: python


        placement = map_modulo(circuit, n_qc=2, slots_per_qc=16)
        program = compile_circuit(circuit, placement)

    :param circuit: the logical circuit
    :paramtype circuit: qmac.LogicalCircuit

    :param placement: where every logical qubit starts
    :paramtype placement: qmac.compiler.Placement

    :param overflow_slots: (optional) extra communication slots per core
        for teleported qubits (Default: unbounded)
    :paramtype overflow_slots: int

    :param to_bits: the token order width (Default: ``8``)
    :paramtype to_bits: int

    :rtype: qmac.compiler.Program
    :raises qmac.CapacityError: when a destination core runs out of slots
    '''
    if not placement.covers(circuit.n_qubits):
        raise CompilationError('placement does not cover every qubit')
    cores = _Cores(placement, overflow_slots)
    queues = _operand_queues(circuit)
    bundles = []
    remaining = len(circuit.gates)
    while remaining:
        ready = _ready_gates(circuit, queues)
        instructions, moves = _layer(circuit, ready, queues, cores)
        remaining -= sum(1 for i in instructions if isinstance(i, Local))
        for qubit, address in moves:
            cores.move(qubit, address)
        bundles.append(Bundle(tuple(instructions)))
    slots = max(placement.slots_per_qc, cores.peak)
    widths = BitWidths.for_system(placement.n_qc, slots, to_bits)
    return Program(bundles, placement, widths)


def placements(program):
    '''
    Replays the teleports of ``program``, yielding the placement in force
    before each bundle and the one left after the last.

    :rtype: generator of qmac.compiler.Placement
    '''
    start = program.initial_placement
    slots = max(start.slots_per_qc, 2 ** program.widths.slot_addr_bits)
    by_address = {address: q for q, address in start.locations.items()}
    for bundle in program.bundles:
        yield _placement_of(start.n_qc, slots, by_address)
        for tps in bundle.teleport_sources:
            qubit = by_address.pop((tps.src_qc, tps.src_slot))
            by_address[tps.destination] = qubit
    yield _placement_of(start.n_qc, slots, by_address)


# PRIVATE

def _operand_queues(circuit):
    queues = [deque() for _ in range(circuit.n_qubits)]
    for index, gate in enumerate(circuit.gates):
        for qubit in gate.operands:
            queues[qubit].append(index)
    return queues


# The gates whose operands have no earlier pending gate, in program order
def _ready_gates(circuit, queues):
    fronts = {queue[0] for queue in queues if queue}
    return sorted(index for index in fronts
                  if all(queues[q][0] == index
                         for q in circuit.gates[index].operands))


# Builds one bundle from the ready gates, returning its instructions and the
# qubit moves its teleports make
def _layer(circuit, ready, queues, cores):
    instructions, moves = [], []
    ports = (set(), set())
    for index in ready:
        gate = circuit.gates[index]
        addresses = [cores.locations[q] for q in gate.operands]
        if len({qc for qc, _ in addresses}) == 1:
            instructions.append(_local(gate, addresses, queues))
        elif _claim_ports(addresses, ports):
            (src_qc, src_slot), (dst_qc, _) = addresses
            dst_slot = cores.allocate(dst_qc)
            instructions.append(TPS(src_qc, src_slot, dst_qc, dst_slot))
            instructions.append(TPD(dst_qc, dst_slot))
            moves.append((gate.operands[0], (dst_qc, dst_slot)))
    return instructions, moves


def _local(gate, addresses, queues):
    for qubit in gate.operands:
        queues[qubit].popleft()
    slots = tuple(slot for _, slot in addresses)
    return Local(gate.opcode, addresses[0][0], slots)


# One teleport per core and direction in a bundle
def _claim_ports(addresses, ports):
    (src_qc, _), (dst_qc, _) = addresses
    sources, sinks = ports
    if src_qc in sources or dst_qc in sinks:
        return False
    sources.add(src_qc)
    sinks.add(dst_qc)
    return True


def _placement_of(n_qc, slots, by_address):
    locations = {q: address for address, q in by_address.items()}
    return Placement(n_qc, slots, locations)
