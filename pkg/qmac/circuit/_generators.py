import math

import networkx as nx

from qmac.core.errors import CircuitError
from qmac.engine import Rng, CIRCUIT_GEN, GRAPH_GEN
from qmac.circuit._gate import Gate, LogicalCircuit, Opcode


# Single-qubit gates drawn by the random generator
RANDOM_SINGLE_QUBIT = (Opcode.RZ, Opcode.SX, Opcode.X)


def gen_random_circuit(n_qubits, n_gates, two_qubit_fraction=0.5, seed=0):
    '''
    A random circuit of ``n_gates`` gates, ``round(n_gates * fraction)`` of
    them CX gates on two distinct qubits and the rest drawn from RZ, SX and X.

    .. code-block:: python


        circuit = gen_random_circuit(16, 160, 0.5, seed=7)

    :param n_qubits: the number of logical qubits
    :param n_gates: the number of gates
    :param two_qubit_fraction: the share of two-qubit gates, in ``[0, 1]``
    :param seed: the seed of the ``circuit-gen`` stream

    :rtype: qmac.LogicalCircuit
    :raises qmac.CircuitError: on an impossible request
    '''
    if n_qubits < 1:
        raise CircuitError('n_qubits must be at least 1')
    if not 0 <= two_qubit_fraction <= 1:
        raise CircuitError('two_qubit_fraction must lie in [0, 1]')
    n_two = two_qubit_count(n_gates, two_qubit_fraction)
    if n_two > 0 and n_qubits < 2:
        raise CircuitError('two-qubit gates need at least 2 qubits')

    stream = Rng(seed).stream(CIRCUIT_GEN)
    kinds = stream.permutation([True] * n_two + [False] * (n_gates - n_two))
    gates = [_random_gate(stream, n_qubits, bool(kind)) for kind in kinds]
    return LogicalCircuit(n_qubits, gates)


def two_qubit_count(n_gates, fraction):
    # Rounds half up, so 1 gate at 0.5 yields one CX
    return int(math.floor(n_gates * fraction + 0.5))


def gen_ghz(n_qubits):
    '''
    The GHZ ladder: H on qubit 0, then CX(i, i+1) down the register.

    :rtype: qmac.LogicalCircuit
    '''
    _require_qubits(n_qubits)
    gates = [Gate(Opcode.H, (0,))]
    gates += [Gate(Opcode.CX, (i, i + 1)) for i in range(n_qubits - 1)]
    return LogicalCircuit(n_qubits, gates)


def gen_qft(n_qubits):
    '''
    The quantum Fourier transform in the native set: Hadamards as RZ-SX-RZ,
    controlled phases as RZ-CX-RZ-CX-RZ and the closing swap network as
    three CX per swap.

    :rtype: qmac.LogicalCircuit
    '''
    _require_qubits(n_qubits)
    gates = []
    for target in range(n_qubits):
        gates += native_h(target)
        for control in range(target + 1, n_qubits):
            gates += native_cphase(control, target)
    for low in range(n_qubits // 2):
        gates += native_swap(low, n_qubits - 1 - low)
    return LogicalCircuit(n_qubits, gates)


def gen_graphstate(edges, n_qubits):
    '''
    A graph state: H on every qubit, then one CZ per edge in input order,
    each CZ written as H-CX-H on its second vertex.

    :param edges: the undirected edges, as ``(u, v)`` pairs
    :param n_qubits: the number of vertices

    :rtype: qmac.LogicalCircuit
    :raises qmac.CircuitError: on self-loops, duplicate or out-of-range edges
    '''
    _require_qubits(n_qubits)
    seen = set()
    gates = [Gate(Opcode.H, (q,)) for q in range(n_qubits)]
    for u, v in edges:
        _check_edge(u, v, n_qubits, seen)
        gates += native_cz(u, v)
    return LogicalCircuit(n_qubits, gates)


def random_regular_edges(n_qubits, degree=2, seed=0):
    '''
    The edges of a seeded random ``degree``-regular graph, as used for the
    graphstate benchmark.

    :rtype: list
    '''
    seed = int(Rng(seed).stream(GRAPH_GEN).integers(2 ** 31))
    graph = nx.random_regular_graph(degree, n_qubits, seed=seed)
    return sorted(tuple(sorted(edge)) for edge in graph.edges())


# Fixed identities into the native set {RZ, SX, X, CX}

def native_h(q):
    return [Gate(Opcode.RZ, (q,)), Gate(Opcode.SX, (q,)),
            Gate(Opcode.RZ, (q,))]


def native_cz(control, target):
    return native_h(target) + [Gate(Opcode.CX, (control, target))] + \
        native_h(target)


def native_cphase(control, target):
    return [Gate(Opcode.RZ, (control,)), Gate(Opcode.CX, (control, target)),
            Gate(Opcode.RZ, (target,)), Gate(Opcode.CX, (control, target)),
            Gate(Opcode.RZ, (target,))]


def native_swap(a, b):
    return [Gate(Opcode.CX, (a, b)), Gate(Opcode.CX, (b, a)),
            Gate(Opcode.CX, (a, b))]


# PRIVATE

def _random_gate(stream, n_qubits, two_qubit):
    if two_qubit:
        a, b = stream.choice(n_qubits, size=2, replace=False)
        return Gate(Opcode.CX, (int(a), int(b)))
    pick = int(stream.integers(len(RANDOM_SINGLE_QUBIT)))
    return Gate(RANDOM_SINGLE_QUBIT[pick], (int(stream.integers(n_qubits)),))


def _require_qubits(n_qubits):
    if n_qubits < 1:
        raise CircuitError('n_qubits must be at least 1')


def _check_edge(u, v, n_qubits, seen):
    if u == v:
        raise CircuitError('self-loop on vertex {0}'.format(u))
    if not (0 <= u < n_qubits and 0 <= v < n_qubits):
        raise CircuitError('edge ({0}, {1}) out of range'.format(u, v))
    key = frozenset((u, v))
    if key in seen:
        raise CircuitError('duplicate edge ({0}, {1})'.format(u, v))
    seen.add(key)
