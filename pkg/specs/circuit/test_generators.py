import pytest

from qmac import (CircuitError, Opcode, gen_ghz, gen_graphstate, gen_qft,
                  gen_random_circuit)
from qmac.circuit import random_regular_edges, two_qubit_count


def test_random_circuit_shape():
    circuit = gen_random_circuit(16, 160, 0.5, seed=7)
    assert circuit.n_qubits == 16
    assert len(circuit) == 160
    assert circuit.two_qubit_count == 80
    singles = {g.opcode for g in circuit.gates if not g.is_two_qubit}
    assert singles <= {Opcode.RZ, Opcode.SX, Opcode.X}
    doubles = {g.opcode for g in circuit.gates if g.is_two_qubit}
    assert doubles == {Opcode.CX}


def test_random_circuit_is_seeded():
    assert gen_random_circuit(8, 50, seed=3) == gen_random_circuit(8, 50,
                                                                   seed=3)
    assert gen_random_circuit(8, 50, seed=3) != gen_random_circuit(8, 50,
                                                                   seed=4)


def test_two_qubit_count_rounds_half_up():
    assert two_qubit_count(1, 0.5) == 1
    assert two_qubit_count(3, 0.5) == 2
    assert two_qubit_count(10, 0.0) == 0
    assert two_qubit_count(10, 1.0) == 10


def test_random_circuit_edge_cases():
    assert len(gen_random_circuit(4, 0)) == 0
    assert gen_random_circuit(1, 10, 0.0).two_qubit_count == 0
    with pytest.raises(CircuitError):
        gen_random_circuit(1, 10, 0.5)
    with pytest.raises(CircuitError):
        gen_random_circuit(4, 10, 1.5)


def test_ghz():
    circuit = gen_ghz(4)
    assert [g.opcode for g in circuit.gates] == [Opcode.H] + [Opcode.CX] * 3
    assert [g.operands for g in circuit.gates[1:]] == [(0, 1), (1, 2),
                                                      (2, 3)]
    assert len(gen_ghz(1)) == 1


def test_qft_gate_counts():
    assert len(gen_qft(1)) == 3
    assert len(gen_qft(2)) == 14
    assert len(gen_qft(3)) == 27
    assert {g.opcode for g in gen_qft(3).gates} == {Opcode.RZ, Opcode.SX,
                                                    Opcode.CX}


def test_graphstate():
    circuit = gen_graphstate([(0, 1), (1, 2)], 3)
    assert len(circuit) == 3 + 2 * 7
    assert circuit.two_qubit_count == 2
    assert circuit.gates[0].opcode is Opcode.H


def test_graphstate_rejects_bad_edges():
    with pytest.raises(CircuitError):
        gen_graphstate([(1, 1)], 3)
    with pytest.raises(CircuitError):
        gen_graphstate([(0, 1), (1, 0)], 3)
    with pytest.raises(CircuitError):
        gen_graphstate([(0, 3)], 3)


def test_random_regular_edges():
    edges = random_regular_edges(25, seed=1)
    assert len(edges) == 25
    degree = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    assert set(degree.values()) == {2}
    assert edges == random_regular_edges(25, seed=1)
