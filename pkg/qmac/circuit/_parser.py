from qmac.core.errors import CircuitError
from qmac.circuit._gate import Gate, LogicalCircuit, Opcode


# The keyword of the header line
HEADER = 'qubits'


def parse_circuit_file(text):
    '''
    Parses a circuit file: a ``qubits <N>`` header, then one
    ``<mnemonic> <q0> [<q1>]`` gate per line. ``#`` starts a comment.

    .. code-block:: python


        parse_circuit_file('qubits 2\\ncx 0 1\\n')

    :param text: the file contents, or any iterable of lines
    :paramtype text: str

    :rtype: qmac.LogicalCircuit
    :raises qmac.CircuitError: with the 1-based ``line`` of the first problem
    '''
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n_qubits = None
    gates = []
    for number, raw in enumerate(lines, start=1):
        fields = raw.split('#', 1)[0].split()
        if not fields:
            continue
        if n_qubits is None:
            n_qubits = _parse_header(fields, number)
        else:
            gates.append(_parse_gate(fields, n_qubits, number))
    if n_qubits is None:
        raise CircuitError('missing "qubits <N>" header', line=len(lines))
    return LogicalCircuit(n_qubits, gates)


def serialize_circuit(circuit):
    '''
    Writes ``circuit`` in the circuit file format read by
    :func:`parse_circuit_file`.

    :rtype: str
    '''
    lines = ['{0} {1}'.format(HEADER, circuit.n_qubits)]
    for gate in circuit.gates:
        operands = ' '.join(str(q) for q in gate.operands)
        lines.append('{0} {1}'.format(gate.opcode.mnemonic, operands))
    return '\n'.join(lines) + '\n'


# PRIVATE

def _parse_header(fields, number):
    if len(fields) != 2 or fields[0] != HEADER:
        raise CircuitError('malformed header, expected "qubits <N>"',
                           line=number)
    n_qubits = _parse_index(fields[1], number)
    if n_qubits < 1:
        raise CircuitError('a circuit needs at least one qubit', line=number)
    return n_qubits


def _parse_gate(fields, n_qubits, number):
    mnemonic = fields[0]
    if mnemonic != mnemonic.lower():
        raise CircuitError('unknown mnemonic: {0}'.format(mnemonic),
                           line=number)
    try:
        opcode = Opcode.from_mnemonic(mnemonic)
        operands = tuple(_parse_index(f, number) for f in fields[1:])
        _check_range(operands, n_qubits)
        return Gate(opcode, operands)
    except CircuitError as error:
        if error.line is not None:
            raise
        raise CircuitError(error.detail, line=number) from error


def _parse_index(field, number):
    if not (field.isascii() and field.isdigit()):
        raise CircuitError('expected a non-negative integer, got {0!r}'.format(
            field), line=number)
    return int(field)


def _check_range(operands, n_qubits):
    for q in operands:
        if q >= n_qubits:
            raise CircuitError('qubit {0} out of range for {1} qubits'.format(
                q, n_qubits))
