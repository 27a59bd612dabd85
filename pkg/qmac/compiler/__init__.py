from ._placement import Placement, map_modulo
from ._program import Bundle, Local, Program, TPD, TPS
from ._scheduler import compile_circuit, placements
from ._token_order import assign_token_orders, token_chain_length


def build_program(circuit, n_qc, slots_per_qc, overflow_slots=None,
                  to_bits=8):
    '''
    Maps ``circuit`` modulo ``n_qc``, compiles it and assigns token orders.

    :rtype: qmac.compiler.Program
    '''
    placement = map_modulo(circuit, n_qc, slots_per_qc)
    program = compile_circuit(circuit, placement, overflow_slots, to_bits)
    return assign_token_orders(program)


__all__ = ['Placement', 'map_modulo', 'Bundle', 'Local', 'Program', 'TPD',
           'TPS', 'compile_circuit', 'placements', 'assign_token_orders',
           'token_chain_length', 'build_program']
