from dataclasses import replace

from qmac.core.errors import CompilationError
from qmac.compiler._program import Bundle, TPS


def assign_token_orders(program):
    '''
    Numbers the TPS instructions of every bundle 0, 1, 2, ... in dispatcher
    emission order. Other instructions are left untouched; orders already
    present are recomputed.

    :param program: the compiled program
    :paramtype program: qmac.compiler.Program

    :rtype: qmac.compiler.Program
    :raises qmac.CompilationError: when a bundle needs more token orders
        than the token order field can carry
    '''
    return program.with_bundles(
        _assign(bundle, program.widths) for bundle in program.bundles)


def token_chain_length(bundle):
    '''
    The number of channel grants of a bundle's execution phase: one per TPS
    and one end-of-computation slot per participating core.

    :rtype: int
    '''
    return len(bundle.teleport_sources) + len(bundle.cores)


# PRIVATE

def _assign(bundle, widths):
    if token_chain_length(bundle) - 1 > widths.max_token_order:
        raise CompilationError(
            'bundle needs {0} token orders, {1} bits are too few'.format(
                token_chain_length(bundle), widths.to_bits))
    order = 0
    instructions = []
    for instruction in bundle:
        if isinstance(instruction, TPS):
            instruction = replace(instruction, token_order=order)
            order += 1
        instructions.append(instruction)
    return Bundle(tuple(instructions))
