import pytest

from qmac import CompilationError, Opcode
from qmac.compiler import (Bundle, Local, Placement, Program, TPD, TPS,
                           assign_token_orders, token_chain_length)
from qmac.isa import BitWidths


def test_bundle_emission_order():
    bundle = Bundle((TPS(1, 0, 0, 5), TPD(0, 5), Local(Opcode.H, 0, (1,)),
                     TPS(0, 0, 1, 5), TPD(1, 5)))
    keys = [i.emission_key for i in bundle]
    assert keys == sorted(keys)
    assert bundle.cores == [0, 1]
    bundle.check()


def test_bundle_size_bits():
    widths = BitWidths.for_system(2, 16)
    assert Bundle((Local(Opcode.H, 0, (0,)),)).size_bits(widths) == 29
    teleport = Bundle((TPS(0, 0, 1, 1), TPD(1, 1)))
    assert teleport.size_bits(widths) == 16 + 22 + 9


def test_bundle_check():
    with pytest.raises(CompilationError):
        Bundle((TPS(0, 0, 1, 1),)).check()
    with pytest.raises(CompilationError):
        Bundle((TPS(0, 0, 1, 1), TPD(1, 1), TPS(0, 1, 2, 1),
                TPD(2, 1))).check()
    with pytest.raises(CompilationError):
        Bundle((Local(Opcode.H, 0, (0,)), Local(Opcode.X, 0, (0,)))).check()


def test_assign_token_orders():
    bundle = Bundle((TPS(1, 0, 0, 5), TPD(0, 5), TPS(0, 0, 1, 5),
                     TPD(1, 5)))
    program = Program((bundle,), Placement(2, 16),
                      BitWidths.for_system(2, 16))
    assigned = assign_token_orders(program).bundles[0]
    assert [(t.src_qc, t.token_order) for t in assigned.teleport_sources] \
        == [(0, 0), (1, 1)]
    assert token_chain_length(assigned) == 4


def test_assign_token_orders_overflow():
    bundle = Bundle((TPS(1, 0, 0, 5), TPD(0, 5), TPS(0, 0, 1, 5),
                     TPD(1, 5)))
    program = Program((bundle,), Placement(2, 16),
                      BitWidths(1, 4, to_bits=1))
    with pytest.raises(CompilationError):
        assign_token_orders(program)
