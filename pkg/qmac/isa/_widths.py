from dataclasses import dataclass


def address_bits(count):
    '''
    The bits needed to address ``count`` items, at least one bit.

    :rtype: int
    '''
    return (max(count, 2) - 1).bit_length()


@dataclass(frozen=True)
class BitWidths:
    '''
    The field widths of packets and instruction words, in bits.

    .. code-block:: python


        BitWidths.for_system(n_qc=4, slots_per_qc=9)
        # qc_addr_bits=2, slot_addr_bits=4

    :var type_bits: the packet type tag
    :var opcode_bits: the instruction opcode
    :var qc_addr_bits: a quantum core address
    :var slot_addr_bits: a qubit slot address inside a core
    :var to_bits: a token order value
    :var cb_bits: the teleport correction bits
    :var count_bits: the instruction count in a bundle header
    '''
    qc_addr_bits: int
    slot_addr_bits: int
    to_bits: int = 8
    type_bits: int = 3
    opcode_bits: int = 4
    cb_bits: int = 2
    count_bits: int = 16

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if value < 1:
                raise ValueError('{0} must be positive'.format(name))

    @classmethod
    def for_system(cls, n_qc, slots_per_qc, to_bits=8):
        return cls(qc_addr_bits=address_bits(n_qc),
                   slot_addr_bits=address_bits(slots_per_qc),
                   to_bits=to_bits)

    @property
    def max_token_order(self):
        return 2 ** self.to_bits - 1
