from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from qmac.circuit import Opcode
from qmac.core.errors import PacketError


class PacketKind(Enum):
    '''
    The packet types and their frozen 3-bit tags.
    '''
    LIP = 0b000
    TPSIP = 0b001
    TPDIP = 0b010
    CBP = 0b011
    TP = 0b100
    EOC = 0b101

    @property
    def tag(self):
        return format(self.value, '03b')


class Packet(object):
    '''
    The base of every classical-plane packet.

    Subclasses list their payload as ``LAYOUT``: ordered ``(field, width)``
    pairs, where ``width`` names a :class:`qmac.isa.BitWidths` attribute.
    '''
    KIND = None
    LAYOUT = ()

    @property
    def kind(self):
        return self.KIND

    # PROTECTED

    # The integer value of every layout field, in layout order
    def _values(self):
        return [getattr(self, name) for name, _ in self.LAYOUT]

    # Rebuilds a packet from the decoded layout values
    @classmethod
    def _build(cls, values):
        return cls(*values)


@dataclass(frozen=True)
class LIP(Packet):
    '''
    Local instruction packet: a gate for core ``qc`` on its local ``slots``.
    The second slot field is zero-filled for single-qubit gates.
    '''
    qc: int
    opcode: Opcode
    slots: Tuple[int, ...]

    KIND = PacketKind.LIP
    LAYOUT = (('qc', 'qc_addr_bits'), ('opcode', 'opcode_bits'),
              ('slot0', 'slot_addr_bits'), ('slot1', 'slot_addr_bits'))

    def __post_init__(self):
        object.__setattr__(self, 'slots', tuple(self.slots))

    def _values(self):
        slots = list(self.slots) + [0] * (2 - len(self.slots))
        return [self.qc, self.opcode.value] + slots

    @classmethod
    def _build(cls, values):
        qc, code, slot0, slot1 = values
        opcode = Opcode(code)
        if not opcode.is_gate:
            raise PacketError('LIP carries a non-gate opcode {0}'.format(
                opcode.name))
        return cls(qc, opcode, (slot0, slot1)[:opcode.arity])


@dataclass(frozen=True)
class TPSIP(Packet):
    '''
    Teleport-source instruction packet, carrying the global address of the
    destination and the token order ``to`` of the teleport.
    '''
    src_qc: int
    src_slot: int
    dst_qc: int
    dst_slot: int
    to: int

    KIND = PacketKind.TPSIP
    LAYOUT = (('src_qc', 'qc_addr_bits'), ('src_slot', 'slot_addr_bits'),
              ('dst_qc', 'qc_addr_bits'), ('dst_slot', 'slot_addr_bits'),
              ('to', 'to_bits'))


@dataclass(frozen=True)
class TPDIP(Packet):
    '''
    Teleport-destination instruction packet.
    '''
    dst_qc: int
    dst_slot: int

    KIND = PacketKind.TPDIP
    LAYOUT = (('dst_qc', 'qc_addr_bits'), ('dst_slot', 'slot_addr_bits'))


@dataclass(frozen=True)
class CBP(Packet):
    '''
    Correction bits packet, sent by the source core to the destination slot.
    '''
    cb: int
    dst_qc: int
    dst_slot: int

    KIND = PacketKind.CBP
    LAYOUT = (('cb', 'cb_bits'), ('dst_qc', 'qc_addr_bits'),
              ('dst_slot', 'slot_addr_bits'))


@dataclass(frozen=True)
class TP(Packet):
    '''
    Token packet granting the channel to token order ``to``.
    '''
    to: int

    KIND = PacketKind.TP
    LAYOUT = (('to', 'to_bits'),)


@dataclass(frozen=True)
class EOC(Packet):
    '''
    End-of-computation packet of core ``qc``.
    '''
    qc: int

    KIND = PacketKind.EOC
    LAYOUT = (('qc', 'qc_addr_bits'),)


# Packet classes by kind, used by the decoder
PACKET_TYPES = {cls.KIND: cls for cls in (LIP, TPSIP, TPDIP, CBP, TP, EOC)}


def size_bits(pkt, w):
    '''
    The size of ``pkt`` on the wire, in bits: the type tag plus every
    fixed-width payload field.

    .. code-block:: python


        size_bits(TP(to=0), BitWidths.for_system(2, 16))  # 11

    :param pkt: the packet
    :paramtype pkt: qmac.isa.Packet

    :param w: the field widths of the system
    :paramtype w: qmac.isa.BitWidths

    :rtype: int
    '''
    return w.type_bits + sum(getattr(w, width) for _, width in pkt.LAYOUT)
