from ._widths import BitWidths, address_bits
from ._packets import Packet, PacketKind, LIP, TPSIP, TPDIP, CBP, TP, EOC
from ._packets import size_bits
from ._codec import encode, decode

__all__ = ['BitWidths', 'address_bits', 'Packet', 'PacketKind', 'LIP',
           'TPSIP', 'TPDIP', 'CBP', 'TP', 'EOC', 'size_bits', 'encode',
           'decode']
