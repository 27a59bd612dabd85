from enum import Enum

from qmac.core.errors import ChannelError
from qmac.engine import Category
from qmac.isa import size_bits


class Mode(Enum):
    '''
    The medium access policies.

    :cvar CT: circulating token over every node
    :cvar ID: instruction-directed token over scheduled transmitters only
    '''
    CT = 'ct'
    ID = 'id'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


# The ring position of the control unit; QC i sits at position i + 1
CU = 0


def node_name(position):
    '''
    The trace name of ring position ``position``: ``"CU"`` or ``"QC<i>"``.
    '''
    return 'CU' if position == CU else 'QC{0}'.format(position - 1)


def transmit_duration(pkt, channel):
    '''
    The time ``pkt`` occupies ``channel``, in ns: its size over the bitrate.

    .. code-block:: python


        transmit_duration(TP(to=1), channel)  # 11 / 12 ns at 12 Gbps

    :rtype: float
    '''
    return size_bits(pkt, channel.widths) / channel.bitrate


class Channel(object):
    '''
    The single shared wireless channel.

    :var bitrate: the channel bitrate, in bits per ns (12 Gbps is ``12.0``)
    :vartype bitrate: float

    :var widths: the packet field widths of the system
    :vartype widths: qmac.isa.BitWidths

    :var mode: the access policy in force
    :vartype mode: qmac.mac.Mode

    :var busy_until: when the last reserved transmission ends
    :vartype busy_until: float

    :var active: the node and packet of the last reserved transmission
    :vartype active: tuple
    '''

    def __init__(self, bitrate, widths, mode, trace):
        if bitrate <= 0:
            raise ValueError('bitrate must be positive')
        self.bitrate = bitrate
        self.widths = widths
        self.mode = Mode.parse(mode)
        self.trace = trace
        self.busy_until = 0.0
        self.active = None

    def transmit(self, position, pkt, start, bundle_idx):
        '''
        Reserves the channel for ``pkt`` from ``start`` and records the
        transmission.

        :param position: the ring position of the transmitting node
        :param pkt: the packet
        :param start: when the transmission starts, in ns
        :param bundle_idx: the bundle the packet belongs to

        :rtype: float, the end of the transmission
        :raises qmac.ChannelError: when the channel is still busy at ``start``
        '''
        if start < self.busy_until:
            raise ChannelError(
                '{0} {1} at {2!r} overlaps {3} until {4!r}'.format(
                    node_name(position), pkt.kind.name, start,
                    self.active, self.busy_until))
        end = start + transmit_duration(pkt, self)
        self.busy_until = end
        self.active = (node_name(position), pkt.kind.name)
        self.trace.record(start, end, node_name(position), pkt.kind.name,
                          Category.C_COMM, bundle_idx, channel=True)
        return end
