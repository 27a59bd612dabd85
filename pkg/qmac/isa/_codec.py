from qmac.core.errors import PacketError
from qmac.isa._packets import PacketKind, PACKET_TYPES


def encode(pkt, w):
    '''
    Encodes ``pkt`` as a bit string, most significant bit first: the 3-bit
    type tag followed by each payload field at its fixed width.

    .. code-block:: python


        encode(TP(to=0), widths)  # '10000000000'

    :rtype: str
    :raises qmac.PacketError: when a field value does not fit its width
    '''
    bits = [pkt.kind.tag]
    for (name, width), value in zip(pkt.LAYOUT, pkt._values()):
        bits.append(_field(name, value, getattr(w, width)))
    return ''.join(bits)


def decode(bits, w):
    '''
    Decodes a bit string produced by :func:`encode`.

    :param bits: the bit string, of exactly the length its tag implies
    :paramtype bits: str

    :rtype: qmac.isa.Packet
    :raises qmac.PacketError: on an unknown tag or a truncated payload
    '''
    if any(bit not in '01' for bit in bits):
        raise PacketError('not a bit string: {0!r}'.format(bits))
    if len(bits) < w.type_bits:
        raise PacketError('truncated packet: {0} bits, no type tag'.format(
            len(bits)))
    cls = _packet_type(bits[:w.type_bits])
    expected = w.type_bits + sum(getattr(w, f) for _, f in cls.LAYOUT)
    if len(bits) != expected:
        raise PacketError('{0} packet must be {1} bits, got {2}'.format(
            cls.KIND.name, expected, len(bits)))
    values = []
    offset = w.type_bits
    for _, width in cls.LAYOUT:
        size = getattr(w, width)
        values.append(int(bits[offset:offset + size], 2))
        offset += size
    return cls._build(values)


# PRIVATE

def _field(name, value, width):
    if value < 0 or value >= 2 ** width:
        raise PacketError('{0}={1} does not fit in {2} bits'.format(
            name, value, width))
    return format(value, '0{0}b'.format(width))


def _packet_type(tag):
    try:
        return PACKET_TYPES[PacketKind(int(tag, 2))]
    except ValueError:
        raise PacketError('unknown type tag {0}'.format(tag))
