import math

from qmac.core.errors import ProtocolError


# Slack for float drift when a node becomes ready exactly as the token
# passes it
TOLERANCE = 1e-9


class CirculatingToken(object):
    '''
    The token of the circulating-token policy. It visits the ring
    ``[CU, QC0, ..., QCn-1]`` in order, one hop per ``pass_latency`` ns,
    whether or not anyone transmits.

    The token position is kept implicitly: it reaches ``position`` at
    ``arrival`` and keeps moving until some node takes it.

    :var ring_size: the number of nodes in the ring
    :var pass_latency: the time of one hop, in ns
    :var park: whether the token stops at its last holder while nobody has
        anything to send, instead of circulating
    '''

    def __init__(self, ring_size, pass_latency=1.0, park=False):
        if ring_size < 1 or pass_latency <= 0:
            raise ValueError('need a non-empty ring and a positive pass time')
        self.ring_size = ring_size
        self.pass_latency = pass_latency
        self.park = park
        self.position = 0
        self.arrival = 0.0
        self.idle_since = 0.0
        self.parked = park

    @property
    def lap(self):
        return self.ring_size * self.pass_latency

    def next_arrival(self, node, ready):
        '''
        The first time, not before ``ready``, the free token reaches
        ``node``.

        :rtype: float
        '''
        hops = (node - self.position) % self.ring_size
        time = self.arrival + hops * self.pass_latency
        if time < ready:
            laps = math.ceil((ready - time) / self.lap - TOLERANCE)
            time = max(time + laps * self.lap, ready)
        return time

    def resume(self, now):
        # A parked token starts moving again from its holder
        self.parked = False
        self.arrival = now
        self.idle_since = now

    def release(self, node, now, anyone_pending):
        '''
        Hands the token on after ``node`` has finished transmitting at
        ``now``.
        '''
        if self.park and not anyone_pending:
            self.position = node
            self.parked = True
            return
        self.position = (node + 1) % self.ring_size
        self.arrival = now + self.pass_latency
        self.idle_since = now


def ct_grant(node, ready, token):
    '''
    When ``node``, pending since ``ready``, is granted the circulating token
    if nobody else holds it first.

    .. code-block:: python


        token = CirculatingToken(ring_size=3)
        ct_grant(2, 0.0, token)  # 2.0, two hops from the CU

    :rtype: float
    '''
    return token.next_arrival(node, ready)


class InstructionToken(object):
    '''
    The token of the instruction-directed policy for one bundle. Only the
    transmitters scheduled by the compiler take part; each passes a token
    packet carrying the next order value.

    :var last_order: the highest token order of the bundle's chain
    :var arrivals: token order to the time its token packet arrived
    :var waiting: token order to the callback of the node waiting for it
    '''

    def __init__(self):
        self.begin(-1)

    def begin(self, last_order):
        self.last_order = last_order
        self.arrivals = {}
        self.waiting = {}
        self.delivered = []

    def grant(self, to, ready, channel_idle):
        '''
        The grant time of the holder of order ``to`` ready at ``ready``, or
        ``None`` while its token packet has not arrived.

        :rtype: float
        '''
        if to == 0:
            return max(ready, channel_idle)
        if to not in self.arrivals:
            return None
        return max(ready, self.arrivals[to])

    def wait(self, to, callback):
        self.waiting[to] = callback

    def deliver(self, to, time):
        '''
        Records the arrival of token packet ``to`` and returns the callback
        waiting for it, if any.

        :raises qmac.ProtocolError: when ``to`` is out of sequence or beyond
            the bundle's chain
        '''
        expected = len(self.delivered) + 1
        if to != expected or to > self.last_order:
            raise ProtocolError(
                'token order {0} arrived, expected {1} (chain ends at '
                '{2})'.format(to, expected, self.last_order))
        self.delivered.append(to)
        self.arrivals[to] = time
        return self.waiting.pop(to, None)


def id_grant(to, ready, channel, token):
    '''
    When the holder of token order ``to`` may transmit: order 0 as soon as
    it is ready and the channel is idle, any other order once its token
    packet has also arrived.

    :rtype: float or None while the token packet is outstanding
    '''
    return token.grant(to, ready, channel.busy_until)
