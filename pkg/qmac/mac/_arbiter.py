from collections import deque
from dataclasses import dataclass
from typing import Any, Callable

from qmac.engine import Category, TOKEN_PASS


@dataclass
class Request:
    '''
    A packet waiting for the channel.

    :var position: the ring position of the sender
    :var pkt: the packet
    :var ready: when the packet became pending
    :var bundle_idx: the bundle the packet belongs to
    :var on_sent: called with ``(start, end)`` once the packet is scheduled
    '''
    position: int
    pkt: Any
    ready: float
    bundle_idx: int
    on_sent: Callable[[float, float], None]


class CtArbiter(object):
    '''
    Grants the channel under the circulating-token policy.

    Pending packets wait at their node until the token reaches it. With
    exhaustive service the holder sends everything pending at grant time
    before releasing the token; otherwise it sends one packet per visit.
    Circulation between grants is recorded as ``token-pass`` intervals.

    :var token: the circulating token
    :var channel: the shared channel
    :var schedule: the event scheduler, ``schedule(time, kind, payload)``
    '''

    def __init__(self, token, channel, schedule, exhaustive=True):
        self.token = token
        self.channel = channel
        self.schedule = schedule
        self.exhaustive = exhaustive
        self.pending = {}
        self.holder = None
        self.version = 0

    def request(self, request, now):
        '''
        Queues ``request`` at its node and re-plans the next grant.
        '''
        if self.holder is None and self.token.parked:
            self.token.resume(now)
        self.pending.setdefault(request.position, deque()).append(request)
        if self.holder is None:
            self._plan(now)

    @property
    def pending_count(self):
        return sum(len(queue) for queue in self.pending.values())

    # PRIVATE

    # Schedules a grant for the first pending node the token will reach.
    # Earlier plans become stale through the version counter.
    def _plan(self, now):
        self.version += 1
        if not self.pending:
            return
        position, time = min(
            ((p, self.token.next_arrival(p, queue[0].ready))
             for p, queue in self.pending.items()),
            key=lambda candidate: candidate[1])
        time = max(time, now)
        self.schedule(time, 'ct-grant',
                      (self._grant, (self.version, position, time)))

    def _grant(self, version, position, time):
        if version != self.version:
            return
        queue = self.pending[position]
        batch = list(queue) if self.exhaustive else [queue[0]]
        for _ in batch:
            queue.popleft()
        if not queue:
            del self.pending[position]
        start = self._circulate_until(time, batch[0].bundle_idx)
        self.holder = position
        for request in batch:
            end = self.channel.transmit(position, request.pkt, start,
                                        request.bundle_idx)
            request.on_sent(start, end)
            start = end
        self.schedule(start, 'ct-release', (self._release, (position, start)))

    def _circulate_until(self, grant, bundle_idx):
        idle_since = self.token.idle_since
        if grant > idle_since:
            self.channel.trace.record(idle_since, grant, 'token', TOKEN_PASS,
                                      Category.C_COMM, bundle_idx,
                                      channel=True)
        return grant

    def _release(self, position, now):
        self.holder = None
        self.token.release(position, now, bool(self.pending))
        self._plan(now)
