'''Simulation events and the time-ordered event queue.'''

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Any

from qmac.core.errors import CausalityError


@dataclass(order=True, frozen=True)
class Event:
    '''
    A simulation event. Events order by ``(time, seq)``; ``kind`` and
    ``payload`` are opaque to the queue.

    :var time: the simulated time of the event, in ns
    :vartype time: float

    :var seq: the insertion sequence number, breaking ties between equal
        times in insertion order
    :vartype seq: int
    '''
    time: float
    seq: int
    kind: Any = field(compare=False)
    payload: Any = field(default=None, compare=False)


class EventQueue(object):
    '''
    A priority queue of events and the simulated clock it drives.

    .. code-block:: python


        queue = EventQueue()
        queue.schedule(5.0, 'gate-done')
        event = queue.pop_next()
        queue.now  # 5.0
    '''

    def __init__(self):
        self.pqueue = []
        self.counter = itertools.count()
        self.clock = 0.0
        self.scheduled = 0
        self.popped = 0

    def __len__(self):
        return len(self.pqueue)

    @property
    def now(self):
        return self.clock

    def schedule(self, time, kind, payload=None):
        '''
        Inserts a new event.

        :param time: when the event fires, not earlier than :attr:`now`
        :param kind: the event kind, used by the owner to dispatch it
        :param payload: (optional) data carried by the event

        :rtype: qmac.engine.Event
        :raises qmac.CausalityError: when ``time`` lies in the past
        '''
        if time < self.clock:
            raise CausalityError(
                'event {0} scheduled at {1!r} before now={2!r}'.format(
                    kind, time, self.clock))
        event = Event(float(time), next(self.counter), kind, payload)
        heapq.heappush(self.pqueue, event)
        self.scheduled += 1
        return event

    def pop_next(self):
        '''
        Removes the event with the minimal ``(time, seq)`` and advances the
        clock to its time.

        :rtype: qmac.engine.Event or None when the queue is exhausted
        '''
        if not self.pqueue:
            return None
        event = heapq.heappop(self.pqueue)
        self.clock = event.time
        self.popped += 1
        return event
