from collections import deque

from qmac.engine import Category, EPR_GEN, sample_exponential


class EprGenerator(object):
    '''
    The EPR generator: serves pair requests first in, first out, up to
    ``epr_capacity`` at a time, then distributes the two halves to the LTM
    ports of the source and destination cores.

    :var queue: the requests waiting for the generator
    :vartype queue: collections.deque

    :var in_service: the requests being generated
    :vartype in_service: int
    '''

    def __init__(self, timing, system, rng, schedule, trace, ports):
        self.timing = timing
        self.capacity = system.epr_capacity
        self.deterministic = system.deterministic_epr
        self.rng = rng
        self.schedule = schedule
        self.trace = trace
        self.ports = ports
        self.queue = deque()
        self.in_service = 0

    def __len__(self):
        return len(self.queue) + self.in_service

    def generation_time(self):
        '''
        The time to generate one pair: the scaled mean, or an exponential
        draw on the ``epr-gen`` stream around it.

        :rtype: float
        '''
        mean = self.timing.scaled('epr_gen_mean')
        if self.deterministic:
            return mean
        return sample_exponential(self.rng, EPR_GEN, mean)

    def request(self, teleport, now, on_ready):
        '''
        Queues a pair for ``teleport``. ``on_ready(teleport, time)`` runs
        once both halves sit at their LTM ports.
        '''
        self.queue.append((teleport, on_ready))
        self._serve(now)

    # PRIVATE

    def _serve(self, now):
        while self.queue and self.in_service < self.capacity:
            teleport, on_ready = self.queue.popleft()
            self.in_service += 1
            end = now + self.generation_time()
            self.trace.record(now, end, 'EPR', 'epr-generation',
                              Category.Q_COMM, teleport.bundle_idx)
            self.schedule(end, 'epr-generated',
                          (self._generated, (teleport, on_ready, end)))

    # Each LTM port takes one half at a time
    def _generated(self, teleport, on_ready, now):
        self.in_service -= 1
        source = self.ports[teleport.src_qc]
        destination = self.ports[teleport.dst_qc]
        start = max(now, source.ltm_busy, destination.ltm_busy)
        end = start + self.timing.scaled('epr_distribution')
        self.trace.record(start, end, 'EPR', 'epr-distribution',
                          Category.Q_COMM, teleport.bundle_idx)
        source.ltm_busy = destination.ltm_busy = end
        self.schedule(end, 'epr-ready', (on_ready, (teleport, end)))
        self._serve(now)
