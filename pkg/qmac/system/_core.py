from collections import deque

from qmac.core.errors import ProtocolError
from qmac.compiler import Local, TPD, TPS


class QcState(object):
    '''
    The local control unit of one core: its instruction buffers, the time
    every slot and its LTM port are busy until, and the bookkeeping of the
    current bundle.

    :var lib: local instructions waiting or executing
    :var tpsb: teleport sources, in ascending token order
    :var tpdb: teleport destinations
    :var expected: the instructions the core receives in this bundle
    :var done: the instructions it has completed in this bundle
    '''

    def __init__(self, qc):
        self.qc = qc
        self.slot_busy = {}
        self.ltm_busy = 0.0
        self.begin(0)

    @property
    def position(self):
        return self.qc + 1

    @property
    def name(self):
        return 'QC{0}'.format(self.qc)

    def begin(self, expected):
        self.expected = expected
        self.done = 0
        self.lib = deque()
        self.tpsb = []
        self.tpdb = []
        self.eoc_sent = False

    def file(self, instruction):
        '''
        Puts an arrived instruction into its buffer.
        '''
        if isinstance(instruction, Local):
            self.lib.append(instruction)
        elif isinstance(instruction, TPS):
            self.tpsb.append(instruction)
            self.tpsb.sort(key=lambda i: i.token_order or 0)
        elif isinstance(instruction, TPD):
            self.tpdb.append(instruction)
        else:
            raise ProtocolError('{0} received {1!r}'.format(self.name,
                                                            instruction))

    def retire(self, instruction):
        '''
        Removes a completed instruction from its buffer.

        :raises qmac.ProtocolError: when the instruction is not buffered,
            i.e. it completes twice
        '''
        for buffer in (self.lib, self.tpsb, self.tpdb):
            if instruction in buffer:
                buffer.remove(instruction)
                self.done += 1
                return
        raise ProtocolError('{0} completed {1!r} twice'.format(
            self.name, instruction))

    @property
    def drained(self):
        return self.done == self.expected and \
            not (self.lib or self.tpsb or self.tpdb)

    def slots_free(self, slots):
        return max((self.slot_busy.get(slot, 0.0) for slot in slots),
                   default=0.0)

    def occupy(self, slots, until):
        for slot in slots:
            self.slot_busy[slot] = until

    def waiting_for(self):
        '''
        What the core still waits for, for deadlock reports.

        :rtype: str
        '''
        return '{0}: {1} of {2} instructions pending (LIB={3}, TPSB={4}, ' \
            'TPDB={5})'.format(self.name, self.expected - self.done,
                               self.expected, len(self.lib), len(self.tpsb),
                               len(self.tpdb))
