from collections import Counter
from dataclasses import dataclass
from functools import partial
from typing import Optional

from qmac.core.errors import CompilationError, DeadlockError, ProtocolError
from qmac.compiler import Local, TPD, TPS, token_chain_length
from qmac.engine import Category, EventQueue, MEASUREMENT, Rng, Trace
from qmac.isa import CBP, EOC, LIP, TP, TPDIP, TPSIP
from qmac.mac import (Channel, CirculatingToken, CtArbiter, CU,
                      InstructionToken, Mode, Request, id_grant)
from qmac.system._core import QcState
from qmac.system._epr import EprGenerator
from qmac.system._timing import SystemConfig, TimingConfig


@dataclass
class Teleport:
    '''
    The phase times of one teleport, filled in as the run progresses.
    '''
    tps: TPS
    bundle_idx: int
    tps_arrival: Optional[float] = None
    tpd_arrival: Optional[float] = None
    epr_ready: Optional[float] = None
    pre_start: Optional[float] = None
    pre_end: Optional[float] = None
    cbp_start: Optional[float] = None
    cbp_end: Optional[float] = None
    post_start: Optional[float] = None
    post_end: Optional[float] = None

    @property
    def src_qc(self):
        return self.tps.src_qc

    @property
    def dst_qc(self):
        return self.tps.dst_qc


@dataclass(frozen=True)
class EocSlot:
    '''
    When a core sends its end-of-computation packet: ``token_order`` under
    the instruction-directed policy, ``None`` when the circulating token
    decides.
    '''
    qc: int
    token_order: Optional[int] = None


def make_instruction_packet(instruction):
    '''
    The packet the dispatcher sends for ``instruction``.

    :rtype: qmac.isa.Packet
    '''
    if isinstance(instruction, Local):
        return LIP(instruction.qc, instruction.opcode, instruction.slots)
    if isinstance(instruction, TPS):
        return TPSIP(instruction.src_qc, instruction.src_slot,
                     instruction.dst_qc, instruction.dst_slot,
                     instruction.token_order)
    return TPDIP(instruction.dst_qc, instruction.dst_slot)


def eoc_schedule(bundle, mode):
    '''
    The end-of-computation plan of a bundle: one slot per core that
    receives instructions, in ascending core order. Under the
    instruction-directed policy the slots extend the token chain after the
    ``k`` teleport sources with orders ``k, k + 1, ...``.

    .. code-block:: python


        eoc_schedule(bundle, Mode.ID)  # [EocSlot(0, 0), EocSlot(2, 1)]

    :rtype: list
    '''
    if Mode.parse(mode) is Mode.CT:
        return [EocSlot(qc) for qc in bundle.cores]
    first = len(bundle.teleport_sources)
    return [EocSlot(qc, first + i) for i, qc in enumerate(bundle.cores)]


def run_program(program, timing=None, mode=Mode.ID, seed=0, system=None):
    '''
    Executes ``program`` and returns the timed trace of the run.

    .. code-block:: python


        trace = run_program(program, TimingConfig(qsf=0.5), 'ct', seed=3)
        trace.makespan

    :param program: the compiled program, with token orders assigned
    :paramtype program: qmac.compiler.Program

    :param timing: (optional) the latencies, defaults to
        :class:`TimingConfig`
    :param mode: ``"ct"`` or ``"id"``
    :param seed: the seed of every random stream of the run
    :param system: (optional) the execution model options

    :rtype: qmac.engine.Trace
    :raises qmac.DeadlockError: when the run stalls with work left
    '''
    return Machine(program, timing, mode, seed, system).run()


class Machine(object):
    '''
    The control unit, the EPR generator and every core of one run.

    Each bundle is fetched, decoded and dispatched by the CU. Cores execute
    what they receive: local gates on their slots, teleport sources once
    their EPR half is in (pre-processing, then the correction bits), and
    teleport destinations once the correction bits arrive
    (post-processing). A core that has completed all its instructions sends
    its end-of-computation packet; the last one releases the next bundle.
    '''

    def __init__(self, program, timing=None, mode=Mode.ID, seed=0,
                 system=None):
        self.program = program
        self.timing = timing or TimingConfig()
        self.system = system or SystemConfig()
        self.mode = Mode.parse(mode)
        self.seed = seed
        self.rng = Rng(seed)
        self.queue = EventQueue()
        self.trace = Trace(n_qc=program.n_qc, qsf=self.timing.qsf,
                           mode=self.mode.value, seed=seed)
        self.channel = Channel(self.timing.winoc_bitrate, program.widths,
                               self.mode, self.trace)
        self.cores = [QcState(qc) for qc in range(program.n_qc)]
        self.epr = EprGenerator(self.timing, self.system, self.rng,
                                self.schedule, self.trace, self.cores)
        if self.mode is Mode.CT:
            token = CirculatingToken(program.n_qc + 1,
                                     self.timing.token_pass,
                                     park=self.system.ct_idle == 'park')
            self.arbiter = CtArbiter(
                token, self.channel, self.schedule,
                exhaustive=self.system.ct_service == 'exhaustive')
        else:
            self.token = InstructionToken()
        self.bundle_idx = None
        self.finished = False
        self.executed = 0

    def schedule(self, time, kind, payload):
        return self.queue.schedule(time, kind, payload)

    def run(self):
        '''
        Runs the event loop to completion.

        :rtype: qmac.engine.Trace
        '''
        if self.mode is Mode.ID:
            _check_token_orders(self.program)
        if not self.program.bundles:
            self.finished = True
            return self.trace
        self._start_bundle(0, 0.0)
        self._loop()
        if not self.finished:
            raise DeadlockError(
                'event queue empty in bundle {0} at {1!r} ns'.format(
                    self.bundle_idx, self.queue.now),
                blocked=self.blocked())
        return self.trace

    def blocked(self):
        '''
        The processes that still wait for something.

        :rtype: list
        '''
        blocked = [core.waiting_for() for core in self.cores
                   if core.done < core.expected]
        blocked += ['CU: waiting for EOC from QC{0}'.format(qc)
                    for qc in sorted(self.expected_eoc - self.eoc_arrived)]
        if len(self.epr):
            blocked.append('EPR: {0} requests outstanding'.format(
                len(self.epr)))
        if self.mode is Mode.ID:
            blocked += ['token order {0}: waiting for its token packet'.format(
                order) for order in sorted(self.token.waiting)]
        elif self.arbiter.pending_count:
            blocked.append('channel: {0} packets waiting for the token'.format(
                self.arbiter.pending_count))
        return blocked

    @property
    def bundle(self):
        return self.program.bundles[self.bundle_idx]

    # PRIVATE

    # Every event carries its handler and the handler's arguments
    def _loop(self):
        event = self.queue.pop_next()
        while event is not None:
            handler, args = event.payload
            handler(*args)
            event = self.queue.pop_next()

    # Bundle life cycle

    def _start_bundle(self, idx, now):
        self.bundle_idx = idx
        bundle = self.bundle
        counts = Counter(i.qc for i in bundle)
        for core in self.cores:
            core.begin(counts.get(core.qc, 0))
        self.teleports = {tps.destination: Teleport(tps, idx)
                          for tps in bundle.teleport_sources}
        self.expected_eoc = set(bundle.cores)
        self.eoc_arrived = set()
        self.eoc_orders = {slot.qc: slot.token_order
                           for slot in eoc_schedule(bundle, self.mode)}
        if self.mode is Mode.ID:
            self.token.begin(token_chain_length(bundle) - 1)

        fetched = now + bundle.size_bits(self.program.widths) / \
            self.timing.ram_bandwidth
        self.trace.record(now, fetched, 'CU', 'fetch', Category.C_COMP, idx)
        decoded = fetched + len(bundle) * self.timing.decode_per_instr
        self.trace.record(fetched, decoded, 'CU', 'decode', Category.C_COMP,
                          idx)
        self.schedule(decoded, 'dispatch', (self._dispatch, (decoded,)))

    # Under the instruction-directed policy only the dispatcher sends in
    # this phase, so packets go out back to back without arbitration
    def _dispatch(self, now):
        if not self.expected_eoc:
            self._finish_bundle(now)
            return
        start = now
        for instruction in self.bundle:
            pkt = make_instruction_packet(instruction)
            on_sent = partial(self._instruction_sent, instruction)
            if self.mode is Mode.ID:
                start = max(start, self.channel.busy_until)
                end = self.channel.transmit(CU, pkt, start, self.bundle_idx)
                on_sent(start, end)
                start = end
            else:
                self.arbiter.request(
                    Request(CU, pkt, now, self.bundle_idx, on_sent), now)

    def _finish_bundle(self, now):
        if self.bundle_idx + 1 < len(self.program.bundles):
            self._start_bundle(self.bundle_idx + 1, now)
        else:
            self.finished = True

    # Instruction reception and execution

    def _instruction_sent(self, instruction, start, end):
        if isinstance(instruction, TPS):
            self.schedule(start, 'epr-request',
                          (self._request_epr, (instruction.destination, start)))
        self.schedule(end, 'instruction-arrival',
                      (self._instruction_arrived, (instruction, end)))

    def _instruction_arrived(self, instruction, now):
        core = self.cores[instruction.qc]
        core.file(instruction)
        if isinstance(instruction, Local):
            self._execute_gate(core, instruction, now)
        elif isinstance(instruction, TPS):
            teleport = self.teleports[instruction.destination]
            teleport.tps_arrival = now
            self._try_preprocess(teleport, now)
        else:
            teleport = self._teleport_to(instruction)
            teleport.tpd_arrival = now
            self._try_postprocess(teleport, now)

    def _execute_gate(self, core, gate, now):
        start = max(now, core.slots_free(gate.slots))
        end = start + self.timing.gate_time(len(gate.slots))
        self.trace.record(start, end, core.name, gate.opcode.mnemonic,
                          Category.Q_COMP, self.bundle_idx)
        core.occupy(gate.slots, end)
        self.schedule(end, 'gate-done', (self._complete, (core, gate, end)))

    def _complete(self, core, instruction, now):
        core.retire(instruction)
        self.executed += 1
        if core.drained:
            self._send_eoc(core, now)

    # Teleportation

    def _teleport_to(self, tpd):
        if tpd.destination not in self.teleports:
            raise ProtocolError('no teleport source for destination {0}'.format(
                tpd.destination))
        return self.teleports[tpd.destination]

    def _request_epr(self, destination, now):
        self.epr.request(self.teleports[destination], now, self._epr_ready)

    def _epr_ready(self, teleport, now):
        teleport.epr_ready = now
        self._try_preprocess(teleport, now)
        self._try_postprocess(teleport, now)

    def _try_preprocess(self, teleport, now):
        if teleport.pre_start is not None or None in (
                teleport.tps_arrival, teleport.epr_ready):
            return
        end = now + self.timing.scaled('preprocessing')
        self.trace.record(now, end, 'QC{0}'.format(teleport.src_qc),
                          'preprocessing', Category.Q_COMP,
                          teleport.bundle_idx)
        teleport.pre_start, teleport.pre_end = now, end
        self.schedule(end, 'preprocessed', (self._send_cbp, (teleport, end)))

    def _send_cbp(self, teleport, now):
        cb = int(self.rng.stream(MEASUREMENT).integers(4))
        pkt = CBP(cb, teleport.dst_qc, teleport.tps.dst_slot)
        position = self.cores[teleport.src_qc].position
        on_sent = partial(self._cbp_sent, teleport)
        if self.mode is Mode.CT:
            self.arbiter.request(
                Request(position, pkt, now, teleport.bundle_idx, on_sent), now)
            return
        order = teleport.tps.token_order
        self._acquire(order, now, partial(self._transmit_in_chain, position,
                                          pkt, order, on_sent))

    def _cbp_sent(self, teleport, start, end):
        teleport.cbp_start, teleport.cbp_end = start, end
        self.schedule(end, 'cbp-arrival', (self._cbp_arrived, (teleport, end)))

    def _cbp_arrived(self, teleport, now):
        self._complete(self.cores[teleport.src_qc], teleport.tps, now)
        self._try_postprocess(teleport, now)

    def _try_postprocess(self, teleport, now):
        if teleport.post_start is not None or None in (
                teleport.tpd_arrival, teleport.cbp_end, teleport.epr_ready):
            return
        if now < teleport.cbp_end:
            return
        end = now + self.timing.scaled('postprocessing')
        self.trace.record(now, end, 'QC{0}'.format(teleport.dst_qc),
                          'postprocessing', Category.Q_COMP,
                          teleport.bundle_idx)
        teleport.post_start, teleport.post_end = now, end
        self.trace.teleports.append(teleport)
        tpd = TPD(teleport.dst_qc, teleport.tps.dst_slot)
        self.schedule(end, 'postprocessed',
                      (self._complete, (self.cores[teleport.dst_qc], tpd, end)))

    # End of computation

    def _send_eoc(self, core, now):
        if core.eoc_sent:
            raise ProtocolError('{0} sent a second EOC'.format(core.name))
        core.eoc_sent = True
        pkt = EOC(core.qc)
        on_sent = partial(self._eoc_sent, core.qc)
        if self.mode is Mode.CT:
            self.arbiter.request(
                Request(core.position, pkt, now, self.bundle_idx, on_sent), now)
            return
        order = self.eoc_orders[core.qc]
        self._acquire(order, now, partial(self._transmit_in_chain,
                                          core.position, pkt, order, on_sent))

    def _eoc_sent(self, qc, start, end):
        self.schedule(end, 'eoc-arrival', (self._eoc_arrived, (qc, end)))

    def _eoc_arrived(self, qc, now):
        if qc not in self.expected_eoc or qc in self.eoc_arrived:
            raise ProtocolError('unexpected EOC from QC{0}'.format(qc))
        self.eoc_arrived.add(qc)
        if self.eoc_arrived == self.expected_eoc:
            self._finish_bundle(now)

    # Instruction-directed token chain

    def _acquire(self, order, ready, action):
        grant = id_grant(order, ready, self.channel, self.token)
        if grant is None:
            self.token.wait(order, lambda time: self._acquire(order, time,
                                                              action))
        else:
            action(grant)

    # The holder sends its packet, then the token packet for the next order
    # unless it closes the chain
    def _transmit_in_chain(self, position, pkt, order, on_sent, start):
        end = self.channel.transmit(position, pkt, start, self.bundle_idx)
        on_sent(start, end)
        if order < self.token.last_order:
            arrival = self.channel.transmit(position, TP(order + 1), end,
                                            self.bundle_idx)
            self.schedule(arrival, 'token-arrival',
                          (self._token_arrived, (order + 1, arrival)))

    def _token_arrived(self, order, now):
        waiting = self.token.deliver(order, now)
        if waiting is not None:
            waiting(now)


# PRIVATE

def _check_token_orders(program):
    for idx, bundle in enumerate(program.bundles):
        orders = [tps.token_order for tps in bundle.teleport_sources]
        if orders != list(range(len(orders))):
            raise CompilationError(
                'bundle {0} has token orders {1}, expected 0..{2}'.format(
                    idx, orders, len(orders) - 1))
