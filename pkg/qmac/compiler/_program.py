import json
from collections import Counter
from dataclasses import asdict, dataclass, replace
from typing import Optional, Tuple

from qmac.circuit import Opcode
from qmac.core.errors import CompilationError
from qmac.isa import BitWidths
from qmac.compiler._placement import Placement


@dataclass(frozen=True)
class Local(object):
    '''
    A gate executed inside core ``qc`` on its local ``slots``.
    '''
    opcode: Opcode
    qc: int
    slots: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'slots', tuple(self.slots))

    @property
    def addresses(self):
        return [(self.qc, slot) for slot in self.slots]

    @property
    def emission_key(self):
        return (self.qc, min(self.slots))

    def word_bits(self, w):
        return w.opcode_bits + w.qc_addr_bits + 2 * w.slot_addr_bits

    def to_json(self):
        return {'op': self.opcode.mnemonic, 'qc': self.qc,
                'slots': list(self.slots)}


@dataclass(frozen=True)
class TPS(object):
    '''
    The source half of a teleport, run by core ``src_qc``. It keeps the
    global address of the destination so the core can address its
    correction bits.
    '''
    src_qc: int
    src_slot: int
    dst_qc: int
    dst_slot: int
    token_order: Optional[int] = None

    opcode = Opcode.TPS

    @property
    def qc(self):
        return self.src_qc

    @property
    def addresses(self):
        return [(self.src_qc, self.src_slot)]

    @property
    def destination(self):
        return (self.dst_qc, self.dst_slot)

    @property
    def emission_key(self):
        return (self.src_qc, self.src_slot)

    def word_bits(self, w):
        return w.opcode_bits + 2 * (w.qc_addr_bits + w.slot_addr_bits) + \
            w.to_bits

    def to_json(self):
        return {'op': 'tps', 'src': [self.src_qc, self.src_slot],
                'dst': [self.dst_qc, self.dst_slot], 'to': self.token_order}


@dataclass(frozen=True)
class TPD(object):
    '''
    The destination half of a teleport, run by core ``dst_qc``.
    '''
    dst_qc: int
    dst_slot: int

    opcode = Opcode.TPD

    @property
    def qc(self):
        return self.dst_qc

    @property
    def addresses(self):
        return [(self.dst_qc, self.dst_slot)]

    @property
    def destination(self):
        return (self.dst_qc, self.dst_slot)

    @property
    def emission_key(self):
        return (self.dst_qc, self.dst_slot)

    def word_bits(self, w):
        return w.opcode_bits + w.qc_addr_bits + w.slot_addr_bits

    def to_json(self):
        return {'op': 'tpd', 'dst': [self.dst_qc, self.dst_slot]}


@dataclass(frozen=True)
class Bundle(object):
    '''
    Instructions executable in parallel, kept in dispatcher emission order
    (core ascending, then slot ascending).
    '''
    instructions: Tuple[object, ...] = ()

    def __post_init__(self):
        ordered = sorted(self.instructions, key=lambda i: i.emission_key)
        object.__setattr__(self, 'instructions', tuple(ordered))

    def __len__(self):
        return len(self.instructions)

    def __iter__(self):
        return iter(self.instructions)

    @property
    def teleport_sources(self):
        return [i for i in self.instructions if isinstance(i, TPS)]

    @property
    def teleport_destinations(self):
        return [i for i in self.instructions if isinstance(i, TPD)]

    @property
    def cores(self):
        '''The cores receiving at least one instruction, ascending.'''
        return sorted({i.qc for i in self.instructions})

    def size_bits(self, w):
        '''
        The bundle as stored in memory: a count header and every
        instruction word.
        '''
        return w.count_bits + sum(i.word_bits(w) for i in self.instructions)

    def check(self):
        '''
        Checks the address, pairing and one-port invariants.

        :raises qmac.CompilationError: on the first violation
        '''
        addresses = [a for i in self.instructions for a in i.addresses]
        if len(addresses) != len(set(addresses)):
            raise CompilationError('bundle touches an address twice')
        sources = self.teleport_sources
        sinks = self.teleport_destinations
        if Counter(s.destination for s in sources) != \
                Counter(d.destination for d in sinks):
            raise CompilationError('unpaired TPS/TPD in bundle')
        _check_one_port([s.src_qc for s in sources], 'TPS')
        _check_one_port([d.dst_qc for d in sinks], 'TPD')


@dataclass(frozen=True)
class Program(object):
    '''
    A compiled circuit: bundles in execution order, the placement they start
    from and the field widths of the target system.
    '''
    bundles: Tuple[Bundle, ...]
    initial_placement: Placement
    widths: BitWidths

    def __post_init__(self):
        object.__setattr__(self, 'bundles', tuple(self.bundles))

    def __len__(self):
        return len(self.bundles)

    @property
    def n_qc(self):
        return self.initial_placement.n_qc

    @property
    def teleport_count(self):
        return sum(len(b.teleport_sources) for b in self.bundles)

    def with_bundles(self, bundles):
        return replace(self, bundles=tuple(bundles))

    def to_json(self):
        return {
            'widths': asdict(self.widths),
            'placement': self.initial_placement.to_json(),
            'bundles': [[i.to_json() for i in b] for b in self.bundles]
        }

    def dumps(self):
        '''
        The program as a JSON document, stable for golden files.

        :rtype: str
        '''
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, text):
        data = json.loads(text)
        bundles = [Bundle(tuple(_instruction(i) for i in bundle))
                   for bundle in data['bundles']]
        return cls(bundles, Placement.from_json(data['placement']),
                   BitWidths(**data['widths']))


# PRIVATE

def _check_one_port(cores, role):
    repeated = [qc for qc, n in Counter(cores).items() if n > 1]
    if repeated:
        raise CompilationError('QC {0} has more than one {1} in a bundle'.format(
            repeated[0], role))


def _instruction(data):
    if data['op'] == 'tps':
        return TPS(*data['src'], *data['dst'], token_order=data['to'])
    if data['op'] == 'tpd':
        return TPD(*data['dst'])
    return Local(Opcode.from_mnemonic(data['op']), data['qc'], data['slots'])
