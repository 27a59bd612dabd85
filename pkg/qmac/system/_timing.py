from dataclasses import dataclass, fields, replace

from qmac.core.errors import ConfigError


# The latencies the quantum scaling factor applies to
QUANTUM_FIELDS = ('epr_gen_mean', 'epr_distribution', 'preprocessing',
                  'postprocessing', 'gate_1q', 'gate_2q')


@dataclass(frozen=True)
class TimingConfig:
    '''
    Latencies and bandwidths of the modelled system. Times are in ns and
    rates in Gbps, i.e. bits per ns.

    .. code-block:: python


        TimingConfig(qsf=0.5).scaled('preprocessing')  # 195.0

    :var epr_gen_mean: mean EPR pair generation time
    :var epr_distribution: EPR pair distribution time
    :var preprocessing: teleport pre-processing time
    :var postprocessing: teleport post-processing time
    :var winoc_bitrate: wireless channel bitrate
    :var token_pass: time of one token hop
    :var ram_bandwidth: instruction memory bandwidth
    :var decode_per_instr: decode time per instruction
    :var gate_1q: single-qubit gate time
    :var gate_2q: two-qubit gate time
    :var qsf: quantum scaling factor applied to the quantum latencies
    '''
    epr_gen_mean: float = 1000.0
    epr_distribution: float = 0.01
    preprocessing: float = 390.0
    postprocessing: float = 30.0
    winoc_bitrate: float = 12.0
    token_pass: float = 1.0
    ram_bandwidth: float = 128.0
    decode_per_instr: float = 10.0
    gate_1q: float = 25.0
    gate_2q: float = 100.0
    qsf: float = 1.0

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name == 'epr_distribution':
                if value < 0:
                    raise ConfigError('must not be negative',
                                      key='timing.' + item.name)
            elif value <= 0:
                raise ConfigError('must be positive', key='timing.' + item.name)

    def scaled(self, name):
        '''
        The latency ``name``, multiplied by ``qsf`` when it is quantum.

        :rtype: float
        '''
        value = getattr(self, name)
        return value * self.qsf if name in QUANTUM_FIELDS else value

    def gate_time(self, arity):
        return self.scaled('gate_2q' if arity == 2 else 'gate_1q')

    def with_overrides(self, **overrides):
        unknown = set(overrides) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigError('unknown timing field',
                              key='timing.' + sorted(unknown)[0])
        return replace(self, **overrides)


@dataclass(frozen=True)
class SystemConfig:
    '''
    Options of the execution model beyond the latencies.

    :var epr_capacity: EPR requests the generator serves at once
    :var deterministic_epr: generate every EPR pair in exactly the mean time
        instead of drawing it from an exponential distribution
    :var ct_service: ``"exhaustive"`` to send everything pending per token
        visit, ``"single"`` for one packet per visit
    :var ct_idle: ``"circulate"`` to keep the token moving while all nodes
        are idle, ``"park"`` to leave it with its last holder
    '''
    epr_capacity: int = 1
    deterministic_epr: bool = False
    ct_service: str = 'exhaustive'
    ct_idle: str = 'circulate'

    def __post_init__(self):
        if self.epr_capacity < 1:
            raise ConfigError('must be at least 1', key='system.epr_capacity')
        if self.ct_service not in ('exhaustive', 'single'):
            raise ConfigError('expected "exhaustive" or "single"',
                              key='system.ct_service')
        if self.ct_idle not in ('circulate', 'park'):
            raise ConfigError('expected "circulate" or "park"',
                              key='system.ct_idle')
