import pytest

from qmac import ConfigError, SystemConfig, TimingConfig
from qmac.system import QUANTUM_FIELDS


def test_defaults():
    timing = TimingConfig()
    assert timing.epr_gen_mean == 1000.0
    assert timing.preprocessing == 390.0
    assert timing.winoc_bitrate == 12.0
    assert timing.qsf == 1.0


def test_scaled_applies_qsf_to_quantum_latencies_only():
    timing = TimingConfig(qsf=0.5)
    for name in QUANTUM_FIELDS:
        assert timing.scaled(name) == getattr(timing, name) * 0.5
    assert timing.scaled('decode_per_instr') == 10.0
    assert timing.scaled('token_pass') == 1.0
    assert timing.gate_time(1) == 12.5
    assert timing.gate_time(2) == 50.0


@pytest.mark.parametrize('field', ['qsf', 'winoc_bitrate', 'gate_2q'])
def test_non_positive_values_are_rejected(field):
    with pytest.raises(ConfigError) as error:
        TimingConfig(**{field: 0})
    assert error.value.key == 'timing.' + field


def test_zero_distribution_time_is_allowed():
    assert TimingConfig(epr_distribution=0).scaled('epr_distribution') == 0
    with pytest.raises(ConfigError):
        TimingConfig(epr_distribution=-1)


def test_with_overrides():
    timing = TimingConfig().with_overrides(qsf=0.1, gate_1q=20)
    assert timing.qsf == 0.1
    assert timing.gate_1q == 20
    with pytest.raises(ConfigError) as error:
        TimingConfig().with_overrides(warp=1)
    assert error.value.key == 'timing.warp'


def test_system_config_validation():
    assert SystemConfig().epr_capacity == 1
    with pytest.raises(ConfigError):
        SystemConfig(epr_capacity=0)
    with pytest.raises(ConfigError):
        SystemConfig(ct_service='greedy')
    with pytest.raises(ConfigError) as error:
        SystemConfig(ct_idle='sleep')
    assert error.value.key == 'system.ct_idle'
