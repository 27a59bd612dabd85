from logging import Logger, getLogger
from os import environ

import pytest
from mock import MagicMock

from qmac import ConfigError, Simulator, TimingConfig


def test_simulator_init():
    simulator = Simulator()
    assert isinstance(simulator, Simulator)
    assert simulator.workers == 1
    assert simulator.timing == TimingConfig()


def test_simulator_init_with_env_vars():
    environ['QMAC_LOG_LEVEL'] = 'warn'
    environ['QMAC_WORKERS'] = '3'

    simulator = Simulator()
    assert simulator.log_level == 'warn'
    assert simulator.workers == 3

    del environ['QMAC_LOG_LEVEL']
    del environ['QMAC_WORKERS']


def test_simulator_init_with_invalid_params():
    with pytest.raises(ValueError):
        Simulator(log_level='loud')
    with pytest.raises(ValueError):
        Simulator(workers=0)
    with pytest.raises(ConfigError):
        Simulator(timing={'warp': 9})


def test_simulator_logging():
    # Test default logger
    simulator = Simulator()
    assert isinstance(simulator.logger, Logger)
    assert simulator.log_level == 'silent'

    # Test custom logger
    logger = getLogger('qmac.specs')
    simulator = Simulator(logger=logger)
    assert simulator.logger is logger
    assert simulator.log_level == 'silent'

    # Test custom log level
    simulator = Simulator(logger=logger, log_level='debug')
    assert simulator.log_level == 'debug'


def test_default_logger_gets_one_handler():
    Simulator()
    Simulator()
    assert len(getLogger('qmac').handlers) == 1


def test_simulator_options():
    # Test unrecognized option warning
    logger = MagicMock()
    Simulator(logger=logger, foobar='test')
    logger.warning.assert_called_with('Unrecognized option: foobar')

    # Test timing overrides
    simulator = Simulator(timing={'qsf': 0.25})
    assert simulator.timing.qsf == 0.25

    # Test a complete timing configuration
    timing = TimingConfig(gate_1q=20)
    assert Simulator(timing=timing).timing is timing


def test_simulator_timing_from_env():
    environ['QMAC_TIMING'] = '{"qsf": 0.5, "gate_2q": 80}'
    try:
        simulator = Simulator()
        assert simulator.timing.qsf == 0.5
        assert simulator.timing.gate_2q == 80
    finally:
        del environ['QMAC_TIMING']


@pytest.mark.parametrize('value', ['{"qsf": 0.5', '[0.5]', '"fast"'])
def test_simulator_timing_from_broken_env(value):
    environ['QMAC_TIMING'] = value
    try:
        with pytest.raises(ConfigError) as error:
            Simulator()
        assert error.value.key == 'timing'
    finally:
        del environ['QMAC_TIMING']
