from mock import MagicMock

from qmac import (CircuitError, ConfigError, DeadlockError, Simulator,
                  SimulationError)


def test_error_str_representation():
    # Test str(error) with no context
    error = SimulationError('something broke')
    assert str(error) == 'something broke'

    # Test str(error) with a line number
    error = CircuitError('unknown mnemonic: foo', line=3)
    assert str(error) == '[line 3] unknown mnemonic: foo'
    assert error.line == 3

    # Test str(error) with a key path
    error = ConfigError('unknown key', key='system.n_cores')
    assert str(error) == '[system.n_cores] unknown key'
    assert error.key == 'system.n_cores'

    # Test str(error) with blocked processes
    error = DeadlockError('stalled', blocked=['QC0: waiting', 'EPR: busy'])
    assert str(error) == 'stalled\n  QC0: waiting\n  EPR: busy'
    assert error.blocked == ['QC0: waiting', 'EPR: busy']


def test_error_code():
    assert SimulationError('x').code == 'SimulationError'
    assert ConfigError('x').code == 'ConfigError'
    assert DeadlockError('x').blocked == []


def test_error_log():
    # Test .log with log level set to 'warn'
    simulator = MagicMock(Simulator)
    simulator.logger = MagicMock()
    simulator.log_level = 'warn'

    error = ConfigError('bad', key='seeds')
    error._log(simulator)

    simulator.logger.warning.assert_called_with(
        'qmac %s: %s', 'ConfigError', "'[seeds] bad'")

    # Test .log with log level set to 'silent'
    simulator = MagicMock(Simulator)
    simulator.logger = MagicMock()
    simulator.log_level = 'silent'

    error._log(simulator)

    assert not simulator.logger.warning.called
