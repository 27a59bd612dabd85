import json

import pytest
from mock import MagicMock

from qmac import ConfigError, Simulator
from qmac.core.config import ExperimentConfig, SIZE_GRID


@pytest.fixture
def simulator():
    return Simulator()


def test_defaults(simulator):
    config = simulator.load_config()
    assert config == ExperimentConfig()
    assert config.modes == ('ct', 'id')
    assert config.sweep.grid == SIZE_GRID


def test_parse_sections(simulator):
    config = simulator.load_config({
        'timing': {'qsf': 0.5},
        'system': {'n_qc': 4, 'slots_per_qc': 8, 'ct_idle': 'park'},
        'workload': {'generator': 'random',
                     'params': {'n_qubits': 8, 'n_gates': 40}},
        'modes': 'both',
        'seeds': [7, 8],
        'sweep': {'sizes': [1, 2], 'qsfs': [1.0]}
    })
    assert config.timing == {'qsf': 0.5}
    assert config.system.n_qc == 4
    assert config.system.system_config().ct_idle == 'park'
    assert config.workload.params == {'n_qubits': 8, 'n_gates': 40}
    assert config.modes == ('ct', 'id')
    assert config.seeds == (7, 8)
    assert config.sweep.sizes == (1, 2)


def test_full_grid(simulator):
    config = simulator.load_config({'sweep': {'full_grid': True}})
    assert config.sweep.grid == tuple(range(1, 101))


@pytest.mark.parametrize('document, key', [
    ({'colour': 'red'}, 'colour'),
    ({'system': {'n_cores': 2}}, 'system.n_cores'),
    ({'system': {'n_qc': 0}}, 'system.n_qc'),
    ({'system': {'ct_service': 'greedy'}}, 'system.ct_service'),
    ({'timing': {'qsf': 'fast'}}, 'timing.qsf'),
    ({'timing': {'gate_1q': -1}}, 'timing.gate_1q'),
    ({'seeds': []}, 'seeds'),
    ({'seeds': [1, 'two']}, 'seeds'),
    ({'modes': 'aloha'}, 'modes'),
    ({'modes': []}, 'modes'),
    ({'t2_ns': 0}, 't2_ns'),
    ({'workload': {'generator': 'bell'}}, 'workload.generator'),
    ({'workload': {'generator': 'random', 'params': {'n_qubits': 4}}},
     'workload.params.n_gates'),
    ({'workload': {'path': 'missing.qc'}}, 'workload.path'),
    ({'sweep': {'sizes': [2, 0]}}, 'sweep.sizes.1'),
    ({'sweep': {'sizes': 4}}, 'sweep.sizes'),
    ({'sweep': {'sizes': []}}, 'sweep.sizes'),
    ({'sweep': {'qsfs': 0.5}}, 'sweep.qsfs'),
    ({'sweep': {'two_qubit_fraction': 2}}, 'sweep.two_qubit_fraction'),
    ({'sweep': {'two_qubit_fraction': 'half'}}, 'sweep.two_qubit_fraction'),
    ({'sweep': {'two_qubit_fraction': None}}, 'sweep.two_qubit_fraction'),
    ({'benchmarks': {'names': ['shor']}}, 'benchmarks.names'),
])
def test_invalid_documents(simulator, document, key):
    with pytest.raises(ConfigError) as error:
        simulator.load_config(document)
    assert error.value.key == key


def test_load_from_file(simulator, tmp_path):
    (tmp_path / 'bell.qc').write_text('qubits 2\nh 0\ncx 0 1\n')
    path = tmp_path / 'experiment.json'
    path.write_text(json.dumps({'workload': {'path': 'bell.qc'},
                                'benchmarks': {'files': {'bell': 'bell.qc'},
                                               'names': ['bell']}}))
    config = simulator.load_config(str(path))
    assert config.workload.path == str(tmp_path / 'bell.qc')
    assert config.benchmarks.files == {'bell': str(tmp_path / 'bell.qc')}


def test_missing_and_broken_files(simulator, tmp_path):
    with pytest.raises(ConfigError):
        simulator.load_config(str(tmp_path / 'absent.json'))
    broken = tmp_path / 'broken.json'
    broken.write_text('{"seeds": [1,')
    with pytest.raises(ConfigError) as error:
        simulator.load_config(str(broken))
    assert error.value.key == str(broken)


def test_errors_are_logged():
    logger = MagicMock()
    simulator = Simulator(logger=logger, log_level='warn')
    with pytest.raises(ConfigError):
        simulator.load_config({'seeds': []})
    assert logger.warning.called
