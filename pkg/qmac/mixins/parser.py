import json
import os
from dataclasses import fields, replace

from qmac.core.config import (BenchmarksSection, ExperimentConfig,
                              GENERATORS, OutputSection, SweepSection,
                              SystemSection, WorkloadSection)
from qmac.core.errors import ConfigError, SimulationError
from qmac.system import TimingConfig


# The nested sections of an experiment configuration
SECTIONS = {
    'system': SystemSection,
    'workload': WorkloadSection,
    'sweep': SweepSection,
    'benchmarks': BenchmarksSection,
    'output': OutputSection
}

# What ``modes`` may say
MODES = {'ct': ('ct',), 'id': ('id',), 'both': ('ct', 'id')}


class Parser(object):
    '''
    Loads experiment configurations.
    '''

    def load_config(self, source=None):
        '''
        Loads an experiment configuration from a JSON file, a parsed
        document or, when ``source`` is ``None``, the defaults.

        .. code-block:: python


            config = simulator.load_config('experiments/sweep.json')

        :param source: a path or a ``dict``
        :rtype: qmac.core.config.ExperimentConfig
        :raises qmac.ConfigError: naming the dotted key of the first invalid
            entry
        '''
        try:
            if source is None:
                return self.parse_config({})
            if isinstance(source, dict):
                return self.parse_config(source)
            return self.parse_config(self.__read_json(source),
                                     os.path.dirname(os.path.abspath(source)))
        except SimulationError as error:
            error._log(self)
            raise

    @staticmethod
    def parse_config(data, base_dir='.'):
        '''
        Validates a parsed configuration document.

        :rtype: qmac.core.config.ExperimentConfig
        :raises qmac.ConfigError: on unknown keys, bad values or missing
            files
        '''
        if not isinstance(data, dict):
            raise ConfigError('expected a JSON object', key='<root>')
        Parser._reject_unknown(data, {f.name for f in fields(ExperimentConfig)},
                               None)
        values = {}
        for key, value in data.items():
            if key in SECTIONS:
                values[key] = Parser._section(SECTIONS[key], value, key)
            else:
                values[key] = getattr(Parser, '_' + key)(value)

        config = _resolve_files(ExperimentConfig(**values), base_dir)
        Parser._check_system(config.system)
        Parser._check_workload(config, base_dir)
        Parser._check_sweep(config.sweep)
        Parser._check_benchmarks(config, base_dir)
        return config

    # PROTECTED

    @staticmethod
    def _reject_unknown(data, valid, path):
        for key in data:
            if key not in valid:
                raise ConfigError('unknown key', key=_join(path, key))

    # Builds a section dataclass, turning JSON lists into tuples
    @staticmethod
    def _section(cls, data, path):
        if not isinstance(data, dict):
            raise ConfigError('expected an object', key=path)
        Parser._reject_unknown(data, {f.name for f in fields(cls)}, path)
        values = {key: tuple(value) if isinstance(value, list) else value
                  for key, value in data.items()}
        if cls is WorkloadSection and 'params' in data:
            values['params'] = data['params']
        return cls(**values)

    @staticmethod
    def _timing(data):
        if not isinstance(data, dict):
            raise ConfigError('expected an object', key='timing')
        for key, value in data.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError('must be a number', key='timing.' + key)
        TimingConfig().with_overrides(**data)
        return dict(data)

    @staticmethod
    def _modes(value):
        names = [value] if isinstance(value, str) else list(value)
        modes = []
        for name in names:
            if name not in MODES:
                raise ConfigError('expected "ct", "id" or "both"', key='modes')
            modes += [m for m in MODES[name] if m not in modes]
        if not modes:
            raise ConfigError('no MAC mode selected', key='modes')
        return tuple(modes)

    @staticmethod
    def _seeds(value):
        if not isinstance(value, (list, tuple)) or not value:
            raise ConfigError('expected a non-empty list of seeds',
                              key='seeds')
        for seed in value:
            if not isinstance(seed, int) or isinstance(seed, bool):
                raise ConfigError('seeds must be integers', key='seeds')
        return tuple(value)

    @staticmethod
    def _t2_ns(value):
        return Parser._positive(value, 't2_ns')

    @staticmethod
    def _positive(value, key):
        if not isinstance(value, (int, float)) or value <= 0:
            raise ConfigError('must be a positive number', key=key)
        return value

    @staticmethod
    def _count(value, key, minimum=1):
        if not isinstance(value, int) or isinstance(value, bool) or \
                value < minimum:
            raise ConfigError('must be an integer >= {0}'.format(minimum),
                              key=key)

    @staticmethod
    def _list(value, key):
        if not isinstance(value, tuple) or not value:
            raise ConfigError('expected a non-empty list', key=key)

    @staticmethod
    def _check_system(system):
        Parser._count(system.n_qc, 'system.n_qc')
        Parser._count(system.slots_per_qc, 'system.slots_per_qc')
        Parser._count(system.to_bits, 'system.to_bits')
        if system.overflow_slots is not None:
            Parser._count(system.overflow_slots, 'system.overflow_slots', 0)
        Parser._count(system.epr_capacity, 'system.epr_capacity')
        system.system_config()

    @staticmethod
    def _check_workload(config, base_dir):
        workload = config.workload
        if workload.path is not None:
            _require_file(workload.path, base_dir, 'workload.path')
            return
        if workload.generator not in GENERATORS:
            raise ConfigError('expected one of {0}'.format(
                ', '.join(GENERATORS)), key='workload.generator')
        if not isinstance(workload.params, dict):
            raise ConfigError('expected an object', key='workload.params')
        if 'n_qubits' not in workload.params:
            raise ConfigError('missing', key='workload.params.n_qubits')
        if workload.generator == 'random' and \
                'n_gates' not in workload.params:
            raise ConfigError('missing', key='workload.params.n_gates')

    @staticmethod
    def _check_sweep(sweep):
        Parser._list(sweep.sizes, 'sweep.sizes')
        Parser._list(sweep.qsfs, 'sweep.qsfs')
        for i, size in enumerate(sweep.sizes):
            Parser._count(size, 'sweep.sizes.{0}'.format(i))
        for i, qsf in enumerate(sweep.qsfs):
            Parser._positive(qsf, 'sweep.qsfs.{0}'.format(i))
        Parser._count(sweep.qubits_per_qc, 'sweep.qubits_per_qc')
        Parser._count(sweep.gates_per_qc, 'sweep.gates_per_qc', 0)
        fraction = sweep.two_qubit_fraction
        if not isinstance(fraction, (int, float)) or \
                isinstance(fraction, bool) or not 0 <= fraction <= 1:
            raise ConfigError('must lie in [0, 1]',
                              key='sweep.two_qubit_fraction')

    @staticmethod
    def _check_benchmarks(config, base_dir):
        benchmarks = config.benchmarks
        for name, path in benchmarks.files.items():
            _require_file(path, base_dir, 'benchmarks.files.' + name)
        for name in benchmarks.names:
            if name not in GENERATORS and name not in benchmarks.files:
                raise ConfigError('unknown benchmark ' + name,
                                  key='benchmarks.names')
        Parser._count(benchmarks.n_qubits, 'benchmarks.n_qubits')
        Parser._count(benchmarks.n_qc, 'benchmarks.n_qc')
        Parser._count(benchmarks.slots_per_qc, 'benchmarks.slots_per_qc')

    # PRIVATE

    @staticmethod
    def __read_json(path):
        try:
            with open(path) as file:
                return json.load(file)
        except OSError as error:
            raise ConfigError(error.strerror or str(error), key=str(path))
        except ValueError as error:
            raise ConfigError('invalid JSON: {0}'.format(error), key=str(path))


def _resolve_files(config, base_dir):
    workload = config.workload
    if workload.path is not None:
        workload = replace(workload,
                           path=resolve_path(workload.path, base_dir))
    benchmarks = config.benchmarks
    if not isinstance(benchmarks.files, dict):
        raise ConfigError('expected an object', key='benchmarks.files')
    files = {name: resolve_path(path, base_dir)
             for name, path in benchmarks.files.items()}
    return replace(config, workload=workload,
                   benchmarks=replace(benchmarks, files=files))


def _join(path, key):
    return key if path is None else '{0}.{1}'.format(path, key)


def _require_file(path, base_dir, key):
    if not os.path.isfile(resolve_path(path, base_dir)):
        raise ConfigError('no such file: {0}'.format(path), key=key)


def resolve_path(path, base_dir='.'):
    return path if os.path.isabs(path) else os.path.join(base_dir, path)
