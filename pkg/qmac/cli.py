import argparse
import os
import sys
from dataclasses import replace

from qmac.core.config import GENERATORS
from qmac.core.errors import ConfigError, SimulationError
from qmac.mixins.parser import Parser
from qmac.simulator import Simulator
from qmac.version import version


# Subcommands to the experiment namespace they run
COMMANDS = {
    'run': 'run',
    'sweep-size': 'sweep_size',
    'sweep-qsf': 'sweep_qsf',
    'compare-mac': 'compare_mac',
    'benchmarks': 'benchmarks',
    'coherence': 'coherence'
}


def build_parser():
    '''
    The argument parser of the ``qmac`` command.

    :rtype: argparse.ArgumentParser
    '''
    parser = argparse.ArgumentParser(
        prog='qmac',
        description='Simulate the classical channel of a multi-core '
                    'quantum computer under circulating-token and '
                    'instruction-directed medium access.')
    parser.add_argument('--version', action='version', version=version)
    commands = parser.add_subparsers(dest='command', required=True)

    for name in COMMANDS:
        command = commands.add_parser(name)
        command.add_argument('--config', help='experiment configuration '
                                              '(JSON)')
        command.add_argument('--out', help='report CSV, stdout if omitted')
        command.add_argument('--trace', metavar='DIR',
                             help='write trace and channel CSVs of every '
                                  'run into DIR')
        command.add_argument('--seeds', help='comma separated seeds')
        command.add_argument('--mode', choices=['ct', 'id', 'both'])
        command.add_argument('--workers', type=int,
                             help='worker processes for the jobs')
        command.add_argument('--log-level',
                             choices=['silent', 'warn', 'debug'])

    generate = commands.add_parser('gen-circuit')
    generate.add_argument('--generator', choices=GENERATORS,
                          default='random')
    generate.add_argument('--n-qubits', type=int, required=True)
    generate.add_argument('--n-gates', type=int)
    generate.add_argument('--two-qubit-fraction', type=float, default=0.5)
    generate.add_argument('--seed', type=int, default=0)
    generate.add_argument('--out', help='circuit file, stdout if omitted')
    return parser


def main(argv=None):
    '''
    Runs the ``qmac`` command; returns the exit status.
    '''
    args = build_parser().parse_args(argv)
    try:
        if args.command == 'gen-circuit':
            return _gen_circuit(args)
        return _experiment(args)
    except SimulationError as error:
        print('{0}: {1}'.format(error.code, error.description()),
              file=sys.stderr)
        return 2


def apply_overrides(config, seeds=None, mode=None, out=None, trace=None):
    '''
    The configuration with the command-line flags applied on top.

    :rtype: qmac.core.config.ExperimentConfig
    :raises qmac.ConfigError: on malformed seeds
    '''
    if seeds is not None:
        config = replace(config, seeds=Parser._seeds(_parse_seeds(seeds)))
    if mode is not None:
        config = replace(config, modes=Parser._modes(mode))
    output = config.output
    if out is not None:
        output = replace(output, report=out)
    if trace is not None:
        output = replace(output, trace=trace)
    return replace(config, output=output)


# PRIVATE

def _parse_seeds(text):
    try:
        return [int(s) for s in text.split(',') if s.strip()]
    except ValueError:
        raise ConfigError('seeds must be integers', key='seeds')


def _experiment(args):
    simulator = Simulator(workers=args.workers, log_level=args.log_level)
    config = apply_overrides(simulator.load_config(args.config), args.seeds,
                             args.mode, args.out, args.trace)
    experiment = getattr(simulator.experiments, COMMANDS[args.command])
    result = experiment.run(config)

    output = config.output
    if output.report is None:
        sys.stdout.write(result.to_csv())
    else:
        result.to_csv(output.report)
    manifest = output.manifest
    if manifest is None and output.report is not None:
        manifest = output.report + '.manifest.json'
    if manifest is not None:
        with open(manifest, 'w') as file:
            file.write(result.dumps_manifest(config))
    if output.trace is not None:
        _write_traces(result, output.trace)
    return 0


def _write_traces(result, directory):
    os.makedirs(directory, exist_ok=True)
    for job, trace in result.traces():
        stem = 'n{0}_qsf{1}_{2}_s{3}'.format(job.n_qc, job.timing.qsf,
                                             job.mode, job.seed)
        if job.label is not None:
            stem = '{0}_{1}'.format(job.label, stem)
        trace.to_frame().to_csv(
            os.path.join(directory, 'trace_{0}.csv'.format(stem)),
            index=False, lineterminator='\n')
        trace.channel_frame().to_csv(
            os.path.join(directory, 'channel_{0}.csv'.format(stem)),
            index=False, lineterminator='\n')


def _gen_circuit(args):
    params = {'n_qubits': args.n_qubits}
    if args.generator == 'random':
        if args.n_gates is None:
            raise ConfigError('random circuits need --n-gates', key='n_gates')
        params['n_gates'] = args.n_gates
        params['two_qubit_fraction'] = args.two_qubit_fraction
    simulator = Simulator()
    text = simulator.experiments.gen_circuit.get(args.generator,
                                                 seed=args.seed, **params)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, 'w') as file:
            file.write(text)
    return 0


if __name__ == '__main__':
    sys.exit(main())
