import json

import pytest

from qmac.cli import apply_overrides, build_parser, main
from qmac.core.config import ExperimentConfig
from qmac.metrics import REPORT_COLUMNS


def test_run_to_stdout(capsys):
    assert main(['run', '--seeds', '0', '--mode', 'id']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ','.join(REPORT_COLUMNS)
    assert len(lines) == 2


def test_run_writes_report_and_manifest(tmp_path):
    out = tmp_path / 'report.csv'
    assert main(['run', '--seeds', '0,1', '--out', str(out)]) == 0
    manifest = json.loads((tmp_path / 'report.csv.manifest.json').read_text())
    assert manifest['command'] == 'run'
    assert manifest['config']['seeds'] == [0, 1]
    assert len(out.read_text().splitlines()) == 5


def test_reports_are_byte_identical(tmp_path):
    config = tmp_path / 'experiment.json'
    config.write_text(json.dumps({
        'workload': {'generator': 'random',
                     'params': {'n_qubits': 8, 'n_gates': 40}},
        'system': {'n_qc': 4, 'slots_per_qc': 2}
    }))
    for name in ('first.csv', 'second.csv'):
        assert main(['run', '--config', str(config), '--seeds', '1,2',
                     '--out', str(tmp_path / name)]) == 0
    first = (tmp_path / 'first.csv').read_bytes()
    assert first == (tmp_path / 'second.csv').read_bytes()


def test_trace_directory(tmp_path):
    traces = tmp_path / 'traces'
    assert main(['run', '--seeds', '0', '--mode', 'ct', '--out',
                 str(tmp_path / 'r.csv'), '--trace', str(traces)]) == 0
    assert sorted(p.name for p in traces.iterdir()) == [
        'channel_n2_qsf1.0_ct_s0.csv', 'trace_n2_qsf1.0_ct_s0.csv']
    header = (traces / 'trace_n2_qsf1.0_ct_s0.csv').read_text().splitlines()
    assert header[0] == 'start_ns,end_ns,node,activity,category,bundle_idx'


def test_gen_circuit(capsys, tmp_path):
    assert main(['gen-circuit', '--generator', 'ghz', '--n-qubits', '3']) == 0
    assert capsys.readouterr().out == 'qubits 3\nh 0\ncx 0 1\ncx 1 2\n'

    out = tmp_path / 'random.qc'
    assert main(['gen-circuit', '--n-qubits', '4', '--n-gates', '9',
                 '--seed', '2', '--out', str(out)]) == 0
    assert out.read_text().startswith('qubits 4\n')


@pytest.mark.parametrize('argv', [
    ['gen-circuit', '--n-qubits', '4'],
    ['run', '--seeds', 'one,two'],
    ['run', '--config', 'no/such/experiment.json'],
])
def test_errors_exit_with_status_2(capsys, argv):
    assert main(argv) == 2
    assert 'Error' in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit):
        build_parser().parse_args(['run', '--mode', 'aloha'])
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_apply_overrides():
    config = apply_overrides(ExperimentConfig(), seeds='4, 5', mode='ct',
                             out='r.csv', trace='traces')
    assert config.seeds == (4, 5)
    assert config.modes == ('ct',)
    assert config.output.report == 'r.csv'
    assert config.output.trace == 'traces'
    assert apply_overrides(ExperimentConfig()) == ExperimentConfig()
