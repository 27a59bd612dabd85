import pytest
from mock import MagicMock

from qmac import Simulator
from qmac.experiments import (Benchmarks, Coherence, CompareMac, GenCircuit,
                              Run, SweepQsf, SweepSize)


@pytest.fixture
def simulator():
    return Simulator()


def test_expected_paths(simulator):
    assert simulator.experiments is not None
    assert isinstance(simulator.experiments.run, Run)
    assert isinstance(simulator.experiments.sweep_size, SweepSize)
    assert isinstance(simulator.experiments.sweep_qsf, SweepQsf)
    assert isinstance(simulator.experiments.compare_mac, CompareMac)
    assert isinstance(simulator.experiments.benchmarks, Benchmarks)
    assert isinstance(simulator.experiments.coherence, Coherence)
    assert isinstance(simulator.experiments.gen_circuit, GenCircuit)


def test_experiments_share_the_simulator(simulator):
    assert simulator.experiments.simulator is simulator
    assert simulator.experiments.run.simulator is simulator
    assert simulator.experiments.gen_circuit.simulator is simulator


def test_run_calls_execute():
    simulator = MagicMock(Simulator)
    simulator.timing = Simulator().timing
    simulator.execute.return_value = []
    config = Simulator().load_config({'seeds': [5]})
    result = Run(simulator).run(config)
    (jobs,), _ = simulator.execute.call_args
    assert [(j.mode, j.seed) for j in jobs] == [('ct', 5), ('id', 5)]
    assert len(result) == 0
