import pytest
from mock import MagicMock

from qmac import CapacityError, Job, Simulator, Workload


@pytest.fixture
def jobs():
    workload = Workload('ghz', {'n_qubits': 4})
    return [Job(workload, 2, 4, mode, seed)
            for mode in ('ct', 'id') for seed in (0, 1)]


def test_execute_returns_results_in_job_order(jobs):
    results = Simulator().execute(jobs)
    assert [r.job for r in results] == jobs
    assert all(r.teleports == 3 for r in results)
    assert all(r.trace is None for r in results)


def test_execute_on_workers(jobs):
    serial = Simulator().execute(jobs)
    parallel = Simulator(workers=2).execute(jobs)
    assert [r.report for r in parallel] == [r.report for r in serial]


def test_execute_logs_jobs_and_results(jobs):
    logger = MagicMock()
    Simulator(logger=logger, log_level='debug').execute(jobs[:1])
    assert logger.debug.call_count == 2
    assert logger.debug.call_args_list[0][0][1] == 'Job'


def test_execute_logs_and_raises_failures():
    logger = MagicMock()
    simulator = Simulator(logger=logger, log_level='warn')
    job = Job(Workload('ghz', {'n_qubits': 40}), 1, 4, 'id', 0)
    with pytest.raises(CapacityError):
        simulator.execute([job])
    assert logger.warning.call_args[0][1] == 'CapacityError'
