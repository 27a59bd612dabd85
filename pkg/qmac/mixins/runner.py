from concurrent.futures import ProcessPoolExecutor
from pprint import pformat

from qmac.core.errors import SimulationError
from qmac.core.job import run_job


# Runs simulation jobs for every experiment, serially or on a pool of
# worker processes
class Runner(object):
    '''
    Runs simulation jobs for every experiment.
    '''

    def execute(self, jobs):
        '''
        Runs every job and returns their results in job order, whatever
        order the workers finish in.

        .. code-block:: python


            results = simulator.execute([Job(workload, 2, 16, 'id', 0)])

        :param jobs: the jobs to run
        :paramtype jobs: list

        :rtype: list
        :raises qmac.SimulationError: when a job fails
        '''
        jobs = list(jobs)
        for job in jobs:
            self.__log('Job', job)
        try:
            results = self.__run(jobs)
        except SimulationError as error:
            error._log(self)
            raise
        for result in results:
            self.__log_result(result)
        return results

    # PRIVATE

    def __run(self, jobs):
        if self.workers == 1 or len(jobs) < 2:
            return [run_job(job) for job in jobs]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(run_job, jobs))

    # Log any object
    def __log(self, name, object):
        if (self.log_level == 'debug'):
            self.logger.debug('%s\n%s', name, pformat(object.__dict__))

    def __log_result(self, result):
        if (self.log_level == 'debug'):
            self.logger.debug(
                'Finished %s seed=%s: makespan=%.3f ns, %d events',
                result.job.mode, result.job.seed, result.report.makespan,
                result.events)
