import json
from dataclasses import asdict

from qmac.version import version


class Result(object):
    '''
    The table an experiment produced.

    :var command: the experiment that produced it, e.g. ``"sweep-size"``
    :vartype command: str

    :var frame: the rows, in deterministic order
    :vartype frame: pandas.DataFrame

    :var jobs: the results of every job behind the table, in job order
    :vartype jobs: list
    '''

    def __init__(self, command, frame, jobs=()):
        self.command = command
        self.frame = frame
        self.jobs = list(jobs)

    def __len__(self):
        return len(self.frame)

    def to_csv(self, path=None):
        '''
        Writes the table as CSV to ``path``, or returns it as a string.
        '''
        return self.frame.to_csv(path, index=False, lineterminator='\n')

    def traces(self):
        '''
        The kept traces, as ``(job, trace)`` pairs.

        :rtype: list
        '''
        return [(r.job, r.trace) for r in self.jobs if r.trace is not None]

    def manifest(self, config):
        '''
        Describes the run: the command, the tool version and the
        configuration it ran with.

        :rtype: dict
        '''
        return {'command': self.command, 'version': version,
                'config': asdict(config)}

    def dumps_manifest(self, config):
        return json.dumps(self.manifest(config), indent=2, sort_keys=True,
                          default=list)
