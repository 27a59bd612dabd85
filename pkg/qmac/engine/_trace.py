from dataclasses import dataclass
from enum import Enum

import pandas as pd


class Category(Enum):
    '''
    The execution-time categories every timed interval is tagged with.

    :cvar Q_COMM: EPR generation and distribution
    :cvar Q_COMP: gates and teleport pre-/post-processing
    :cvar C_COMM: channel transmissions and token circulation
    :cvar C_COMP: bundle fetch and decode
    '''
    Q_COMM = 'q_comm'
    Q_COMP = 'q_comp'
    C_COMM = 'c_comm'
    C_COMP = 'c_comp'


# The activity name of coalesced token hops under the circulating token
TOKEN_PASS = 'token-pass'


@dataclass(frozen=True)
class Interval:
    '''
    One timed activity of a run.

    :var start_ns: when the activity starts
    :var end_ns: when it ends
    :var node: the node performing it, e.g. ``"CU"``, ``"QC3"``, ``"EPR"``
    :var activity: what happens, e.g. ``"decode"`` or a packet kind
    :var category: the execution-time category
    :var bundle_idx: the bundle the activity belongs to
    :var channel: whether the activity occupies the shared channel
    '''
    start_ns: float
    end_ns: float
    node: str
    activity: str
    category: Category
    bundle_idx: int
    channel: bool = False

    @property
    def duration(self):
        return self.end_ns - self.start_ns


# Column order of the trace CSV
TRACE_COLUMNS = ['start_ns', 'end_ns', 'node', 'activity', 'category',
                 'bundle_idx']

# Column order of the channel CSV
CHANNEL_COLUMNS = ['start_ns', 'end_ns', 'node', 'packet', 'category']


class Trace(object):
    '''
    The intervals recorded by a run, in recording order, plus the run's
    metadata.

    :var intervals: every recorded interval
    :vartype intervals: list

    :var metadata: describes the run (``n_qc``, ``qsf``, ``mode``, ``seed``)
    :vartype metadata: dict

    :var teleports: the phase times of every completed teleport, for the
        causality audit
    :vartype teleports: list
    '''

    def __init__(self, **metadata):
        self.intervals = []
        self.teleports = []
        self.metadata = metadata

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def record(self, start, end, node, activity, category, bundle_idx,
               channel=False):
        interval = Interval(start, end, node, activity, category, bundle_idx,
                            channel)
        self.intervals.append(interval)
        return interval

    @property
    def makespan(self):
        return max((i.end_ns for i in self.intervals), default=0.0)

    def channel_intervals(self):
        return [i for i in self.intervals if i.channel]

    def to_frame(self):
        '''
        The trace as a :class:`pandas.DataFrame` with the trace CSV columns.

        :rtype: pandas.DataFrame
        '''
        rows = [(i.start_ns, i.end_ns, i.node, i.activity, i.category.value,
                 i.bundle_idx) for i in self.intervals]
        return pd.DataFrame(rows, columns=TRACE_COLUMNS)

    def channel_frame(self):
        '''
        One row per transmission or token circulation window, for the
        collision audit.

        :rtype: pandas.DataFrame
        '''
        rows = [(i.start_ns, i.end_ns, i.node, i.activity, i.category.value)
                for i in self.channel_intervals()]
        return pd.DataFrame(rows, columns=CHANNEL_COLUMNS)
