from ._event import Event, EventQueue
from ._rng import Rng, sample_exponential, exponential_from_uniform
from ._rng import EPR_GEN, CIRCUIT_GEN, GRAPH_GEN, MEASUREMENT
from ._trace import Category, Interval, Trace, TOKEN_PASS
from ._trace import TRACE_COLUMNS, CHANNEL_COLUMNS

__all__ = ['Event', 'EventQueue', 'Rng', 'sample_exponential',
           'exponential_from_uniform', 'EPR_GEN', 'CIRCUIT_GEN', 'GRAPH_GEN',
           'MEASUREMENT', 'Category', 'Interval', 'Trace', 'TOKEN_PASS',
           'TRACE_COLUMNS', 'CHANNEL_COLUMNS']
