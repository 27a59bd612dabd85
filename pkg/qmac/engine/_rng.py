import math
import zlib

import numpy as np


# The stochastic sources of a run, each with its own stream so that
# changing one source does not perturb the draws of another
EPR_GEN = 'epr-gen'
CIRCUIT_GEN = 'circuit-gen'
GRAPH_GEN = 'graph-gen'
MEASUREMENT = 'measurement'


class Rng(object):
    '''
    A seeded random source split into independent named streams.

    .. code-block:: python


        rng = Rng(7)
        rng.uniform('epr-gen')

    :var seed: the seed all streams derive from
    :vartype seed: int
    '''

    def __init__(self, seed):
        self.seed = int(seed)
        self.streams = {}

    def stream(self, name):
        '''
        The :class:`numpy.random.Generator` for ``name``, created on first
        use from the seed and a stable hash of the name.

        :rtype: numpy.random.Generator
        '''
        if name not in self.streams:
            key = zlib.crc32(name.encode('utf8'))
            self.streams[name] = np.random.default_rng([self.seed, key])
        return self.streams[name]

    def uniform(self, name):
        return float(self.stream(name).random())


def sample_exponential(rng, stream, mean):
    '''
    Draws an exponential variate with the given ``mean`` by inverting the
    CDF on the next uniform of ``stream``.

    :param rng: the random source
    :paramtype rng: qmac.engine.Rng

    :param stream: the stream name, e.g. ``"epr-gen"``

    :param mean: the mean of the distribution, in ns

    :rtype: float
    :raises ValueError: when the mean is not positive
    '''
    if mean <= 0:
        raise ValueError('mean must be positive, got {0}'.format(mean))
    return exponential_from_uniform(rng.uniform(stream), mean)


def exponential_from_uniform(u, mean):
    return -mean * math.log1p(-u)
