from ._run import Run
from ._sweeps import SweepSize, SweepQsf, CompareMac
from ._benchmarks import Benchmarks, Coherence
from ._gen_circuit import GenCircuit

__all__ = ['Run', 'SweepSize', 'SweepQsf', 'CompareMac', 'Benchmarks',
           'Coherence', 'GenCircuit']
