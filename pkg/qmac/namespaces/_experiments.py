from qmac.core.decorator import Decorator
from qmac.experiments import (Benchmarks, Coherence, CompareMac, GenCircuit,
                              Run, SweepQsf, SweepSize)


class Experiments(Decorator, object):
    def __init__(self, simulator):
        Decorator.__init__(self, simulator)
        self.run = Run(simulator)
        self.sweep_size = SweepSize(simulator)
        self.sweep_qsf = SweepQsf(simulator)
        self.compare_mac = CompareMac(simulator)
        self.benchmarks = Benchmarks(simulator)
        self.coherence = Coherence(simulator)
        self.gen_circuit = GenCircuit(simulator)
