from qmac.circuit import serialize_circuit
from qmac.core.decorator import Decorator
from qmac.core.errors import ConfigError
from qmac.core.config import GENERATORS
from qmac.core.job import Workload


class GenCircuit(Decorator, object):
    def get(self, generator, seed=0, **params):
        '''
        A generated circuit in the circuit file format.

        .. code-block:: python


            text = simulator.experiments.gen_circuit.get(
                'random', n_qubits=16, n_gates=160, seed=3)

        :param generator: ``"random"``, ``"ghz"``, ``"qft"`` or
            ``"graphstate"``
        :param seed: the seed of the random generators
        :param params: the generator parameters, e.g. ``n_qubits``

        :rtype: str
        :raises qmac.ConfigError: for an unknown generator
        '''
        if generator not in GENERATORS:
            raise ConfigError('expected one of {0}'.format(
                ', '.join(GENERATORS)), key='generator')
        return serialize_circuit(Workload(generator, params).build(seed))
