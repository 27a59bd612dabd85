from .mixins.validator import Validator
from .mixins.parser import Parser
from .mixins.runner import Runner
from .namespaces import Core as Namespaces


class Simulator(Namespaces, Parser, Runner, Validator, object):
    '''
    The simulator of classical-channel MAC policies for distributed
    quantum computers.
    '''

    # The initialization method for the entire module
    def __init__(self, **options):
        '''
        Initialize with the defaults:

        .. code-block:: python


            from qmac import Simulator

            simulator = Simulator()
            config = simulator.load_config('sweep.json')
            result = simulator.experiments.sweep_size.run(config)

        Every option may also be set through an environment variable, e.g.
        ``QMAC_LOG_LEVEL=debug`` or ``QMAC_WORKERS=4``.

        :param logger: (optional) a Python compatible logger
            (Default: ``logging.Logger``)
        :paramtype logger: logging.Logger

        :param log_level: (optional) the log level of the simulator, either
            ``"debug"``, ``"warn"``, or ``"silent"`` mode
            (Default: ``"silent"``)
        :paramtype log_level: str

        :param workers: (optional) the number of processes experiments run
            their jobs on (Default: ``1``)
        :paramtype workers: int

        :param timing: (optional) overrides of the default latencies, as a
            ``dict`` of :class:`qmac.TimingConfig` fields or a whole
            :class:`qmac.TimingConfig`
        :paramtype timing: dict

        :raises ValueError: when an option has an invalid value
        :raises qmac.ConfigError: when a timing override is invalid
        '''
        self._initialize_logger(options)
        self._initialize_runner(options)
        self._initialize_timing(options)

        recognized_options = ['logger', 'log_level', 'workers', 'timing']
        self._warn_on_unrecognized_options(options, self.logger,
                                           recognized_options)
        Namespaces.__init__(self)
