import json
import os
import sys
import logging

from qmac.core.errors import ConfigError
from qmac.system import TimingConfig


# A set of helper methods to allow the validating of
# arguments past into the Simulator
class Validator(object):

    # PROTECTED

    # Checks a list of options for unrecognized keys and warns the user.
    # This is mainly used to provide a nice experience when users make a typo
    # in their arguments.
    @staticmethod
    def _warn_on_unrecognized_options(options, logger, valid_options):
        for key in options:
            if (key in valid_options):
                continue
            logger.warning('Unrecognized option: {0}'.format(key))

    # Initializes an optional Logger
    def _initialize_logger(self, options):
        default_logger = logging.getLogger('qmac')
        default_logger.setLevel(logging.DEBUG)
        if not default_logger.handlers:
            default_logger.addHandler(logging.StreamHandler(sys.stdout))

        self.logger = self.__init_optional('logger', options, default_logger)
        self.log_level = self.__init_optional('log_level', options, 'silent')
        if self.log_level not in ('silent', 'warn', 'debug'):
            raise ValueError('Invalid log_level: {0}'.format(self.log_level))

    # Initializes the number of worker processes used for sweeps
    def _initialize_runner(self, options):
        workers = int(self.__init_optional('workers', options, 1))
        if workers < 1:
            raise ValueError('workers must be at least 1')
        self.workers = workers

    # Initializes the default latencies, optionally overridden
    def _initialize_timing(self, options):
        overrides = self.__init_optional('timing', options, {})
        if isinstance(overrides, TimingConfig):
            self.timing = overrides
            return
        if isinstance(overrides, str):
            overrides = _timing_from_json(overrides)
        self.timing = TimingConfig().with_overrides(**overrides)

    # PRIVATE

    # Tries to find an option in the options hash and in the environment
    # variables. When it can not find it anywhere it defaults to the provided
    # default option.
    @staticmethod
    def __init_optional(key, options, default=None):
        value = options.get(key, None)
        if (value is None):
            env_key = 'QMAC_{0}'.format(key.upper())
            value = os.environ.get(env_key, None)
        if (value is None):
            value = default
        return value


# QMAC_TIMING holds a JSON object of latency overrides
def _timing_from_json(text):
    try:
        overrides = json.loads(text)
    except ValueError as error:
        raise ConfigError('invalid JSON: {0}'.format(error), key='timing')
    if not isinstance(overrides, dict):
        raise ConfigError('expected an object', key='timing')
    return overrides
