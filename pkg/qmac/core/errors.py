from pprint import pformat


class SimulationError(RuntimeError):
    '''
    A qmac error

    :var detail: The human readable reason for this error
    :vartype detail: str

    :var context: Extra key/value information about where the error occurred,
        e.g. a line number, a key path or the blocked processes of a run.
    :vartype context: dict

    :var code: A unique code for this type of error. Options include
        ``CircuitError``, ``CapacityError``, ``CompilationError``,
        ``PacketError``, ``CausalityError``, ``ChannelError``,
        ``ProtocolError``, ``DeadlockError`` and ``ConfigError``.
    :vartype code: str
    '''

    def __init__(self, detail, **context):
        self.detail = detail
        self.context = context
        self.code = self.__determine_code()
        RuntimeError.__init__(self, self.description())

    # PROTECTED

    # Log the error
    def _log(self, client):
        if (client.log_level == 'warn'):
            client.logger.warning(
                'qmac %s: %s', self.code, pformat(self.description())
            )

    # PRIVATE

    # Determines the description for this error, as used in in the error output
    def description(self):
        description = self.short_description(self.context)
        return description + self.long_description()

    # Determines the short description, printed on the same line as the
    # error class name
    @staticmethod
    def short_description(context):
        if 'line' in context:
            return '[line {0}] '.format(context['line'])
        if 'key' in context:
            return '[{0}] '.format(context['key'])
        return ''

    # Determines the longer description, printed after the initial error
    def long_description(self):
        message = '{0}'.format(self.detail)
        for entry in self.context.get('blocked', []):
            message += '\n  {0}'.format(entry)
        return message

    # sets the error code to the name of this class
    def __determine_code(self):
        return self.__class__.__name__


class CircuitError(SimulationError):
    '''
    This error occurs when a gate, a generator argument or a circuit file is
    invalid. Parser errors carry the offending ``line``.
    '''

    @property
    def line(self):
        return self.context.get('line')


class CapacityError(SimulationError):
    '''
    This error occurs when a placement or a teleport runs out of slots
    '''
    pass


class CompilationError(SimulationError):
    '''
    This error occurs when a program violates the bundle invariants
    '''
    pass


class PacketError(SimulationError):
    '''
    This error occurs when a packet can not be encoded or decoded
    '''
    pass


class CausalityError(SimulationError):
    '''
    This error occurs when an event is scheduled before the current time
    '''
    pass


class ChannelError(SimulationError):
    '''
    This error occurs when two transmissions overlap on the shared channel
    '''
    pass


class ProtocolError(SimulationError):
    '''
    This error occurs when the MAC or execution protocol sees a message no
    process is waiting for
    '''
    pass


class DeadlockError(SimulationError):
    '''
    This error occurs when the event queue runs dry with unfinished work.

    :var blocked: the processes still waiting when the run stopped
    :vartype blocked: list
    '''

    @property
    def blocked(self):
        return self.context.get('blocked', [])


class ConfigError(SimulationError):
    '''
    This error occurs when an experiment configuration is invalid. The
    dotted ``key`` path names the offending entry.
    '''

    @property
    def key(self):
        return self.context.get('key')
