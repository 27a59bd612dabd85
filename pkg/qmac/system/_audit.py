from qmac.core.errors import ChannelError, ProtocolError
from qmac.engine import TOKEN_PASS


# Slack for float sums of packet durations
EPSILON = 1e-9


def audit_trace(trace):
    '''
    Checks a finished trace: no two channel intervals overlap, every
    teleport runs its phases in causal order and no bundle starts before
    the previous one's last end-of-computation packet arrived.

    :param trace: the trace of a finished run
    :paramtype trace: qmac.engine.Trace

    :raises qmac.ChannelError: on overlapping channel intervals
    :raises qmac.ProtocolError: on a causality or barrier violation
    '''
    _audit_channel(trace)
    _audit_teleports(trace)
    _audit_barrier(trace)


# PRIVATE

def _audit_channel(trace):
    previous = None
    for interval in sorted(trace.channel_intervals(),
                           key=lambda i: (i.start_ns, i.end_ns)):
        if previous is not None and \
                interval.start_ns < previous.end_ns - EPSILON:
            raise ChannelError('{0} {1} at {2!r} overlaps {3} {4} until '
                               '{5!r}'.format(interval.node, interval.activity,
                                              interval.start_ns, previous.node,
                                              previous.activity,
                                              previous.end_ns))
        previous = interval


def _audit_teleports(trace):
    for teleport in trace.teleports:
        phases = [teleport.epr_ready, teleport.pre_start, teleport.pre_end,
                  teleport.cbp_start, teleport.cbp_end, teleport.post_start]
        if any(later < earlier for earlier, later in zip(phases, phases[1:])):
            raise ProtocolError(
                'teleport to {0} in bundle {1} out of order: {2}'.format(
                    teleport.tps.destination, teleport.bundle_idx, phases))


def _audit_barrier(trace):
    ends, starts = _bundle_bounds(trace)
    for idx, end in ends.items():
        if idx + 1 in starts and starts[idx + 1] < end - EPSILON:
            raise ProtocolError(
                'bundle {0} starts at {1!r} before bundle {2} ended at '
                '{3!r}'.format(idx + 1, starts[idx + 1], idx, end))


# The last EOC end and the first activity start of every bundle
def _bundle_bounds(trace):
    ends, starts = {}, {}
    for interval in trace:
        idx = interval.bundle_idx
        if interval.activity == 'EOC':
            ends[idx] = max(ends.get(idx, 0.0), interval.end_ns)
        if interval.activity != TOKEN_PASS:
            starts[idx] = min(starts.get(idx, interval.start_ns),
                              interval.start_ns)
    return ends, starts
