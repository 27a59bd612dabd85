import pytest

from qmac import ChannelError
from qmac.engine import Category, EventQueue, Trace, TOKEN_PASS
from qmac.isa import EOC, TP, BitWidths
from qmac.mac import (CU, Channel, CirculatingToken, CtArbiter, Mode,
                      Request, node_name, transmit_duration)


@pytest.fixture
def channel():
    widths = BitWidths.for_system(n_qc=2, slots_per_qc=16)
    return Channel(12.0, widths, 'id', Trace())


def drain(queue):
    event = queue.pop_next()
    while event is not None:
        handler, args = event.payload
        handler(*args)
        event = queue.pop_next()


def test_mode_parse():
    assert Mode.parse('CT') is Mode.CT
    assert Mode.parse(Mode.ID) is Mode.ID
    with pytest.raises(ValueError):
        Mode.parse('aloha')


def test_node_names():
    assert node_name(CU) == 'CU'
    assert node_name(1) == 'QC0'
    assert node_name(4) == 'QC3'


def test_transmit_duration(channel):
    assert transmit_duration(TP(1), channel) == pytest.approx(11 / 12)


def test_transmit_records_the_interval(channel):
    end = channel.transmit(CU, TP(0), 2.0, bundle_idx=3)
    assert end == pytest.approx(2.0 + 11 / 12)
    assert channel.busy_until == end
    assert channel.active == ('CU', 'TP')
    (interval,) = channel.trace.channel_intervals()
    assert interval.node == 'CU'
    assert interval.activity == 'TP'
    assert interval.category is Category.C_COMM
    assert interval.bundle_idx == 3


def test_overlapping_transmissions_collide(channel):
    channel.transmit(1, EOC(0), 0.0, 0)
    with pytest.raises(ChannelError):
        channel.transmit(2, EOC(1), 0.2, 0)
    channel.transmit(2, EOC(1), 4 / 12, 0)


def test_channel_rejects_non_positive_bitrate():
    with pytest.raises(ValueError):
        Channel(0, BitWidths(1, 1), Mode.CT, Trace())


def test_arbiter_serves_in_ring_order(channel):
    queue = EventQueue()
    arbiter = CtArbiter(CirculatingToken(3), channel, queue.schedule)
    sent = []
    for position in (2, 1):
        arbiter.request(Request(position, EOC(position - 1), 0.0, 0,
                                lambda s, e: sent.append((s, e))), 0.0)
    assert arbiter.pending_count == 2
    drain(queue)
    assert arbiter.pending_count == 0
    assert sent == [pytest.approx((1.0, 1 + 4 / 12)),
                    pytest.approx((1 + 4 / 12 + 1, 2 + 8 / 12))]
    activities = [(i.node, i.activity) for i in channel.trace]
    assert activities == [('token', TOKEN_PASS), ('QC0', 'EOC'),
                          ('token', TOKEN_PASS), ('QC1', 'EOC')]


def test_exhaustive_holder_sends_everything(channel):
    queue = EventQueue()
    arbiter = CtArbiter(CirculatingToken(3), channel, queue.schedule)
    sent = []
    for _ in range(2):
        arbiter.request(Request(1, EOC(0), 0.0, 0,
                                lambda s, e: sent.append(s)), 0.0)
    drain(queue)
    assert sent == [pytest.approx(1.0), pytest.approx(1 + 4 / 12)]


def test_single_service_releases_after_each_packet(channel):
    queue = EventQueue()
    arbiter = CtArbiter(CirculatingToken(3), channel, queue.schedule,
                        exhaustive=False)
    sent = []
    for _ in range(2):
        arbiter.request(Request(1, EOC(0), 0.0, 0,
                                lambda s, e: sent.append(s)), 0.0)
    drain(queue)
    # the second packet waits a whole lap after the first release
    assert sent == [pytest.approx(1.0), pytest.approx(1 + 4 / 12 + 3)]
