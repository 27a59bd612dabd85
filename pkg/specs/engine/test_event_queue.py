import pytest
from hypothesis import given, strategies as st

from qmac import CausalityError
from qmac.engine import Event, EventQueue


def test_empty_queue():
    queue = EventQueue()
    assert len(queue) == 0
    assert queue.pop_next() is None
    assert queue.now == 0.0


def test_pop_advances_the_clock():
    queue = EventQueue()
    queue.schedule(5.0, 'late')
    queue.schedule(2.0, 'early')
    assert len(queue) == 2
    assert queue.pop_next().kind == 'early'
    assert queue.now == 2.0
    assert queue.pop_next().kind == 'late'
    assert queue.now == 5.0
    assert queue.scheduled == 2
    assert queue.popped == 2


def test_ties_pop_in_insertion_order():
    queue = EventQueue()
    for kind in ('a', 'b', 'c'):
        queue.schedule(1.0, kind)
    assert [queue.pop_next().kind for _ in range(3)] == ['a', 'b', 'c']


def test_scheduling_in_the_past_is_rejected():
    queue = EventQueue()
    queue.schedule(3.0, 'first')
    queue.pop_next()
    queue.schedule(3.0, 'now-is-fine')
    with pytest.raises(CausalityError):
        queue.schedule(2.999, 'past')


def test_payload_is_not_compared():
    assert Event(1.0, 0, 'x', [1]) < Event(1.0, 1, 'y', {})


@given(st.lists(st.floats(0, 1e6, allow_nan=False), min_size=1))
def test_pops_are_time_ordered(times):
    queue = EventQueue()
    for time in times:
        queue.schedule(time, 'event')
    popped = [queue.pop_next() for _ in times]
    keys = [(e.time, e.seq) for e in popped]
    assert keys == sorted(keys)
    assert queue.pop_next() is None
