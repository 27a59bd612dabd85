import math

import pytest

from qmac.engine import (EPR_GEN, MEASUREMENT, Rng, exponential_from_uniform,
                         sample_exponential)


def test_streams_are_reproducible():
    first = [Rng(3).uniform(EPR_GEN) for _ in range(2)]
    assert first[0] == first[1]


def test_streams_are_independent():
    rng = Rng(3)
    draws = [rng.uniform(EPR_GEN) for _ in range(5)]
    other = Rng(3)
    for _ in range(10):
        other.uniform(MEASUREMENT)
    assert [other.uniform(EPR_GEN) for _ in range(5)] == draws


def test_seeds_differ():
    assert Rng(1).uniform(EPR_GEN) != Rng(2).uniform(EPR_GEN)


def test_exponential_from_uniform():
    assert exponential_from_uniform(0.0, 1000) == 0.0
    assert exponential_from_uniform(0.5, 1000) == pytest.approx(
        1000 * math.log(2))


def test_sample_exponential():
    rng = Rng(0)
    samples = [sample_exponential(rng, EPR_GEN, 1000) for _ in range(2000)]
    assert all(s >= 0 for s in samples)
    assert sum(samples) / len(samples) == pytest.approx(1000, rel=0.1)


def test_sample_exponential_rejects_non_positive_mean():
    with pytest.raises(ValueError):
        sample_exponential(Rng(0), EPR_GEN, 0)
