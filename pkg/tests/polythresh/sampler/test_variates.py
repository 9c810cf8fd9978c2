import math

import numpy as np
import pytest
from scipy.special import digamma

from polythresh.core import DomainError
from polythresh.sampler.stream import RngStream
from polythresh.sampler.variates import sample_beta_scalar, sample_gamma, sample_log_gamma, sample_log_odds

SAMPLES = 20000


def test_sample_gamma():
    values = sample_gamma(2.5, RngStream(1), SAMPLES)

    assert values.shape == (SAMPLES,)
    assert np.all(values > 0)
    assert abs(np.mean(values) - 2.5) < 0.08

    assert isinstance(sample_gamma(2.5, RngStream(1)), float)

    for shape in [0.0, -1.0, math.nan, math.inf]:
        with pytest.raises(DomainError):
            sample_gamma(shape, RngStream(1))


def test_sample_log_gamma():
    values = sample_log_gamma(3.0, RngStream(2), SAMPLES)
    assert abs(np.mean(values) - digamma(3.0)) < 0.03

    # Gamma(0.001) variates underflow, their logarithms stay finite
    values = sample_log_gamma(1e-3, RngStream(3), SAMPLES)
    assert np.all(np.isfinite(values))
    assert abs(np.mean(values) - digamma(1e-3)) < 50

    assert isinstance(sample_log_gamma(0.5, RngStream(1)), float)
    assert sample_log_gamma(4.0, RngStream(1), (2, 3)).shape == (2, 3)


def test_sample_beta_scalar():
    values = sample_beta_scalar(2.0, 3.0, RngStream(4), SAMPLES)

    assert np.all((values >= 0) & (values <= 1))
    assert abs(np.mean(values) - 0.4) < 0.01

    tiny = sample_beta_scalar(1e-3, 1e-3, RngStream(5), SAMPLES)
    assert np.all(np.isfinite(tiny))

    with pytest.raises(DomainError):
        sample_beta_scalar(0.0, 1.0, RngStream(1))

    with pytest.raises(DomainError):
        sample_beta_scalar(1.0, -1.0, RngStream(1))


def test_sample_log_odds():
    values = sample_log_odds(2.0, 5.0, RngStream(6), SAMPLES)

    assert abs(np.mean(values) - (digamma(2.0) - digamma(5.0))) < 0.05
    assert isinstance(sample_log_odds(2.0, 5.0, RngStream(6)), float)

    with pytest.raises(DomainError):
        sample_log_odds(2.0, 0.0, RngStream(6))
