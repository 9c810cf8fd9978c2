from typing import Optional, Tuple, Union

import numpy as np
from scipy.special import expit

from polythresh.core.errors import DomainError
from polythresh.sampler.stream import RngStream

Size = Optional[Union[int, Tuple[int, ...]]]


def _check_shape(name: str, value: float) -> None:
    if not (np.isfinite(value) and value > 0):
        raise DomainError(f'{name} must be a finite number > 0, got {value!r}')


def sample_gamma(shape: float, rng: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """
    Draws Gamma(shape, 1) variates. numpy implements the Marsaglia-Tsang squeeze method,
    boosted for shapes below 1.

    :param shape: shape parameter, must be > 0
    :param rng: random stream
    :param size: output shape, None for a single float (default: None)
    :return: variate or array of variates
    """
    _check_shape('shape', shape)

    values = rng.generator.standard_gamma(shape, size)
    return float(values) if size is None else values


def sample_log_gamma(shape: float, rng: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """
    Draws logarithms of Gamma(shape, 1) variates without underflow for small shapes,
    using ``Gamma(a) = Gamma(a + 1) U^(1/a)``.

    :param shape: shape parameter, must be > 0
    :param rng: random stream
    :param size: output shape, None for a single float (default: None)
    :return: log-variate or array of log-variates
    """
    _check_shape('shape', shape)
    generator = rng.generator

    if shape >= 1:
        values = np.log(generator.standard_gamma(shape, size))
    else:
        boosted = np.log(generator.standard_gamma(shape + 1.0, size))
        # 1 - U lies in (0, 1], so its logarithm is finite
        values = boosted + np.log1p(-generator.random(size)) / shape

    return float(values) if size is None else values


def sample_beta_scalar(a: float, b: float, rng: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """
    Draws Beta(a, b) variates as ``X / (X + Y)`` for independent ``X ~ Gamma(a)`` and ``Y ~ Gamma(b)``,
    formed in log space as ``expit(ln X - ln Y)``.

    :param a: first shape parameter, must be > 0
    :param b: second shape parameter, must be > 0
    :param rng: random stream
    :param size: output shape, None for a single float (default: None)
    :return: variate or array of variates in [0, 1]
    """
    _check_shape('a', a)
    _check_shape('b', b)

    log_x = sample_log_gamma(a, rng, size)
    log_y = sample_log_gamma(b, rng, size)

    values = expit(np.subtract(log_x, log_y))
    return float(values) if size is None else values


def sample_log_odds(a: float, b: float, rng: RngStream, size: Size = None) -> Union[float, np.ndarray]:
    """
    Draws ``ln(U / (1 - U))`` for ``U ~ Beta(a, b)``, which is ``ln X - ln Y`` for the
    underlying Gamma pair.

    :param a: first shape parameter, must be > 0
    :param b: second shape parameter, must be > 0
    :param rng: random stream
    :param size: output shape, None for a single float (default: None)
    :return: log-odds variate or array of them
    """
    _check_shape('a', a)
    _check_shape('b', b)

    values = np.subtract(sample_log_gamma(a, rng, size), sample_log_gamma(b, rng, size))
    return float(values) if size is None else values
