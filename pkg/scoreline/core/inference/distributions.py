"""
Copyright 2026 The Scoreline Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

F and Student t distribution functions on top of the regularized incomplete beta function.

For X ~ F(d1, d2):

    P(X <= x) = I(d1 x / (d1 x + d2); d1/2, d2/2)
    P(X >  x) = I(d2 / (d2 + d1 x); d2/2, d1/2)

The upper tail is evaluated directly rather than as 1 - cdf, which keeps small P values accurate.
"""
import math
import numbers

import numpy as np
from scipy import special

from ..errors import DegreesOfFreedomError, UsageError


# ----------------------------------------------------------------------------------------------------------------------
def _check_dof(*values):
    for value in values:
        if isinstance(value, bool) or not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0:
            raise DegreesOfFreedomError('Degrees of freedom must be positive and finite, got %r' % (value,))


# ----------------------------------------------------------------------------------------------------------------------
def _unwrap(value, result):
    return float(result) if np.ndim(value) == 0 else result


# ----------------------------------------------------------------------------------------------------------------------
def f_cdf(x, d1, d2):
    """
    CDF of the F distribution with (d1, d2) degrees of freedom.

    :param x: the statistic, scalar or array. Negative values have probability 0, +inf has probability 1.
    :type x: float or np.ndarray

    :param d1: numerator degrees of freedom.
    :type d1: int

    :param d2: denominator degrees of freedom.
    :type d2: int

    :return: P(X <= x).
    :rtype: float or np.ndarray
    """
    _check_dof(d1, d2)
    values = np.asarray(x, dtype=np.float64)

    with np.errstate(invalid='ignore', divide='ignore'):
        clipped = np.clip(values, 0.0, None)
        scaled = d1 * clipped
        result = special.betainc(d1 / 2.0, d2 / 2.0, scaled / (scaled + d2))

    result = np.where(np.isposinf(values), 1.0, result)
    result = np.where(np.isnan(values), np.nan, result)
    return _unwrap(x, result)


# ----------------------------------------------------------------------------------------------------------------------
def f_sf(x, d1, d2):
    """
    Upper tail P(X > x) of the F distribution; the P value of an F test.
    """
    _check_dof(d1, d2)
    values = np.asarray(x, dtype=np.float64)

    with np.errstate(invalid='ignore', divide='ignore'):
        clipped = np.clip(values, 0.0, None)
        result = special.betainc(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * clipped))

    result = np.where(np.isposinf(values), 0.0, result)
    result = np.where(np.isnan(values), np.nan, result)
    return _unwrap(x, result)


# ----------------------------------------------------------------------------------------------------------------------
def t_cdf(x, d):
    """
    CDF of Student's t distribution with d degrees of freedom.
    """
    _check_dof(d)
    return _unwrap(x, special.stdtr(d, np.asarray(x, dtype=np.float64)))


# ----------------------------------------------------------------------------------------------------------------------
def t_quantile(q, d):
    """
    Inverse of t_cdf: the value below which a fraction q of the t(d) distribution lies.
    """
    _check_dof(d)
    values = np.asarray(q, dtype=np.float64)
    if np.any((values <= 0.0) | (values >= 1.0)):
        raise UsageError('Quantile levels must lie strictly between 0 and 1, got %r' % (q,))
    return _unwrap(q, special.stdtrit(d, values))
