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
"""
import numpy as np
from scipy import interpolate

from ..log import get_logger
from ..curves import CurveSeries
from ..errors import SmoothingBasisError
from ..constants import DEFAULT_KNOT_SPACING_S, DEFAULT_SPLINE_ORDER

logger = get_logger('ratings.smoothing')


# ----------------------------------------------------------------------------------------------------------------------
def knot_vector(length_s, order=DEFAULT_SPLINE_ORDER, knot_spacing_s=DEFAULT_KNOT_SPACING_S):
    # type: (int, int, int) -> np.ndarray
    """
    Clamped knot vector on [0, length_s]: each boundary repeated `order` times, interior knots every knot_spacing_s
    seconds.
    """
    interior = np.arange(knot_spacing_s, length_s, knot_spacing_s, dtype=np.float64)
    return np.concatenate([
        np.zeros(order),
        interior,
        np.full(order, float(length_s)),
    ])


# ----------------------------------------------------------------------------------------------------------------------
def smooth(rating, order=DEFAULT_SPLINE_ORDER, knot_spacing_s=DEFAULT_KNOT_SPACING_S):
    # type: (CurveSeries, int, int) -> CurveSeries
    """
    Least-squares projection of a curve onto B-splines of the given order (degree order - 1) with uniform knots,
    evaluated back on the per-second grid.

    :param rating: the raw curve.
    :type rating: CurveSeries

    :param order: spline order; 4 gives cubic splines.
    :type order: int

    :param knot_spacing_s: seconds between interior knots.
    :type knot_spacing_s: int

    :return: the smoothed curve.
    :rtype: CurveSeries
    """
    if int(order) < 1:
        raise SmoothingBasisError('Spline order must be at least 1, got %s' % order)
    if int(knot_spacing_s) < 1:
        raise SmoothingBasisError('Knot spacing must be at least one second, got %s' % knot_spacing_s)

    values = rating.values
    length_s = len(values) - 1
    if length_s < 1:
        raise SmoothingBasisError('A curve needs at least two samples to be smoothed')

    knots = knot_vector(length_s, int(order), int(knot_spacing_s))
    n_basis = len(knots) - int(order)

    if len(values) < n_basis:
        raise SmoothingBasisError(
            '%s samples cannot determine %s order-%s basis functions' % (len(values), n_basis, order)
        )

    grid = np.arange(len(values), dtype=np.float64)

    try:
        spline = interpolate.make_lsq_spline(grid, values, knots, k=int(order) - 1)
    except (ValueError, np.linalg.LinAlgError) as e:
        raise SmoothingBasisError('Could not fit the smoothing spline: %s' % e)

    logger.debug('Smoothed %s with %s basis functions' % (rating.name, n_basis))
    return CurveSeries('%s_smooth' % rating.name, spline(grid), rating.units)
