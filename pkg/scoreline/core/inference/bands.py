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
import typing

import numpy as np

from ..log import get_logger
from ..curves import CurveSeries
from .distributions import t_quantile
from ..design import DesignMatrix, ModelKind
from ..solver import Factorization, RatingSet
from ..constants import DEFAULT_CONFIDENCE_LEVEL
from ..errors import DegreesOfFreedomError, DimensionMismatchError, IdentifiabilityError, ModelKindError, UsageError

logger = get_logger('inference.bands')

BandPair = typing.Tuple[CurveSeries, CurveSeries]


# ----------------------------------------------------------------------------------------------------------------------
def _alpha_variance(fit, X, team):
    # type: (RatingSet, typing.Optional[DesignMatrix], typing.Optional[str]) -> float
    if X is None:
        return fit.alpha_variance_of(team)

    if X.spec != fit.spec:
        raise DimensionMismatchError('The design matrix does not belong to this fit')

    diagonal = np.zeros(X.spec.n_params)
    factorization = Factorization(X)
    diagonal[factorization.active] = factorization.inverse_gram_diagonal()

    n = X.spec.n_teams
    if fit.kind is ModelKind.CONSTANT_HCA:
        return float(diagonal[n])
    return float(diagonal[n + X.spec.index_of(team)])


# ----------------------------------------------------------------------------------------------------------------------
def alpha_confidence_band(fit, X=None, level=DEFAULT_CONFIDENCE_LEVEL, team=None):
    # type: (RatingSet, typing.Optional[DesignMatrix], float, typing.Optional[str]) -> BandPair
    """
    Pointwise t band around the home advantage estimate:

        alpha(t) +/- q * sqrt(SSE(t) / df_den * v)

    with q the (1 + level) / 2 quantile of t(df_den) and v the home advantage entry of the inverse Gram matrix. v
    does not depend on t and is taken from the fit, or recomputed from X when given.

    :param fit: a ConstantHCA or IndividualHCA fit.
    :type fit: RatingSet

    :param X: optional design matrix of the fit.
    :type X: DesignMatrix

    :param level: coverage of the band at each second.
    :type level: float

    :param team: the host team, for IndividualHCA fits.
    :type team: str

    :return: lower and upper curves.
    :rtype: tuple
    """
    if fit.kind is ModelKind.BASIC:
        raise ModelKindError('A Basic fit has no home advantage to bound')

    if not 0.0 < level < 1.0:
        raise UsageError('Confidence level must lie strictly between 0 and 1, got %r' % (level,))

    if fit.dof_resid < 1:
        raise DegreesOfFreedomError('The fit leaves %s residual degrees of freedom' % fit.dof_resid)

    estimate = fit.alpha_curve(team)

    label = 'alpha' if fit.kind is ModelKind.CONSTANT_HCA else 'alpha:%s' % team
    if label in fit.unidentified:
        raise IdentifiabilityError(
            '%s is not identified by the schedule and has no confidence band' % label, unidentified=(label,),
        )

    variance = _alpha_variance(fit, X, team)

    sigma2 = np.clip(fit.sse, 0.0, None) / fit.dof_resid
    half_width = t_quantile((1.0 + level) / 2.0, fit.dof_resid) * np.sqrt(sigma2 * variance)

    suffix = '_%s' % team if team is not None and fit.kind is ModelKind.INDIVIDUAL_HCA else ''
    percent = '%g' % (level * 100)

    logger.debug('Band at level %s uses variance factor %.6g on %s dof' % (level, variance, fit.dof_resid))

    return (
        CurveSeries('alpha%s_lower_%s' % (suffix, percent), estimate - half_width, 'points'),
        CurveSeries('alpha%s_upper_%s' % (suffix, percent), estimate + half_width, 'points'),
    )
