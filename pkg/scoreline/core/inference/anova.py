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
import dataclasses

import numpy as np

from ..log import get_logger
from ..solver import RatingSet
from .distributions import f_sf
from ..curves import CurveSeries
from ..constants import DEFAULT_THRESHOLD, ZERO_SSE_TOLERANCE
from ..errors import DegreesOfFreedomError, GridMismatchError, NonNestedModelsError

logger = get_logger('inference.anova')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class AnovaResult(object):
    """
    Per-second F test of a reduced model against a full model.

    `degenerate` marks seconds where the full model fits exactly. There F is +inf and P is 0, unless the reduced model
    fits exactly too, in which case F is 0 and P is 1.
    """

    f_curve: CurveSeries
    p_curve: CurveSeries
    df_num: int
    df_den: int
    degenerate: np.ndarray
    reduced: str = ''
    full: str = ''

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def grid_len(self):
        # type: () -> int
        return len(self.p_curve)


# ----------------------------------------------------------------------------------------------------------------------
def _check_nested(fit_reduced, fit_full):
    # type: (RatingSet, RatingSet) -> None
    if fit_reduced.grid_len != fit_full.grid_len:
        raise GridMismatchError(
            'Fits are on different grids: %s and %s seconds' % (fit_reduced.grid_len, fit_full.grid_len)
        )

    if fit_reduced.teams != fit_full.teams or fit_reduced.m != fit_full.m:
        raise NonNestedModelsError('Fits were made on different teams or game counts')

    if fit_reduced.games_digest and fit_full.games_digest and fit_reduced.games_digest != fit_full.games_digest:
        raise NonNestedModelsError('Fits were made on different games')

    if int(fit_reduced.kind) > int(fit_full.kind):
        raise NonNestedModelsError(
            '%s is not nested in %s' % (fit_reduced.kind.name, fit_full.kind.name)
        )

    if fit_reduced.rank > fit_full.rank:
        raise NonNestedModelsError(
            'Reduced fit has rank %s, more than the full fit (%s)' % (fit_reduced.rank, fit_full.rank)
        )


# ----------------------------------------------------------------------------------------------------------------------
def anova_nested(fit_reduced, fit_full):
    # type: (RatingSet, RatingSet) -> AnovaResult
    """
    F(t) = [(SSE_r(t) - SSE_f(t)) / df_num] / [SSE_f(t) / df_den], tested at every second without any multiplicity
    correction.

    :param fit_reduced: fit of the smaller model.
    :type fit_reduced: RatingSet

    :param fit_full: fit of the larger model, on the same games.
    :type fit_full: RatingSet

    :return: the F and P curves.
    :rtype: AnovaResult
    """
    _check_nested(fit_reduced, fit_full)

    df_num = int(fit_full.rank - fit_reduced.rank)
    df_den = int(fit_full.m - fit_full.rank)

    if df_den < 1:
        raise DegreesOfFreedomError('The full model leaves %s residual degrees of freedom' % df_den)

    sse_r = np.asarray(fit_reduced.sse, dtype=np.float64)
    sse_f = np.asarray(fit_full.sse, dtype=np.float64)

    # -- tolerance follows the squared magnitude of each second
    scale = sse_r + (np.asarray(fit_full.theta, dtype=np.float64) ** 2).sum(axis=0)
    tolerance = ZERO_SSE_TOLERANCE * scale
    exact_full = sse_f <= tolerance
    exact_both = exact_full & (sse_r <= tolerance)

    if df_num == 0:
        logger.warning('Both models have rank %s; the test has no numerator degrees of freedom' % fit_full.rank)
        f_values = np.zeros_like(sse_f)
        p_values = np.ones_like(sse_f)

    else:
        numerator = np.clip(sse_r - sse_f, 0.0, None) / df_num
        denominator = np.where(exact_full, 1.0, sse_f) / df_den

        f_values = np.where(exact_full, np.inf, numerator / denominator)
        f_values = np.where(exact_both, 0.0, f_values)

        p_values = np.clip(f_sf(f_values, df_num, df_den), 0.0, 1.0)

    degenerate = exact_full.copy()
    degenerate.setflags(write=False)

    if degenerate.any():
        logger.debug('%s seconds fit exactly under the full model' % int(degenerate.sum()))

    label = '%s_vs_%s' % (fit_reduced.kind.name.lower(), fit_full.kind.name.lower())
    return AnovaResult(
        f_curve=CurveSeries('f_%s' % label, f_values, 'F statistic'),
        p_curve=CurveSeries('p_%s' % label, p_values, 'probability'),
        df_num=df_num,
        df_den=df_den,
        degenerate=degenerate,
        reduced=fit_reduced.kind.name,
        full=fit_full.kind.name,
    )


# ----------------------------------------------------------------------------------------------------------------------
def anova_summary(result, threshold=DEFAULT_THRESHOLD, burn_in_s=0):
    # type: (AnovaResult, float, int) -> dict
    """
    Summarize a P curve against a threshold, ignoring the first burn_in_s seconds.

    A crossing is a second whose P value is on the other side of the threshold than the second before it.
    """
    p = result.p_curve.values
    start = min(max(int(burn_in_s), 0), len(p) - 1)
    window = p[start:]

    below = window < threshold
    changes = np.flatnonzero(below[1:] != below[:-1]) + 1 + start

    argmin = int(np.argmin(window)) + start

    return dict(
        reduced=result.reduced,
        full=result.full,
        df_num=result.df_num,
        df_den=result.df_den,
        threshold=float(threshold),
        burn_in_s=start,
        frac_below_threshold=float(below.mean()),
        min_p=float(p[argmin]),
        argmin_p=argmin,
        first_crossing_s=int(changes[0]) if changes.size else None,
        last_crossing_s=int(changes[-1]) if changes.size else None,
        degenerate_seconds=int(result.degenerate.sum()),
    )
