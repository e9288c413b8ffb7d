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
from scipy import integrate

from ..log import get_logger
from ..solver import RatingSet
from ..curves import CurveSeries
from ..errors import ZeroWeightError
from ..constants import TIE_TOLERANCE
from .weights import WeightKind, WeightSpec

logger = get_logger('ratings.scalar')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class RankingRow(object):
    team: str
    scalar_rating: float
    rank: int
    end_of_game_rank: int
    tied: bool = False

    # ------------------------------------------------------------------------------------------------------------------
    def to_list(self):
        # type: () -> list
        tied = 'true' if self.tied else 'false'
        return [self.team, float(self.scalar_rating), self.rank, self.end_of_game_rank, tied]


# ----------------------------------------------------------------------------------------------------------------------
def scalar_ratings(curves, w):
    # type: (np.ndarray, WeightSpec) -> np.ndarray
    """
    Weighted time average of every row of an n x (T+1) matrix, by trapezoidal quadrature on the per-second grid.
    """
    curves = np.atleast_2d(np.asarray(curves, dtype=np.float64))

    if w.is_point_mass:
        return curves[:, -1].copy()

    weights = w.evaluate(curves.shape[1])
    total = integrate.trapezoid(weights)
    if not total > 0:
        raise ZeroWeightError('Weight %s integrates to zero over the game' % w.describe())

    return integrate.trapezoid(curves * weights, axis=1) / total


# ----------------------------------------------------------------------------------------------------------------------
def scalar_rating(rating, w=None):
    # type: (typing.Union[CurveSeries, np.ndarray], typing.Optional[WeightSpec]) -> float
    """
    Collapse a functional rating into one number:

        integral of w(t) beta(t) dt / integral of w(t) dt

    :param rating: the rating curve.
    :type rating: CurveSeries

    :param w: the weight; uniform by default.
    :type w: WeightSpec

    :return: the scalar rating.
    :rtype: float
    """
    values = rating.values if isinstance(rating, CurveSeries) else np.asarray(rating, dtype=np.float64)
    return float(scalar_ratings(values, w or WeightSpec(WeightKind.UNIFORM))[0])


# ----------------------------------------------------------------------------------------------------------------------
def _ordering(values, teams):
    # type: (np.ndarray, typing.Sequence[str]) -> typing.List[int]
    return sorted(range(len(teams)), key=lambda i: (-values[i], teams[i]))


# ----------------------------------------------------------------------------------------------------------------------
def rank_teams(ratings, w=None):
    # type: (RatingSet, typing.Optional[WeightSpec]) -> typing.List[RankingRow]
    """
    Rank teams by descending scalar rating. Ties are broken by team identifier and flagged. Every row also carries the
    team's rank by its rating at the last second.
    """
    w = w or WeightSpec(WeightKind.UNIFORM)
    teams = ratings.teams

    values = scalar_ratings(ratings.beta, w)
    end_values = ratings.beta[:, -1]

    order = _ordering(values, teams)
    end_rank = {teams[i]: position + 1 for position, i in enumerate(_ordering(end_values, teams))}

    rows = list()
    for position, i in enumerate(order):
        tied = False
        if position > 0 and abs(values[i] - values[order[position - 1]]) <= TIE_TOLERANCE:
            tied = True
        if position + 1 < len(order) and abs(values[i] - values[order[position + 1]]) <= TIE_TOLERANCE:
            tied = True

        rows.append(RankingRow(teams[i], float(values[i]), position + 1, end_rank[teams[i]], tied))

    n_tied = sum(1 for row in rows if row.tied)
    if n_tied:
        logger.info('%s teams share a scalar rating with a neighbour' % n_tied)

    return rows
