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

Strength of schedule
====================

In a ConstantHCA fit, the normal equation of team i's column reads

    m_i beta_i - sum of opponent ratings + (h_i - a_i) alpha = sum over i's games of x_ki d_k

so every rating splits into the team-oriented average differential and the strength of its schedule:

    beta_i = dbar_i + sos_i
    dbar_i = (1 / m_i) sum x_ki d_k
    sos_i  = (1 / m_i) sum of opponent ratings - (h_i / m_i) alpha + (a_i / m_i) alpha

with h_i and a_i counting non-neutral home and away games.
"""
import typing
import dataclasses

import numpy as np

from ..log import get_logger
from ..solver import RatingSet
from ..curves import CurveSeries
from .scalar import scalar_ratings
from ..design import DesignMatrix, ModelKind
from .weights import WeightKind, WeightSpec
from ..errors import DimensionMismatchError, ModelKindError, NoGamesPlayedError

logger = get_logger('ratings.schedule')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ScheduleSummary(object):
    team: str
    games_played: int
    opponents: typing.Tuple[str, ...]
    home_count: int
    away_count: int
    neutral_count: int


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class Decomposition(object):
    team: str
    avg_diff: CurveSeries
    sos: CurveSeries


# ----------------------------------------------------------------------------------------------------------------------
def _team_rows(X, team):
    # type: (DesignMatrix, str) -> typing.Tuple[np.ndarray, np.ndarray, np.ndarray]
    """
    Rows of the team's games, the x_ki sign of each, and the opponent column of each.
    """
    i = X.spec.index_of(team)
    home, away = X.team_pairs()

    rows = np.flatnonzero((home == i) | (away == i))
    signs = np.where(home[rows] == i, 1.0, -1.0)
    opponents = np.where(home[rows] == i, away[rows], home[rows])

    return rows, signs, opponents


# ----------------------------------------------------------------------------------------------------------------------
def schedule_summary(X, team):
    # type: (DesignMatrix, str) -> ScheduleSummary
    """
    Count a team's games by venue. Venues are read from the home advantage columns, so Basic designs, which carry
    none, are rejected.
    """
    if X.spec.kind is ModelKind.BASIC:
        raise ModelKindError('A Basic design does not record venues; build a home advantage design instead')

    rows, signs, opponents = _team_rows(X, team)
    hosted = X.home_court_rows()[rows]

    return ScheduleSummary(
        team=team,
        games_played=len(rows),
        opponents=tuple(sorted(X.spec.teams[j] for j in opponents)),
        home_count=int(np.count_nonzero(hosted & (signs > 0))),
        away_count=int(np.count_nonzero(hosted & (signs < 0))),
        neutral_count=int(np.count_nonzero(~hosted)),
    )


# ----------------------------------------------------------------------------------------------------------------------
def decompose(fit, X, D, team):
    # type: (RatingSet, DesignMatrix, np.ndarray, str) -> Decomposition
    """
    Split a ConstantHCA rating into average differential and strength of schedule.

    :param fit: a ConstantHCA fit.
    :type fit: RatingSet

    :param X: the design matrix of the fit.
    :type X: DesignMatrix

    :param D: the stacked differential tracks of the fit.
    :type D: np.ndarray

    :param team: the team to decompose.
    :type team: str

    :return: the two curves, summing to the team's rating.
    :rtype: Decomposition
    """
    if fit.kind is not ModelKind.CONSTANT_HCA:
        raise ModelKindError('The schedule decomposition is defined for ConstantHCA fits, got %s' % fit.kind.name)

    if X.spec != fit.spec:
        raise DimensionMismatchError('The design matrix does not belong to this fit')

    D = np.asarray(D, dtype=np.float64)
    if D.shape != (X.m, fit.grid_len):
        raise DimensionMismatchError('Response has shape %s, expected %s' % (D.shape, (X.m, fit.grid_len)))

    summary = schedule_summary(X, team)
    if summary.games_played == 0:
        raise NoGamesPlayedError('%s played no games' % team, team=team)

    rows, signs, opponents = _team_rows(X, team)
    m_i = float(summary.games_played)

    avg_diff = signs @ D[rows] / m_i
    sos = fit.beta[opponents].sum(axis=0) / m_i - (summary.home_count - summary.away_count) / m_i * fit.alpha

    return Decomposition(
        team=team,
        avg_diff=CurveSeries('avg_diff_%s' % team, avg_diff, 'points'),
        sos=CurveSeries('sos_%s' % team, sos, 'points'),
    )


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ScheduleRow(object):
    team: str
    scalar_sos: float
    rank: int

    # ------------------------------------------------------------------------------------------------------------------
    def to_list(self):
        # type: () -> list
        return [self.team, float(self.scalar_sos), self.rank]


# ----------------------------------------------------------------------------------------------------------------------
def sos_table(fit, X, D, w=None):
    # type: (RatingSet, DesignMatrix, np.ndarray, typing.Optional[WeightSpec]) -> typing.List[ScheduleRow]
    """
    Scalar strength of schedule for every team that played, hardest schedule first.
    """
    w = w or WeightSpec(WeightKind.UNIFORM)

    teams, curves = list(), list()
    for team in fit.teams:
        try:
            curves.append(decompose(fit, X, D, team).sos.values)
        except NoGamesPlayedError:
            logger.warning('Skipping %s, which played no games' % team)
            continue
        teams.append(team)

    if not teams:
        return list()

    values = scalar_ratings(np.vstack(curves), w)
    order = sorted(range(len(teams)), key=lambda k: (-values[k], teams[k]))

    return [ScheduleRow(teams[k], float(values[k]), position + 1) for position, k in enumerate(order)]
