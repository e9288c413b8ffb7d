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
import enum
import typing

import numpy as np

from ..solver import RatingSet
from ..design import ModelKind
from ..curves import CurveSeries
from ..errors import ModelKindError, UsageError

TIE_LABEL = 'tie'


# ----------------------------------------------------------------------------------------------------------------------
class Venue(enum.Enum):
    NEUTRAL = 'neutral'
    HOME_OF_I = 'home'

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def from_value(cls, value):
        # type: (typing.Union[str, Venue]) -> Venue
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise UsageError('Unknown venue %r, expected neutral or home' % (value,))


# ----------------------------------------------------------------------------------------------------------------------
def predict(fit, team_i, team_j, venue=Venue.NEUTRAL):
    # type: (RatingSet, str, str, typing.Union[str, Venue]) -> CurveSeries
    """
    Expected point differential of team_i over team_j at every second.

    :param fit: the fit to predict from.
    :type fit: RatingSet

    :param team_i: the team the differential is oriented towards.
    :type team_i: str

    :param team_j: the opponent.
    :type team_j: str

    :param venue: NEUTRAL, or HOME_OF_I to add team_i's home advantage.
    :type venue: Venue

    :return: beta_i(t) - beta_j(t) [+ alpha(t)].
    :rtype: CurveSeries
    """
    venue = Venue.from_value(venue)
    values = fit.team_curve(team_i) - fit.team_curve(team_j)

    if venue is Venue.HOME_OF_I:
        if fit.kind is ModelKind.BASIC:
            raise ModelKindError('A Basic fit has no home advantage; predict at a neutral site')
        values = values + fit.alpha_curve(team_i if fit.kind is ModelKind.INDIVIDUAL_HCA else None)

    return CurveSeries('%s_vs_%s_%s' % (team_i, team_j, venue.value), values, 'points')


# ----------------------------------------------------------------------------------------------------------------------
def leaders(prediction, team_i, team_j):
    # type: (CurveSeries, str, str) -> typing.List[str]
    """
    The team expected to be ahead at every second, or "tie".
    """
    values = prediction.values
    return [team_i if v > 0 else team_j if v < 0 else TIE_LABEL for v in np.asarray(values)]
