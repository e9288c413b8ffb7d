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

Constraints
===========

Every constraint is a shift of all team ratings by a common curve c(t), applied to the sum-zero solution. Shifts lie
in the null space of X, so fitted values, residuals, rating differences and home advantages never change.
"""
import typing

import numpy as np
from scipy import integrate

from ..log import get_logger
from ..design import ModelSpec
from ..utils import is_key_legal
from ..errors import ConfigError, DimensionMismatchError

logger = get_logger('solver.constraints')

constraint_registry = {}


# ----------------------------------------------------------------------------------------------------------------------
class Constraint(object):
    key = None

    # ------------------------------------------------------------------------------------------------------------------
    def shift(self, spec, beta):
        # type: (ModelSpec, np.ndarray) -> np.ndarray
        """
        Return the curve c(t) to add to every team rating of a sum-zero solution.

        :param spec: the model the ratings belong to.
        :type spec: ModelSpec

        :param beta: sum-zero team ratings, n x (T+1).
        :type beta: np.ndarray

        :return: shift curve of length T+1.
        :rtype: np.ndarray
        """
        raise NotImplementedError

    # ------------------------------------------------------------------------------------------------------------------
    def describe(self):
        # type: () -> str
        return self.key

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        return dict(key=self.key)

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self):
        return '[%s] %s' % (self.__class__.__name__, self.describe())

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self):
        return hash(self.describe())


# ----------------------------------------------------------------------------------------------------------------------
class SumZero(Constraint):
    """
    The average team rating is the zero function.
    """

    key = 'sum_zero'

    # ------------------------------------------------------------------------------------------------------------------
    def shift(self, spec, beta):
        return np.zeros(beta.shape[1])


# ----------------------------------------------------------------------------------------------------------------------
class PinTeam(Constraint):
    """
    One team's rating is held at a constant value at every second.
    """

    key = 'pin_team'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, team, value=0.0):
        self.team = team
        self.value = float(value)

    # ------------------------------------------------------------------------------------------------------------------
    def shift(self, spec, beta):
        return self.value - beta[spec.index_of(self.team)]

    # ------------------------------------------------------------------------------------------------------------------
    def describe(self):
        return '%s:%s=%s' % (self.key, self.team, self.value)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        return dict(key=self.key, team=self.team, value=self.value)


# ----------------------------------------------------------------------------------------------------------------------
class PinAverageScore(Constraint):
    """
    The average team rating equals the average points a team has scored by each second, so ratings read as expected
    points rather than margins.
    """

    key = 'pin_average_score'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, mean_score):
        self.mean_score = np.asarray(mean_score, dtype=np.float64)

    # ------------------------------------------------------------------------------------------------------------------
    def shift(self, spec, beta):
        if self.mean_score.shape != (beta.shape[1],):
            raise DimensionMismatchError(
                'Average score curve has %s samples, the fit grid has %s' % (self.mean_score.size, beta.shape[1])
            )
        return self.mean_score - beta.mean(axis=0)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        return dict(key=self.key, final_mean_score=float(self.mean_score[-1]) if self.mean_score.size else None)

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other):
        return type(self) is type(other) and np.array_equal(self.mean_score, other.mean_score)

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self):
        return hash((self.key, self.mean_score.tobytes()))


# ----------------------------------------------------------------------------------------------------------------------
class PinWorst(Constraint):
    """
    The team with the lowest time-averaged rating is the zero function, which makes every other team's average
    rating non-negative. Ties go to the first team in identifier order.
    """

    key = 'pin_worst'

    # ------------------------------------------------------------------------------------------------------------------
    def shift(self, spec, beta):
        averages = integrate.trapezoid(beta, axis=1) / max(beta.shape[1] - 1, 1)
        worst = int(np.argmin(averages))
        logger.debug('Pinning %s, the lowest rated team, to zero' % spec.teams[worst])
        return -beta[worst]


# ----------------------------------------------------------------------------------------------------------------------
def register_constraint_type(key, constraint_type, override=False):
    # type: (str, type, bool) -> None
    global constraint_registry

    if not is_key_legal(key):
        raise KeyError('Illegal tokens detected in key %s!' % key)

    if not isinstance(constraint_type, type) or not issubclass(constraint_type, Constraint):
        raise ValueError('Constraints must inherit from Constraint!')

    if key in constraint_registry:
        if not override:
            raise KeyError('Constraint type %s is already registered!' % key)
        logger.warning('Constraint type %s already registered! Overriding entry with %s' % (key, constraint_type))

    logger.debug('Constraint type %s registered under key %s' % (constraint_type.__name__, key))
    constraint_registry[key] = constraint_type


# ----------------------------------------------------------------------------------------------------------------------
def constraint_from_key(key):
    # type: (str) -> type
    if key in constraint_registry:
        return constraint_registry[key]
    raise ConfigError('Unknown constraint %s, expected one of %s' % (key, sorted(constraint_registry)))


# ----------------------------------------------------------------------------------------------------------------------
def parse_constraint(text, mean_score=None):
    # type: (str, typing.Optional[np.ndarray]) -> Constraint
    """
    Read a constraint from its command line form:

        sum_zero | pin_worst | pin_average_score | pin_team:<team>[=<value>]

    :param text: the constraint string.
    :type text: str

    :param mean_score: average score curve, needed for pin_average_score.
    :type mean_score: np.ndarray
    """
    text = (text or SumZero.key).strip()
    key, _, argument = text.partition(':')
    key = key.strip().lower().replace('-', '_')

    constraint_type = constraint_from_key(key)

    if constraint_type is PinTeam:
        team, _, value = argument.partition('=')
        if not team.strip():
            raise ConfigError('pin_team needs a team, as in pin_team:<team>=<value>')
        try:
            return PinTeam(team.strip(), float(value) if value.strip() else 0.0)
        except ValueError:
            raise ConfigError('Invalid pin_team value %r' % value)

    if constraint_type is PinAverageScore:
        if mean_score is None:
            raise ConfigError('pin_average_score needs the average score curve of the games')
        return PinAverageScore(mean_score)

    if argument:
        raise ConfigError('Constraint %s takes no argument' % key)

    return constraint_type()


for _type in (SumZero, PinTeam, PinAverageScore, PinWorst):
    register_constraint_type(_type.key, _type)
