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

Design
======

Each game k contributes one row to X. With n teams, the columns are:

    0 .. n-1     team ratings; +1 for the listed home team, -1 for the away team.
    n            (ConstantHCA) 1 if the game is not at a neutral site.
    n .. 2n-1    (IndividualHCA) column n+i is 1 if the game is on team i's home court.

so that X theta(t) models the home-minus-away differential d(t) at every second.
"""
import enum
import typing
import dataclasses

import numpy as np
from scipy import sparse

from ..log import get_logger
from ..ingest import GameRecord
from ..errors import EmptyScheduleError, UnknownTeamError, ModelKindError

logger = get_logger('design')


# ----------------------------------------------------------------------------------------------------------------------
class ModelKind(enum.IntEnum):
    BASIC = 1
    CONSTANT_HCA = 2
    INDIVIDUAL_HCA = 3

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def from_value(cls, value):
        # type: (typing.Union[int, str, ModelKind]) -> ModelKind
        """
        Accept 1/2/3, a member, or a name such as "constant_hca".
        """
        if isinstance(value, cls):
            return value

        if isinstance(value, str):
            key = value.strip().upper().replace('-', '_')
            if key.isdigit():
                value = int(key)
            elif key in cls.__members__:
                return cls[key]

        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise ModelKindError('Unknown model kind %r, expected one of 1, 2, 3' % (value,))

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def has_alpha(self):
        return self is not ModelKind.BASIC


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ModelSpec(object):
    kind: ModelKind
    teams: typing.Tuple[str, ...]

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        object.__setattr__(self, 'kind', ModelKind.from_value(self.kind))
        object.__setattr__(self, 'teams', tuple(self.teams))
        if not self.teams:
            raise EmptyScheduleError('A model needs at least one team')
        if len(set(self.teams)) != len(self.teams):
            raise UnknownTeamError('Team identifiers must be unique')
        object.__setattr__(self, '_index', {team: index for index, team in enumerate(self.teams)})

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def n_teams(self):
        # type: () -> int
        return len(self.teams)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def n_params(self):
        # type: () -> int
        if self.kind is ModelKind.BASIC:
            return self.n_teams
        if self.kind is ModelKind.CONSTANT_HCA:
            return self.n_teams + 1
        return 2 * self.n_teams

    # ------------------------------------------------------------------------------------------------------------------
    def index_of(self, team):
        # type: (str) -> int
        try:
            return self._index[team]
        except KeyError:
            raise UnknownTeamError('Unknown team %s' % team, team=team)

    # ------------------------------------------------------------------------------------------------------------------
    def parameter_labels(self):
        # type: () -> typing.List[str]
        labels = ['beta:%s' % team for team in self.teams]
        if self.kind is ModelKind.CONSTANT_HCA:
            labels.append('alpha')
        elif self.kind is ModelKind.INDIVIDUAL_HCA:
            labels.extend('alpha:%s' % team for team in self.teams)
        return labels


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class DesignMatrix(object):
    """
    Coordinate-list design matrix. Immutable once built; the solver converts to whatever layout it needs.
    """

    spec: ModelSpec
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray
    row_game: typing.Tuple[str, ...]

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        for name, dtype in (('rows', np.int64), ('cols', np.int64), ('vals', np.float64)):
            array = np.array(getattr(self, name), dtype=dtype)
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        object.__setattr__(self, 'row_game', tuple(self.row_game))

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def m(self):
        # type: () -> int
        return len(self.row_game)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def shape(self):
        # type: () -> typing.Tuple[int, int]
        return self.m, self.spec.n_params

    # ------------------------------------------------------------------------------------------------------------------
    def to_sparse(self):
        # type: () -> sparse.csr_matrix
        return sparse.coo_matrix((self.vals, (self.rows, self.cols)), shape=self.shape).tocsr()

    # ------------------------------------------------------------------------------------------------------------------
    def to_dense(self):
        # type: () -> np.ndarray
        return self.to_sparse().toarray()

    # ------------------------------------------------------------------------------------------------------------------
    def column_counts(self):
        # type: () -> np.ndarray
        """
        Number of nonzero entries per column. A zero count marks a parameter no game informs.
        """
        return np.bincount(self.cols, minlength=self.spec.n_params)

    # ------------------------------------------------------------------------------------------------------------------
    def team_pairs(self):
        # type: () -> typing.Tuple[np.ndarray, np.ndarray]
        """
        Column index of the +1 (listed home) and -1 (listed away) team in every row.
        """
        n = self.spec.n_teams
        team_entries = self.cols < n

        home = np.empty(self.m, dtype=np.int64)
        away = np.empty(self.m, dtype=np.int64)

        plus = team_entries & (self.vals > 0)
        minus = team_entries & (self.vals < 0)
        home[self.rows[plus]] = self.cols[plus]
        away[self.rows[minus]] = self.cols[minus]

        return home, away

    # ------------------------------------------------------------------------------------------------------------------
    def home_court_rows(self):
        # type: () -> np.ndarray
        """
        Boolean mask of rows played on a home court, read from the advantage columns.
        Always all False for Basic models.
        """
        mask = np.zeros(self.m, dtype=bool)
        mask[self.rows[self.cols >= self.spec.n_teams]] = True
        return mask


# ----------------------------------------------------------------------------------------------------------------------
def collect_teams(games):
    # type: (typing.Iterable[GameRecord]) -> typing.Tuple[str, ...]
    teams = set()
    for game in games:
        teams.add(game.home_team)
        teams.add(game.away_team)
    return tuple(sorted(teams))


# ----------------------------------------------------------------------------------------------------------------------
def build_design(games, kind, teams=None):
    # type: (typing.Sequence[GameRecord], typing.Union[ModelKind, int, str], typing.Sequence[str]) -> DesignMatrix
    """
    Assemble X for the given games. Rows follow the input game order.

    :param games: the games, one row each.
    :type games: list

    :param kind: which model to build.
    :type kind: ModelKind

    :param teams: explicit team list; defaults to every team in the games, sorted. Teams that never play produce zero
                  columns.
    :type teams: list

    :return: the design matrix.
    :rtype: DesignMatrix
    """
    games = list(games)
    if not games:
        raise EmptyScheduleError('Cannot build a design matrix from zero games')

    spec = ModelSpec(ModelKind.from_value(kind), tuple(teams) if teams is not None else collect_teams(games))
    n = spec.n_teams

    rows, cols, vals = list(), list(), list()

    for k, game in enumerate(games):
        i = spec.index_of(game.home_team)
        j = spec.index_of(game.away_team)

        rows.extend((k, k))
        cols.extend((i, j))
        vals.extend((1.0, -1.0))

        if game.neutral_site:
            continue

        if spec.kind is ModelKind.CONSTANT_HCA:
            rows.append(k)
            cols.append(n)
            vals.append(1.0)

        elif spec.kind is ModelKind.INDIVIDUAL_HCA:
            rows.append(k)
            cols.append(n + i)
            vals.append(1.0)

    design = DesignMatrix(spec, rows, cols, vals, tuple(game.game_id for game in games))
    logger.debug('Built %s design matrix: %s x %s, %s nonzeros' % (spec.kind.name, design.m, n, len(vals)))
    return design
