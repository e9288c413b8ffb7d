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
import dataclasses

import numpy as np
import pandas as pd

from ..errors import WeightSpecError


# ----------------------------------------------------------------------------------------------------------------------
class WeightKind(enum.Enum):
    UNIFORM = 'uniform'
    LINEAR_INCREASING = 'linear'
    END_OF_GAME = 'end'
    CUSTOM = 'custom'


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class WeightSpec(object):
    """
    Weight function w(t) for scalar ratings.

    UNIFORM is w = 1, LINEAR_INCREASING is w = t, END_OF_GAME puts all weight on the last second. CUSTOM interpolates
    a table of (second, weight) pairs piecewise linearly and holds the end values outside the table.
    """

    kind: WeightKind = WeightKind.UNIFORM
    table: typing.Tuple[typing.Tuple[float, float], ...] = ()
    require_non_decreasing: bool = True

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        object.__setattr__(self, 'kind', WeightKind(self.kind))
        object.__setattr__(self, 'table', tuple((float(s), float(w)) for s, w in self.table))

        if self.kind is not WeightKind.CUSTOM:
            if self.table:
                raise WeightSpecError('Only custom weights take a table')
            return

        if not self.table:
            raise WeightSpecError('A custom weight needs at least one (second, weight) entry')

        seconds = np.array([s for s, _ in self.table])
        weights = np.array([w for _, w in self.table])

        if np.any(~np.isfinite(seconds)) or np.any(~np.isfinite(weights)):
            raise WeightSpecError('Custom weights must be finite')
        if np.any(seconds < 0) or np.any(np.diff(seconds) <= 0):
            raise WeightSpecError('Custom weight seconds must be non-negative and strictly increasing')
        if np.any(weights < 0):
            raise WeightSpecError('Weights must be non-negative')
        if self.require_non_decreasing and np.any(np.diff(weights) < 0):
            raise WeightSpecError('Custom weights must be non-decreasing in time')
        if not np.any(weights > 0):
            raise WeightSpecError('Custom weights are identically zero')

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def is_point_mass(self):
        # type: () -> bool
        return self.kind is WeightKind.END_OF_GAME

    # ------------------------------------------------------------------------------------------------------------------
    def describe(self):
        # type: () -> str
        return self.kind.value

    # ------------------------------------------------------------------------------------------------------------------
    def evaluate(self, grid_len):
        # type: (int) -> np.ndarray
        """
        w(t) at every second 0..grid_len-1. END_OF_GAME has no density, use `is_point_mass` instead.
        """
        grid = np.arange(grid_len, dtype=np.float64)

        if self.kind is WeightKind.UNIFORM:
            return np.ones(grid_len)

        if self.kind is WeightKind.LINEAR_INCREASING:
            return grid

        if self.kind is WeightKind.CUSTOM:
            seconds = np.array([s for s, _ in self.table])
            weights = np.array([w for _, w in self.table])
            return np.interp(grid, seconds, weights)

        raise WeightSpecError('End-of-game weight is a point mass at the last second')


# ----------------------------------------------------------------------------------------------------------------------
def load_weight_table(path):
    # type: (str) -> WeightSpec
    """
    Read a custom weight from a CSV file with `second,weight` columns.
    """
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise WeightSpecError('Could not read weight table %s: %s' % (path, e))

    try:
        frame = frame[['second', 'weight']].apply(pd.to_numeric)
    except (KeyError, TypeError, ValueError):
        raise WeightSpecError('Weight table %s needs numeric second and weight columns' % path)

    table = tuple(zip(frame['second'].astype(float).tolist(), frame['weight'].astype(float).tolist()))

    return WeightSpec(WeightKind.CUSTOM, table)


# ----------------------------------------------------------------------------------------------------------------------
def parse_weight(text):
    # type: (str) -> WeightSpec
    """
    uniform | linear | end | file:<path>
    """
    text = (text or WeightKind.UNIFORM.value).strip()

    if text.startswith('file:'):
        return load_weight_table(text[len('file:'):])

    try:
        return WeightSpec(WeightKind(text.lower()))
    except ValueError:
        raise WeightSpecError('Unknown weight %r, expected uniform, linear, end or file:<path>' % text)
