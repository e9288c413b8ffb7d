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
import math
import typing
import dataclasses

import numpy as np
import pandas as pd

from .utils import dump_json
from .errors import GridMismatchError


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class CurveSeries(object):
    """
    A named function of game time, one value per second of the fit grid.
    """

    name: str
    values: np.ndarray
    units: str = ''

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise GridMismatchError('Curve %s must be one-dimensional, got shape %s' % (self.name, values.shape))
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self):
        return len(self.values)

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self):
        return '[CurveSeries] %s (%s samples, %s)' % (self.name, len(self), self.units or 'no units')

    # ------------------------------------------------------------------------------------------------------------------
    def renamed(self, name, units=None):
        # type: (str, typing.Optional[str]) -> CurveSeries
        return CurveSeries(name, self.values, self.units if units is None else units)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        return dict(name=self.name, units=self.units, values=[_json_value(v) for v in self.values])


# ----------------------------------------------------------------------------------------------------------------------
def _json_value(value):
    value = float(value)
    return value if math.isfinite(value) else None


# ----------------------------------------------------------------------------------------------------------------------
def curves_to_csv(curves, extra_columns=None):
    # type: (typing.Sequence[CurveSeries], typing.Optional[typing.Dict[str, typing.Sequence[str]]]) -> bytes
    """
    Encode curves sharing a grid as CSV: a `second` column followed by one column per curve, then any extra text
    columns.
    """
    curves = list(curves)
    extra_columns = extra_columns or dict()

    lengths = set(len(c) for c in curves) | set(len(v) for v in extra_columns.values())
    if len(lengths) != 1:
        raise GridMismatchError('Curves do not share a grid: lengths %s' % sorted(lengths))
    length = lengths.pop()

    names = ['second'] + [c.name for c in curves] + list(extra_columns)
    columns = [np.arange(length)] + [c.values for c in curves] + [list(v) for v in extra_columns.values()]

    frame = pd.DataFrame(dict(enumerate(columns)))
    frame.columns = names

    # -- floats are written with their shortest round-trip repr
    return frame.to_csv(index=False, lineterminator='\n', na_rep='nan').encode('utf-8')


# ----------------------------------------------------------------------------------------------------------------------
def export_curves_csv(path, curves, extra_columns=None):
    # type: (str, typing.Sequence[CurveSeries], dict) -> str
    with open(path, 'wb') as handle:
        handle.write(curves_to_csv(curves, extra_columns=extra_columns))
    return path


# ----------------------------------------------------------------------------------------------------------------------
def export_curve_json(path, curve):
    # type: (str, CurveSeries) -> str
    """
    Write one curve as JSON. Values that are not finite (an F statistic of an exact fit) are written as null.
    """
    with open(path, 'wb') as handle:
        handle.write(dump_json(curve.to_dict()))
    return path
