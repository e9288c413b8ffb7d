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
from .records import GameRecord, DifferentialTrack
from ..errors import SwingLimitError

logger = get_logger('ingest.resample')


# ----------------------------------------------------------------------------------------------------------------------
def step_scores(game):
    # type: (GameRecord) -> typing.Tuple[np.ndarray, np.ndarray]
    """
    Home and away score at every second 0..T, holding each event's score until the next one.

    np.searchsorted with side='right' finds, for each second, the number of events at or before it, so the last event
    sharing a timestamp is the one that is picked.
    """
    length = game.regulation_length_s + 1

    if not game.events:
        return np.zeros(length, dtype=np.int64), np.zeros(length, dtype=np.int64)

    times = np.fromiter((e.time_s for e in game.events), dtype=np.int64, count=len(game.events))
    home = np.fromiter((e.home_score for e in game.events), dtype=np.int64, count=len(game.events))
    away = np.fromiter((e.away_score for e in game.events), dtype=np.int64, count=len(game.events))

    index = np.searchsorted(times, np.arange(length), side='right') - 1
    before_first = index < 0
    index[before_first] = 0

    home_steps = np.where(before_first, 0, home[index])
    away_steps = np.where(before_first, 0, away[index])

    return home_steps, away_steps


# ----------------------------------------------------------------------------------------------------------------------
def resample(game, max_swing=None):
    # type: (GameRecord, typing.Optional[int]) -> DifferentialTrack
    """
    Sample a reconciled, truncated game at every second of regulation.

    :param game: the game to sample. Events after regulation are ignored.
    :type game: GameRecord

    :param max_swing: optional bound on the change of the differential between consecutive seconds.
    :type max_swing: int

    :return: the differential track, carrying total points as well.
    :rtype: DifferentialTrack
    """
    home, away = step_scores(game)
    d = home - away

    if max_swing is not None and len(d) > 1:
        swings = np.abs(np.diff(d))
        worst = int(np.argmax(swings))
        if swings[worst] > max_swing:
            raise SwingLimitError(
                'Game %s: differential moves by %s between %s s and %s s, more than the limit of %s' % (
                    game.game_id, swings[worst], worst, worst + 1, max_swing,
                ),
                game_id=game.game_id,
            )

    return DifferentialTrack(game.game_id, d, points=home + away)
