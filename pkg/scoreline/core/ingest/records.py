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

Records
=======

The three value types everything else is built from:

ScoringEvent: a score change, stamped with elapsed seconds from tip-off.
GameRecord: one game's metadata plus its ordered scoring events.
DifferentialTrack: home-minus-away points at every second of regulation.

"""
import typing
import datetime
import dataclasses

import numpy as np

from ..errors import InvalidGameRecordError


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ScoringEvent(object):
    time_s: int
    home_score: int
    away_score: int

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        for field in ('time_s', 'home_score', 'away_score'):
            value = getattr(self, field)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidGameRecordError('%s must be an integer, got %r' % (field, value), field=field)
            if value < 0:
                raise InvalidGameRecordError('%s must be non-negative, got %s' % (field, value), field=field)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def differential(self):
        # type: () -> int
        return int(self.home_score) - int(self.away_score)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def score(self):
        # type: () -> typing.Tuple[int, int]
        return int(self.home_score), int(self.away_score)

    # ------------------------------------------------------------------------------------------------------------------
    def to_list(self):
        # type: () -> list
        return [int(self.time_s), int(self.home_score), int(self.away_score)]


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class GameRecord(object):
    """
    A single game. Events are kept in the order they were reported; ties in time_s are legal and their order is
    meaningful, as the last event at a timestamp defines the score from that second on.

    Score monotonicity is not enforced here, as ingest may admit offending games when forced. Use
    `first_decrease` to locate a violation.
    """

    game_id: str
    date: datetime.date
    home_team: str
    away_team: str
    neutral_site: bool
    reported_final: typing.Tuple[int, int]
    regulation_length_s: int
    events: typing.Tuple[ScoringEvent, ...] = ()

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        if not self.game_id or not isinstance(self.game_id, str):
            raise InvalidGameRecordError('game_id must be a non-empty string', field='game_id')

        if not isinstance(self.date, datetime.date):
            raise InvalidGameRecordError('date must be a calendar date', field='date')

        for field in ('home_team', 'away_team'):
            value = getattr(self, field)
            if not value or not isinstance(value, str):
                raise InvalidGameRecordError('%s must be a non-empty string' % field, field=field)

        if self.home_team == self.away_team:
            raise InvalidGameRecordError(
                'Game %s lists %s as both home and away team' % (self.game_id, self.home_team),
                field='away_team',
            )

        if isinstance(self.regulation_length_s, bool) or not isinstance(self.regulation_length_s, (int, np.integer)) \
                or self.regulation_length_s <= 0:
            raise InvalidGameRecordError('regulation_length_s must be a positive integer', field='regulation_length_s')

        final = tuple(self.reported_final)
        if len(final) != 2 or any(isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 0 for v in final):
            raise InvalidGameRecordError('reported_final must be two non-negative integers', field='reported_final')

        # -- normalize containers so equality and hashing behave
        object.__setattr__(self, 'reported_final', (int(final[0]), int(final[1])))
        object.__setattr__(self, 'neutral_site', bool(self.neutral_site))
        object.__setattr__(self, 'events', tuple(self.events))

        previous = -1
        for event in self.events:
            if not isinstance(event, ScoringEvent):
                raise InvalidGameRecordError('events must be ScoringEvent instances', field='events')
            if event.time_s < previous:
                raise InvalidGameRecordError(
                    'Events of game %s are not sorted by time (%s after %s)' % (self.game_id, event.time_s, previous),
                    field='events',
                )
            previous = event.time_s

        # -- every game starts level at tip-off
        early = [e for e in self.events if e.time_s == 0 and e.differential != 0]
        if early:
            raise InvalidGameRecordError(
                'Game %s does not start level: differential %s at 0 s' % (self.game_id, early[-1].differential),
                field='events',
            )

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def last_event(self):
        # type: () -> typing.Optional[ScoringEvent]
        return self.events[-1] if self.events else None

    # ------------------------------------------------------------------------------------------------------------------
    def first_decrease(self):
        # type: () -> typing.Optional[int]
        """
        Return the index of the first event whose home or away score is lower than the event before it, or None.
        """
        home, away = 0, 0
        for index, event in enumerate(self.events):
            if event.home_score < home or event.away_score < away:
                return index
            home, away = event.home_score, event.away_score
        return None

    # ------------------------------------------------------------------------------------------------------------------
    def score_at(self, time_s):
        # type: (int) -> typing.Tuple[int, int]
        """
        Score of the last event at or before time_s, in list order; 0-0 before the first event.
        """
        result = (0, 0)
        for event in self.events:
            if event.time_s > time_s:
                break
            result = event.score
        return result

    # ------------------------------------------------------------------------------------------------------------------
    def replace(self, **changes):
        # type: (dict) -> GameRecord
        return dataclasses.replace(self, **changes)

    # ------------------------------------------------------------------------------------------------------------------
    def swapped(self):
        # type: () -> GameRecord
        """
        The same game with the home/away labels exchanged. Only meaningful for neutral-site games.
        """
        return self.replace(
            home_team=self.away_team,
            away_team=self.home_team,
            reported_final=(self.reported_final[1], self.reported_final[0]),
            events=tuple(ScoringEvent(e.time_s, e.away_score, e.home_score) for e in self.events),
        )


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True, eq=False)
class DifferentialTrack(object):
    """
    d[t] = home score - away score at every second t = 0..T.

    `points` optionally carries home + away points on the same grid; it is only needed to pin ratings to the
    average score curve.
    """

    game_id: str
    d: np.ndarray
    points: typing.Optional[np.ndarray] = None

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        d = np.asarray(self.d, dtype=np.int64)
        if d.ndim != 1 or len(d) < 2:
            raise InvalidGameRecordError('A differential track needs at least two samples', field='d')
        d.setflags(write=False)
        object.__setattr__(self, 'd', d)

        if self.points is not None:
            points = np.asarray(self.points, dtype=np.int64)
            if points.shape != d.shape:
                raise InvalidGameRecordError('points must share the differential grid', field='points')
            points.setflags(write=False)
            object.__setattr__(self, 'points', points)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def regulation_length_s(self):
        # type: () -> int
        return len(self.d) - 1

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self):
        return len(self.d)

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, DifferentialTrack):
            return NotImplemented
        return self.game_id == other.game_id and np.array_equal(self.d, other.d)

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self):
        return hash((self.game_id, self.d.tobytes()))
