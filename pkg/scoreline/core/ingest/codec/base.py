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
import datetime

from ...log import get_logger
from ...constants import ENCODING
from ..records import GameRecord, ScoringEvent
from ..repair import RepairReport, MONOTONICITY_FORCED, MONOTONICITY_REJECTED
from ...errors import GameParseError, DuplicateGameError, InvalidGameRecordError, MonotonicityError


# ----------------------------------------------------------------------------------------------------------------------
class BaseGameCodec(object):
    """
    Base class for game file formats. A codec turns a set of named byte streams into GameRecords and back.

    Subclasses implement `_decode_games`, yielding (line, GameRecord) pairs in file order, and `_encode_games`. The
    shared checks (duplicate ids, decreasing scores) live here so every format enforces them the same way.
    """

    # -- names of the streams this codec reads and writes, the first one being the primary stream
    STREAM_NAMES: typing.Tuple[str, ...] = ()

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, encoding=ENCODING):
        self.encoding = encoding
        self.logger = get_logger('ingest.codec.%s' % self.__class__.__name__)

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self):
        return '[%s] %s' % (self.__class__.__name__, ', '.join(self.STREAM_NAMES))

    # ------------------------------------------------------------------------------------------------------------------
    def text(self, data, source):
        # type: (bytes, str) -> str
        try:
            return data.decode(self.encoding)
        except UnicodeDecodeError as e:
            raise GameParseError('Stream is not valid %s: %s' % (self.encoding, e), source=source)

    # ------------------------------------------------------------------------------------------------------------------
    def decode(self, streams, source='<stream>', force=False, report=None):
        # type: (typing.Dict[str, bytes], str, bool, typing.Optional[RepairReport]) -> typing.List[GameRecord]
        """
        Decode games from the given streams.

        :param streams: byte streams keyed by stream name, see STREAM_NAMES.
        :type streams: dict

        :param source: name of the origin of the data, used in error messages.
        :type source: str

        :param force: if True, games with decreasing scores are kept instead of excluded.
        :type force: bool

        :param report: optional repair report that receives rejected and forced games.
        :type report: RepairReport

        :return: the games, in file order.
        :rtype: list
        """
        for name in self.STREAM_NAMES:
            if name not in streams:
                raise GameParseError('Missing stream %s' % name, source=source)

        result = list()
        seen = dict()

        for line, game in self._decode_games(streams, source):
            if game.game_id in seen:
                raise DuplicateGameError(
                    'Duplicate game_id %s (%s line %s, first seen on line %s)' % (
                        game.game_id, source, line, seen[game.game_id],
                    ),
                    game_id=game.game_id,
                    source=source,
                    line=line,
                )
            seen[game.game_id] = line

            index = game.first_decrease()
            if index is not None:
                event = game.events[index]
                detail = 'scores decrease at event %s (%s s: %s-%s)' % (
                    index, event.time_s, event.home_score, event.away_score,
                )

                if not force:
                    self.logger.warning('Excluding game %s: %s' % (game.game_id, detail))
                    if report is None:
                        raise MonotonicityError(
                            'Game %s (%s line %s): %s' % (game.game_id, source, line, detail),
                            game_id=game.game_id,
                            source=source,
                            line=line,
                        )
                    report.add(game.game_id, MONOTONICITY_REJECTED, detail)
                    continue

                self.logger.warning('Keeping game %s despite decreasing scores: %s' % (game.game_id, detail))
                if report is not None:
                    report.add(game.game_id, MONOTONICITY_FORCED, detail)

            result.append(game)

        return result

    # ------------------------------------------------------------------------------------------------------------------
    def encode(self, games):
        # type: (typing.Iterable[GameRecord]) -> typing.Dict[str, bytes]
        return self._encode_games(list(games))

    # ------------------------------------------------------------------------------------------------------------------
    def build_game(self, fields, events, source, line):
        # type: (dict, list, str, int) -> GameRecord
        """
        Build a GameRecord from raw field values, translating every failure into a GameParseError that names the
        source, line and field.
        """
        try:
            parsed_events = list()
            for index, raw in enumerate(events):
                if not isinstance(raw, (list, tuple)) or len(raw) != 3:
                    raise GameParseError(
                        'Event %s must be [time_s, home_score, away_score], got %r' % (index, raw),
                        source=source,
                        line=line,
                        field='events',
                    )
                parsed_events.append(ScoringEvent(
                    self.as_int(raw[0], 'events', source, line),
                    self.as_int(raw[1], 'events', source, line),
                    self.as_int(raw[2], 'events', source, line),
                ))

            # -- stable sort keeps the reported order of events sharing a timestamp
            ordered = sorted(parsed_events, key=lambda e: e.time_s)
            if ordered != parsed_events:
                self.logger.debug('Sorted events of game %s by time' % fields.get('game_id'))

            return GameRecord(
                game_id=self.as_str(fields.get('game_id'), 'game_id', source, line),
                date=self.as_date(fields.get('date'), 'date', source, line),
                home_team=self.as_str(fields.get('home'), 'home', source, line),
                away_team=self.as_str(fields.get('away'), 'away', source, line),
                neutral_site=self.as_bool(fields.get('neutral'), 'neutral', source, line),
                reported_final=(
                    self.as_int(fields.get('final_home'), 'final_home', source, line),
                    self.as_int(fields.get('final_away'), 'final_away', source, line),
                ),
                regulation_length_s=self.as_int(fields.get('regulation_s'), 'regulation_s', source, line),
                events=tuple(ordered),
            )

        except InvalidGameRecordError as e:
            raise GameParseError(e.message, source=source, line=line, field=e.field)

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def as_str(cls, value, field, source, line):
        if value is None or (isinstance(value, str) and not value.strip()):
            raise GameParseError('Missing value', source=source, line=line, field=field)
        if not isinstance(value, str):
            raise GameParseError('Expected a string, got %r' % (value,), source=source, line=line, field=field)
        return value.strip()

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def as_int(cls, value, field, source, line):
        if value is None:
            raise GameParseError('Missing value', source=source, line=line, field=field)

        if isinstance(value, bool):
            raise GameParseError('Expected an integer, got %r' % (value,), source=source, line=line, field=field)

        if isinstance(value, int):
            return value

        if isinstance(value, float) and value.is_integer():
            return int(value)

        if isinstance(value, str):
            try:
                return int(value.strip())
            except ValueError:
                pass

        raise GameParseError('Expected an integer, got %r' % (value,), source=source, line=line, field=field)

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def as_bool(cls, value, field, source, line):
        if isinstance(value, bool):
            return value

        if isinstance(value, str) and value.strip().lower() in ('true', '1', 'yes'):
            return True

        if isinstance(value, str) and value.strip().lower() in ('false', '0', 'no'):
            return False

        if isinstance(value, int) and value in (0, 1):
            return bool(value)

        raise GameParseError('Expected a boolean, got %r' % (value,), source=source, line=line, field=field)

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def as_date(cls, value, field, source, line):
        if not isinstance(value, str):
            raise GameParseError('Expected an ISO-8601 date, got %r' % (value,), source=source, line=line, field=field)
        try:
            return datetime.date.fromisoformat(value.strip()[:10])
        except ValueError:
            raise GameParseError('Expected an ISO-8601 date, got %r' % (value,), source=source, line=line, field=field)

    # ------------------------------------------------------------------------------------------------------------------
    def _decode_games(self, streams, source):
        # type: (typing.Dict[str, bytes], str) -> typing.Iterator[typing.Tuple[int, GameRecord]]
        raise NotImplementedError

    # ------------------------------------------------------------------------------------------------------------------
    def _encode_games(self, games):
        # type: (typing.List[GameRecord]) -> typing.Dict[str, bytes]
        raise NotImplementedError
