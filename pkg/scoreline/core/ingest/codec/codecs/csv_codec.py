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
import io
import re
import typing

import numpy as np
import pandas as pd

from ..base import BaseGameCodec
from ..constants import register_codec_type
from ....errors import GameParseError


GAME_COLUMNS = ('game_id', 'date', 'home', 'away', 'neutral', 'final_home', 'final_away', 'regulation_s')
EVENT_COLUMNS = ('game_id', 'time_s', 'home_score', 'away_score')
SCORE_COLUMNS = list(EVENT_COLUMNS[1:])


# ----------------------------------------------------------------------------------------------------------------------
class CSVGameCodec(BaseGameCodec):
    """
    Game metadata in games.csv, scoring events in events.csv keyed by game_id. Events of a game keep the order in
    which they appear in events.csv.
    """

    STREAM_NAMES = ('games.csv', 'events.csv')

    # ------------------------------------------------------------------------------------------------------------------
    def read_frame(self, data, columns, source):
        # type: (bytes, typing.Sequence[str], str) -> pd.DataFrame
        """
        Read a stream as text columns. The frame index plus 2 is the line number in the file, the header being line 1.
        """
        try:
            frame = pd.read_csv(
                io.StringIO(self.text(data, source)),
                dtype=str,
                na_filter=False,
                skip_blank_lines=False,
            )
        except pd.errors.EmptyDataError:
            raise GameParseError('Stream is empty', source=source, line=1)
        except pd.errors.ParserError as e:
            match = re.search(r'line (\d+)', str(e))
            raise GameParseError('Malformed CSV: %s' % e, source=source, line=int(match.group(1)) if match else None)

        missing = [c for c in columns if c not in frame.columns]
        if missing:
            raise GameParseError('Missing columns: %s' % ', '.join(missing), source=source, line=1)

        frame = frame[list(columns)]
        blank = frame.isna() | (frame == '')
        frame = frame[~blank.all(axis=1)].copy()

        short = frame.isna().any(axis=1)
        if short.any():
            raise GameParseError('Wrong number of fields', source=source, line=int(short.idxmax()) + 2)

        for column in columns:
            frame[column] = frame[column].str.strip()
        return frame

    # ------------------------------------------------------------------------------------------------------------------
    def _decode_events(self, data, known, source):
        # type: (bytes, set, str) -> typing.Dict[str, list]
        frame = self.read_frame(data, EVENT_COLUMNS, source)

        unknown = ~frame['game_id'].isin(known)
        if unknown.any():
            index = int(unknown.idxmax())
            raise GameParseError(
                'Event for unknown game %s' % frame.at[index, 'game_id'],
                source=source,
                line=index + 2,
                field='game_id',
            )

        scores = frame[SCORE_COLUMNS].apply(pd.to_numeric, errors='coerce')
        invalid = scores.isna() | (scores % 1 != 0)
        if invalid.values.any():
            index = int(invalid.any(axis=1).idxmax())
            field = invalid.loc[index].idxmax()
            raise GameParseError(
                'Expected an integer, got %r' % frame.at[index, field], source=source, line=index + 2, field=field,
            )

        scores = scores.astype(np.int64)
        return {
            game_id: group.values.tolist()
            for game_id, group in scores.groupby(frame['game_id'], sort=False)
        }

    # ------------------------------------------------------------------------------------------------------------------
    def _decode_games(self, streams, source):
        games_source = '%s:%s' % (source, self.STREAM_NAMES[0])
        events_source = '%s:%s' % (source, self.STREAM_NAMES[1])

        games = self.read_frame(streams[self.STREAM_NAMES[0]], GAME_COLUMNS, games_source)
        events = self._decode_events(streams[self.STREAM_NAMES[1]], set(games['game_id']), events_source)

        for index, row in games.iterrows():
            line = int(index) + 2
            yield line, self.build_game(row.to_dict(), events.get(row['game_id'], []), games_source, line)

    # ------------------------------------------------------------------------------------------------------------------
    def _encode_games(self, games):
        game_rows = pd.DataFrame(
            [
                [
                    game.game_id,
                    game.date.isoformat(),
                    game.home_team,
                    game.away_team,
                    'true' if game.neutral_site else 'false',
                    game.reported_final[0],
                    game.reported_final[1],
                    game.regulation_length_s,
                ]
                for game in games
            ],
            columns=GAME_COLUMNS,
        )
        event_rows = pd.DataFrame(
            [[game.game_id] + event.to_list() for game in games for event in game.events],
            columns=EVENT_COLUMNS,
        )

        return {
            self.STREAM_NAMES[0]: game_rows.to_csv(index=False, lineterminator='\n').encode(self.encoding),
            self.STREAM_NAMES[1]: event_rows.to_csv(index=False, lineterminator='\n').encode(self.encoding),
        }


register_codec_type('csv', CSVGameCodec)
