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
import json

from ..base import BaseGameCodec
from ..constants import register_codec_type
from ....errors import GameParseError


# ----------------------------------------------------------------------------------------------------------------------
class JSONLGameCodec(BaseGameCodec):
    """
    One JSON object per line:

        {"game_id": ..., "date": "YYYY-MM-DD", "home": ..., "away": ..., "neutral": false,
         "final_home": 73, "final_away": 68, "regulation_s": 2400, "events": [[time_s, home, away], ...]}

    Blank lines are ignored.
    """

    STREAM_NAMES = ('games.jsonl',)

    # ------------------------------------------------------------------------------------------------------------------
    def _decode_games(self, streams, source):
        text = self.text(streams[self.STREAM_NAMES[0]], source)

        for line_number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue

            try:
                row = json.loads(line)
            except ValueError as e:
                raise GameParseError('Malformed JSON: %s' % e, source=source, line=line_number)

            if not isinstance(row, dict):
                raise GameParseError('Expected a JSON object per line', source=source, line=line_number)

            events = row.get('events', list())
            if not isinstance(events, list):
                raise GameParseError('events must be a list', source=source, line=line_number, field='events')

            yield line_number, self.build_game(row, events, source, line_number)

    # ------------------------------------------------------------------------------------------------------------------
    def _encode_games(self, games):
        lines = list()
        for game in games:
            row = dict(
                game_id=game.game_id,
                date=game.date.isoformat(),
                home=game.home_team,
                away=game.away_team,
                neutral=game.neutral_site,
                final_home=game.reported_final[0],
                final_away=game.reported_final[1],
                regulation_s=game.regulation_length_s,
                events=[event.to_list() for event in game.events],
            )
            lines.append(json.dumps(row, sort_keys=True, separators=(',', ':')))

        data = ''.join(line + '\n' for line in lines)
        return {self.STREAM_NAMES[0]: data.encode(self.encoding)}


register_codec_type('jsonl', JSONLGameCodec)
