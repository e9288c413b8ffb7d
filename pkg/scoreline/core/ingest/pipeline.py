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
import os
import typing

import numpy as np

from ..log import get_logger
from .resample import resample
from ..utils import ensure_directory
from .codec import codec_from_key, CSVGameCodec, JSONLGameCodec
from .records import GameRecord, DifferentialTrack
from .repair import RepairReport, reconcile_final, truncate_overtime, note_simultaneous_events
from ..errors import EmptyScheduleError, GameParseError, GridMismatchError, MonotonicityError

logger = get_logger('ingest')

PreparedGames = typing.Tuple[typing.List[DifferentialTrack], RepairReport]


# ----------------------------------------------------------------------------------------------------------------------
def parse_game_file(data, format='jsonl', events=None, force=False, report=None, source='<stream>'):
    # type: (typing.Union[bytes, dict], str, bytes, bool, RepairReport, str) -> typing.List[GameRecord]
    """
    Parse games from raw bytes.

    :param data: the primary stream (games.jsonl or games.csv), or a dict of all streams keyed by stream name.
    :type data: bytes or dict

    :param format: codec key, "jsonl" or "csv".
    :type format: str

    :param events: the events.csv stream, for the csv format when data is bytes.
    :type events: bytes

    :param force: keep games whose scores decrease instead of excluding them.
    :type force: bool

    :param report: receives excluded and forced games. Without a report, a decreasing score raises.
    :type report: RepairReport

    :param source: name used in error messages.
    :type source: str

    :return: the parsed games, in file order.
    :rtype: list
    """
    codec = codec_from_key(format)()

    if isinstance(data, dict):
        streams = data

    else:
        streams = {codec.STREAM_NAMES[0]: data}
        if len(codec.STREAM_NAMES) > 1:
            if events is None:
                raise GameParseError('The %s format needs an events stream' % format, source=source)
            streams[codec.STREAM_NAMES[1]] = events

    return codec.decode(streams, source=source, force=force, report=report)


# ----------------------------------------------------------------------------------------------------------------------
def serialize_games(games, format='jsonl'):
    # type: (typing.Iterable[GameRecord], str) -> typing.Dict[str, bytes]
    """
    Inverse of parse_game_file. Returns the encoded streams keyed by file name.
    """
    return codec_from_key(format)().encode(games)


# ----------------------------------------------------------------------------------------------------------------------
def detect_format(path):
    # type: (str) -> typing.Tuple[str, str]
    """
    Find the codec and directory for a game file path. A path may point at a games.jsonl file, at a games.csv file
    with an events.csv beside it, or at a directory holding either.
    """
    if os.path.isdir(path):
        if os.path.isfile(os.path.join(path, JSONLGameCodec.STREAM_NAMES[0])):
            return 'jsonl', path
        if os.path.isfile(os.path.join(path, CSVGameCodec.STREAM_NAMES[0])):
            return 'csv', path
        raise GameParseError('No game files found', source=path)

    if path.lower().endswith('.csv'):
        return 'csv', os.path.dirname(path)

    return 'jsonl', None


# ----------------------------------------------------------------------------------------------------------------------
def load_games(path, format=None, force=False, report=None):
    # type: (str, str, bool, RepairReport) -> typing.List[GameRecord]
    path = os.path.abspath(path)
    detected, directory = detect_format(path)
    format = format or detected

    codec = codec_from_key(format)()
    streams = dict()

    for index, name in enumerate(codec.STREAM_NAMES):
        if directory is None:
            file_path = path
        elif index == 0 and not os.path.isdir(path):
            file_path = path
        else:
            file_path = os.path.join(directory, name)

        try:
            with open(file_path, 'rb') as handle:
                streams[name] = handle.read()
        except OSError as e:
            raise GameParseError('Could not read game file: %s' % e, source=file_path)

    games = codec.decode(streams, source=path, force=force, report=report)
    logger.info('Loaded %s games from %s' % (len(games), path))
    return games


# ----------------------------------------------------------------------------------------------------------------------
def write_games(directory, games, format='jsonl'):
    # type: (str, typing.Iterable[GameRecord], str) -> typing.List[str]
    ensure_directory(directory)

    written = list()
    for name, data in sorted(serialize_games(games, format=format).items()):
        file_path = os.path.join(directory, name)
        with open(file_path, 'wb') as handle:
            handle.write(data)
        written.append(file_path)

    return written


# ----------------------------------------------------------------------------------------------------------------------
def prepare(games, max_swing=None, force=False, report=None):
    # type: (typing.Iterable[GameRecord], int, bool, RepairReport) -> PreparedGames
    """
    Run every game through reconcile_final, truncate_overtime and resample, in input order.

    :param games: parsed games.
    :type games: list

    :param max_swing: optional bound on the per-second change of the differential.
    :type max_swing: int

    :param force: accept games whose scores decrease. Games built in code never went through a codec, so the check is
                  repeated here.
    :type force: bool

    :param report: report to extend; a new one is created if omitted.
    :type report: RepairReport

    :return: one track per game and the repair report.
    :rtype: tuple
    """
    report = report if report is not None else RepairReport()
    tracks = list()

    for game in games:
        if not force and game.first_decrease() is not None:
            raise MonotonicityError(
                'Scores of game %s decrease at event %s' % (game.game_id, game.first_decrease()),
                game_id=game.game_id,
            )

        game, entries = reconcile_final(game)
        report.extend(entries)

        game = truncate_overtime(game, report)
        note_simultaneous_events(game, report)

        tracks.append(resample(game, max_swing=max_swing))

    logger.debug('Prepared %s tracks, %s report entries' % (len(tracks), len(report)))
    return tracks, report


# ----------------------------------------------------------------------------------------------------------------------
def stack_tracks(tracks):
    # type: (typing.Sequence[DifferentialTrack]) -> np.ndarray
    """
    Stack tracks into the m x (T+1) response matrix, one row per game.
    """
    if not tracks:
        raise EmptyScheduleError('No tracks to stack')

    lengths = sorted(set(len(track) for track in tracks))
    if len(lengths) != 1:
        raise GridMismatchError('Tracks have different grid lengths: %s' % lengths)

    return np.vstack([track.d for track in tracks]).astype(np.float64)


# ----------------------------------------------------------------------------------------------------------------------
def average_score_curve(tracks):
    # type: (typing.Sequence[DifferentialTrack]) -> np.ndarray
    """
    Mean points scored per team at every second, over all games: (home + away) / 2 averaged across games.
    """
    if not tracks:
        raise EmptyScheduleError('No tracks to average')

    if any(track.points is None for track in tracks):
        raise GridMismatchError('Every track needs total points to compute the average score curve')

    lengths = set(len(track) for track in tracks)
    if len(lengths) != 1:
        raise GridMismatchError('Tracks have different grid lengths: %s' % sorted(lengths))

    return np.vstack([track.points for track in tracks]).astype(np.float64).mean(axis=0) / 2.0
