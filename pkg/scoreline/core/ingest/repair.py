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

Repairs
=======

Scoring summaries come with three kinds of defects:

1. summaries that are only a handful of box-score checkpoints. These are admitted as they are; the step
   interpolation holds each checkpoint.
2. summaries whose last entry disagrees with the reported final score, because a scoring play is missing. The
   missing score is appended as the last data point.
3. several scoring plays stamped with the same second. These are kept unmodified and only noted in the report.

Overtime is removed entirely, so overtime games enter every model as regulation ties.
"""
import json
import typing
import collections
import dataclasses

from ..log import get_logger
from .records import GameRecord, ScoringEvent
from ..errors import IrreparableMismatchError

logger = get_logger('ingest.repair')

MISSING_FINAL_PLAY = 'missing_final_play'
OVERTIME_TRUNCATED = 'overtime_truncated'
OVERTIME_NOT_TIED = 'overtime_not_tied'
SIMULTANEOUS_EVENTS = 'simultaneous_events'
MONOTONICITY_REJECTED = 'monotonicity_rejected'
MONOTONICITY_FORCED = 'monotonicity_forced'

# -- repair kinds that only document the data, without changing it
INFORMATIONAL_KINDS = (SIMULTANEOUS_EVENTS,)


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class RepairEntry(object):
    game_id: str
    repair_kind: str
    detail: str

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        return dict(game_id=self.game_id, repair_kind=self.repair_kind, detail=self.detail)


# ----------------------------------------------------------------------------------------------------------------------
class RepairReport(object):
    """
    Machine-readable audit trail of everything ingest changed, dropped or flagged.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, entries=None):
        # type: (typing.Iterable[RepairEntry]) -> None
        self.entries = list(entries or list())

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self):
        return len(self.entries)

    # ------------------------------------------------------------------------------------------------------------------
    def __iter__(self):
        return iter(self.entries)

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self):
        return '[%s] %s' % (self.__class__.__name__, dict(self.counts()))

    # ------------------------------------------------------------------------------------------------------------------
    def add(self, game_id, repair_kind, detail):
        # type: (str, str, str) -> RepairEntry
        entry = RepairEntry(game_id, repair_kind, detail)
        self.entries.append(entry)
        return entry

    # ------------------------------------------------------------------------------------------------------------------
    def extend(self, entries):
        # type: (typing.Iterable[RepairEntry]) -> None
        self.entries.extend(entries)

    # ------------------------------------------------------------------------------------------------------------------
    def counts(self):
        # type: () -> typing.Dict[str, int]
        return collections.OrderedDict(sorted(collections.Counter(e.repair_kind for e in self.entries).items()))

    # ------------------------------------------------------------------------------------------------------------------
    def for_game(self, game_id):
        # type: (str) -> typing.List[RepairEntry]
        return [e for e in self.entries if e.game_id == game_id]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def repairs(self):
        # type: () -> typing.List[RepairEntry]
        """
        Entries that changed or rejected data, as opposed to the purely informational ones.
        """
        return [e for e in self.entries if e.repair_kind not in INFORMATIONAL_KINDS]

    # ------------------------------------------------------------------------------------------------------------------
    def to_jsonl(self):
        # type: () -> bytes
        lines = [json.dumps(e.to_dict(), sort_keys=True) for e in self.entries]
        return ''.join(line + '\n' for line in lines).encode('utf-8')


# ----------------------------------------------------------------------------------------------------------------------
def reconcile_final(game):
    # type: (GameRecord) -> typing.Tuple[GameRecord, typing.List[RepairEntry]]
    """
    Make the last scoring event agree with the reported final score.

    When they differ, a scoring play is missing; an event carrying the reported final is appended at the end of
    regulation, or at the last event time if that is later. Scores cannot decrease, so a last event that already
    exceeds the reported final in either component is irreparable.

    :param game: a parsed game, events sorted by time.
    :type game: GameRecord

    :return: the (possibly) repaired game and the repairs that were made.
    :rtype: tuple
    """
    last = game.last_event
    last_score = last.score if last is not None else (0, 0)

    if last_score == game.reported_final:
        return game, list()

    if last_score[0] > game.reported_final[0] or last_score[1] > game.reported_final[1]:
        raise IrreparableMismatchError(
            'Game %s: last event %s-%s exceeds the reported final %s-%s' % (
                game.game_id, last_score[0], last_score[1], game.reported_final[0], game.reported_final[1],
            ),
            game_id=game.game_id,
        )

    time_s = game.regulation_length_s
    if last is not None and last.time_s > time_s:
        time_s = last.time_s

    event = ScoringEvent(time_s, game.reported_final[0], game.reported_final[1])
    repaired = game.replace(events=game.events + (event,))

    entry = RepairEntry(
        game.game_id,
        MISSING_FINAL_PLAY,
        'last event %s-%s, reported final %s-%s; appended final score at %s s' % (
            last_score[0], last_score[1], game.reported_final[0], game.reported_final[1], time_s,
        ),
    )
    logger.warning('Game %s: %s' % (game.game_id, entry.detail))

    return repaired, [entry]


# ----------------------------------------------------------------------------------------------------------------------
def truncate_overtime(game, report=None):
    # type: (GameRecord, typing.Optional[RepairReport]) -> GameRecord
    """
    Drop every event after regulation. If anything was dropped, the game went to overtime and must therefore have been
    tied at the end of regulation; a warning is emitted when it was not.
    """
    limit = game.regulation_length_s
    kept = tuple(e for e in game.events if e.time_s <= limit)

    if len(kept) == len(game.events):
        return game

    truncated = game.replace(events=kept)
    home, away = truncated.score_at(limit)

    dropped = len(game.events) - len(kept)
    if report is not None:
        report.add(
            game.game_id,
            OVERTIME_TRUNCATED,
            'dropped %s events after %s s; regulation ended %s-%s' % (dropped, limit, home, away),
        )

    if home != away:
        detail = 'events continue past %s s but regulation ended %s-%s, not tied' % (limit, home, away)
        logger.warning('Game %s: %s' % (game.game_id, detail))
        if report is not None:
            report.add(game.game_id, OVERTIME_NOT_TIED, detail)

    return truncated


# ----------------------------------------------------------------------------------------------------------------------
def note_simultaneous_events(game, report):
    # type: (GameRecord, RepairReport) -> int
    """
    Record timestamps that carry more than one scoring event. The data is left as is; the last event wins.
    """
    counts = collections.Counter(e.time_s for e in game.events)
    shared = sorted(t for t, count in counts.items() if count > 1)
    if shared:
        report.add(
            game.game_id,
            SIMULTANEOUS_EVENTS,
            '%s timestamps carry several events: %s' % (len(shared), ', '.join(str(t) for t in shared)),
        )
    return len(shared)
