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
import numpy as np

import scoreline
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestResample(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_simultaneous_events_hold_the_last_score(self):
        track = scoreline.resample(self.table1_game())

        assert len(track.d) == 2401
        assert (track.d[:30] == 0).all()
        assert (track.d[30:40] == -2).all()
        assert (track.d[40:253] == 5).all()
        assert track.d[253] == 3
        assert (track.d[253:] == 3).all()

    # ------------------------------------------------------------------------------------------------------------------
    def test_six_point_swing(self):
        track = scoreline.resample(self.table2_game())

        assert track.d[2158] == 0
        assert (track.d[2159:2175] == 3).all()
        assert track.d[2175] == -3
        assert track.d[-1] == -3

    # ------------------------------------------------------------------------------------------------------------------
    def test_points_track_total_score(self):
        track = scoreline.resample(self.table1_game())

        assert track.points[39] == 2
        assert track.points[40] == 19
        assert track.points[-1] == 21

    # ------------------------------------------------------------------------------------------------------------------
    def test_game_without_events_is_level(self):
        game = self.make_game('empty', 'A', 'B', [])
        track = scoreline.resample(game)

        assert not np.any(track.d)
        assert len(track.d) == self.regulation_s + 1

    # ------------------------------------------------------------------------------------------------------------------
    def test_nonzero_start_rejected(self):
        try:
            self.make_game('early', 'A', 'B', [(0, 2, 0), (10, 4, 0)])
            self.fail()
        except scoreline.errors.InvalidGameRecordError:
            pass

        # -- a level score at tip-off is fine
        track = scoreline.resample(self.make_game('level', 'A', 'B', [(0, 0, 0), (10, 4, 0)]))
        assert track.d[0] == 0 and track.d[10] == 4

    # ------------------------------------------------------------------------------------------------------------------
    def test_swing_limit(self):
        scoreline.resample(self.table2_game(), max_swing=6)

        with self.assertRaises(scoreline.errors.SwingLimitError):
            scoreline.resample(self.table2_game(), max_swing=5)

    # ------------------------------------------------------------------------------------------------------------------
    def test_events_after_regulation_ignored(self):
        game = self.make_game('ot', 'A', 'B', [(10, 2, 0), (self.regulation_s + 5, 2, 3)])
        track = scoreline.resample(game)

        assert track.d[-1] == 2

    # ------------------------------------------------------------------------------------------------------------------
    def test_swapping_sides_negates_the_track(self):
        game = self.table2_game()

        track = scoreline.resample(game)
        swapped = scoreline.resample(game.swapped())

        np.testing.assert_array_equal(swapped.d, -track.d)

    # ------------------------------------------------------------------------------------------------------------------
    def test_restated_scores_change_nothing(self):
        events = [(10, 2, 0), (30, 2, 2), (60, 5, 2)]
        restated = [(10, 2, 0), (20, 2, 0), (30, 2, 2), (45, 2, 2), (60, 5, 2), (90, 5, 2)]

        track = scoreline.resample(self.make_game('g', 'A', 'B', events))
        other = scoreline.resample(self.make_game('g', 'A', 'B', restated))

        np.testing.assert_array_equal(other.d, track.d)
