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
import json

import numpy as np

import scoreline
from scoreline.core import synth
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestSynthConfig(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_infeasible(self):
        for settings in (
            dict(n_teams=1),
            dict(games_per_team=0),
            dict(neutral_fraction=1.5),
            dict(beta_family='wiggly'),
            dict(noise='loud'),
            dict(sigma=-1.0),
            dict(regulation_s=0),
            dict(seed=-3),
            dict(kind=4),
        ):
            try:
                self.synth_config(**settings)
                self.fail(settings)
            except scoreline.errors.InfeasibleSynthConfigError:
                pass

    # ------------------------------------------------------------------------------------------------------------------
    def test_no_identified_schedule(self):
        with self.assertRaises(scoreline.errors.InfeasibleSynthConfigError):
            self.synth_season(n_teams=12, games_per_team=1, max_attempts=5)

    # ------------------------------------------------------------------------------------------------------------------
    def test_dict_and_file(self):
        cfg = self.synth_config(kind=3, noise='iid', sigma=2.0)
        assert scoreline.SynthConfig.from_dict(cfg.to_dict()) == cfg

        path = os.path.join(self.make_temp_dir(), 'synth.json')
        with open(path, 'w') as handle:
            json.dump(dict(n_teams=8, kind='individual_hca'), handle)

        loaded = synth.load_synth_config(path)
        assert loaded.n_teams == 8 and loaded.kind is scoreline.ModelKind.INDIVIDUAL_HCA

        with open(path, 'w') as handle:
            json.dump(dict(n_teams=8, colour='red'), handle)

        with self.assertRaises(scoreline.errors.InfeasibleSynthConfigError):
            synth.load_synth_config(path)


# ----------------------------------------------------------------------------------------------------------------------
class TestGenerateSeason(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_deterministic(self):
        cfg = self.synth_config(kind=2, noise='random_walk', sigma=1.5, seed=42)

        first, truth_a = scoreline.generate_season(cfg, threads=1)
        second, truth_b = scoreline.generate_season(cfg, threads=4)

        assert first == second
        np.testing.assert_array_equal(truth_a.beta, truth_b.beta)
        np.testing.assert_array_equal(truth_a.alpha, truth_b.alpha)

        other, _ = scoreline.generate_season(cfg.replace(seed=43), threads=1)
        assert other != first

    # ------------------------------------------------------------------------------------------------------------------
    def test_truth(self):
        for kind in (1, 2, 3):
            games, truth = self.synth_season(kind=kind, beta_family='spline', regulation_s=1200, games_per_team=8)

            assert truth.teams == synth.team_names(6)
            assert truth.beta.shape == (6, 1201)
            self.assertCurvesClose(truth.beta.sum(axis=0), 0.0)
            assert not truth.beta[:, 0].any()
            np.testing.assert_array_equal(truth.beta, np.rint(truth.beta))

            if kind == 1:
                assert truth.alpha is None
            else:
                assert not np.atleast_2d(truth.alpha)[:, 0].any()

    # ------------------------------------------------------------------------------------------------------------------
    def test_games(self):
        games, _ = self.synth_season(neutral_fraction=1.0)

        assert len(games) == 12
        assert all(game.neutral_site for game in games)
        assert len(set(game.game_id for game in games)) == 12

        # -- every team plays once per round
        for team in synth.team_names(6):
            assert sum(team in (game.home_team, game.away_team) for game in games) == 4

        tracks, report = scoreline.prepare(games)
        assert len(report) == 0

    # ------------------------------------------------------------------------------------------------------------------
    def test_score_path(self):
        d = np.array([0, 0, 2, 2, -1, 0, 0])

        events = synth.score_path(d, 6)

        assert [(e.time_s, e.home_score, e.away_score) for e in events] == [(2, 2, 0), (4, 2, 3), (5, 3, 3)]

    # ------------------------------------------------------------------------------------------------------------------
    def test_write_and_load(self):
        games, truth = self.synth_season(kind=3, games_per_team=8)
        directory = self.make_temp_dir()

        written = scoreline.write_season(directory, games, truth)

        assert sorted(os.path.basename(p) for p in written) == ['games.jsonl', synth.TRUTH_FILE_NAME]
        assert scoreline.load_games(os.path.join(directory, 'games.jsonl')) == games

        loaded = synth.load_truth(directory)
        assert loaded.config == truth.config
        np.testing.assert_array_equal(loaded.alpha, truth.alpha)
