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
from scoreline.core import ingest
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestFit(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_matches_dense_pseudo_inverse(self):
        rng = np.random.default_rng(11)

        for seed in range(100):
            kind = seed % 3 + 1
            games, _ = self.synth_season(
                n_teams=int(rng.choice([6, 8, 10])),
                games_per_team=int(rng.integers(6, 9)) if kind == 3 else int(rng.integers(3, 6)),
                kind=kind,
                noise='iid',
                sigma=4.0,
                seed=seed,
            )
            X, D, result = self.fit_games(games, kind)

            theta = np.linalg.pinv(X.to_dense()) @ D
            n = X.spec.n_teams
            theta[:n] -= theta[:n].mean(axis=0)

            self.assertCurvesClose(result.theta, theta)

    # ------------------------------------------------------------------------------------------------------------------
    def test_two_team_closed_form(self):
        games = [
            self.make_game('g1', 'A', 'B', [(10, 4, 0)]),
            self.make_game('g2', 'A', 'B', [(10, 6, 0)]),
        ]
        _, _, result = self.fit_games(games, 1)

        assert result.rank == 1
        assert result.dof_resid == 1
        self.assertCurvesClose(result.team_curve('A')[10:], 2.5)
        self.assertCurvesClose(result.team_curve('B')[10:], -2.5)
        self.assertCurvesClose(result.sse[10:], 2.0)
        self.assertCurvesClose(result.beta[:, :10], 0.0)

    # ------------------------------------------------------------------------------------------------------------------
    def test_zero_noise_recovery(self):
        for seed in range(20):
            for kind in (1, 2, 3):
                games, truth = self.synth_season(kind=kind, seed=seed, beta_family='linear', games_per_team=8)
                _, _, result = self.fit_games(games, kind)

                self.assertCurvesClose(result.beta, truth.beta)
                if truth.alpha is not None:
                    self.assertCurvesClose(result.alpha, truth.alpha)
                self.assertCurvesClose(result.sse, 0.0)

    # ------------------------------------------------------------------------------------------------------------------
    def test_ratings_sum_to_zero(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=6.0)
        _, _, result = self.fit_games(games, 2)

        self.assertCurvesClose(result.beta.sum(axis=0), 0.0, atol=1e-9)

    # ------------------------------------------------------------------------------------------------------------------
    def test_constraints_only_shift_ratings(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=6.0, seed=3)
        tracks, _ = scoreline.prepare(games)

        X, D, base = self.fit_games(games, 2)
        mean_score = ingest.average_score_curve(tracks)

        for constraint in (
            scoreline.PinTeam('T1', 10.0),
            scoreline.PinWorst(),
            scoreline.PinAverageScore(mean_score),
        ):
            other = scoreline.fit(X, D, constraint=constraint)
            shift = other.beta - base.beta

            self.assertCurvesClose(shift, np.broadcast_to(shift[0], shift.shape))
            self.assertCurvesClose(other.alpha, base.alpha)
            self.assertCurvesClose(other.sse, base.sse)
            assert [r.team for r in scoreline.rank_teams(other)] == [r.team for r in scoreline.rank_teams(base)]

        pinned = scoreline.fit(X, D, constraint=scoreline.PinTeam('T1', 10.0))
        self.assertCurvesClose(pinned.team_curve('T1'), 10.0)

        averaged = scoreline.fit(X, D, constraint=scoreline.PinAverageScore(mean_score))
        self.assertCurvesClose(averaged.beta.mean(axis=0), mean_score)

    # ------------------------------------------------------------------------------------------------------------------
    def test_pin_worst(self):
        games, _ = self.synth_season(kind=1, noise='iid', sigma=3.0, seed=5)
        _, _, result = self.fit_games(games, 1, constraint=scoreline.PinWorst())

        averages = np.array([scoreline.scalar_rating(curve) for curve in result.beta])

        assert np.min(np.abs(result.beta).max(axis=1)) == 0.0
        assert (averages >= -1e-12).all()

    # ------------------------------------------------------------------------------------------------------------------
    def test_disconnected_schedule(self):
        games = [
            self.make_game('g1', 'A', 'B', [(10, 4, 0)]),
            self.make_game('g2', 'A', 'B', [(10, 2, 0)]),
            self.make_game('g3', 'C', 'D', [(10, 0, 2)]),
        ]

        try:
            self.fit_games(games, 1)
            self.fail()
        except scoreline.errors.IdentifiabilityError as e:
            assert scoreline.exit_code_from_error(e) == scoreline.ExitCodes.IDENTIFIABILITY_FAILED

        _, _, result = self.fit_games(games, 1, per_component=True)

        assert result.components == (('A', 'B'), ('C', 'D'))
        self.assertCurvesClose(result.beta[:2].sum(axis=0), 0.0)
        self.assertCurvesClose(result.beta[2:].sum(axis=0), 0.0)
        self.assertCurvesClose(result.team_curve('A')[-1], 1.5)

        with self.assertRaises(scoreline.errors.IdentifiabilityError):
            self.fit_games(games, 1, per_component=True, constraint=scoreline.PinTeam('A'))

    # ------------------------------------------------------------------------------------------------------------------
    def test_unidentified_home_advantages(self):
        games = [
            self.make_game('g1', 'A', 'B', [(10, 4, 0)]),
            self.make_game('g2', 'A', 'B', [(10, 2, 0)]),
            self.make_game('g3', 'B', 'A', [(10, 0, 2)]),
        ]

        with self.assertRaises(scoreline.errors.IdentifiabilityError):
            self.fit_games(games, 3)

    # ------------------------------------------------------------------------------------------------------------------
    def test_teams_without_games_are_reported(self):
        games = [
            self.make_game('g1', 'A', 'B', [(10, 4, 0)]),
            self.make_game('g2', 'B', 'A', [(10, 2, 0)], neutral=True),
        ]
        tracks, _ = scoreline.prepare(games)
        X = scoreline.build_design(games, 3)
        result = scoreline.fit(X, scoreline.stack_tracks(tracks))

        assert result.unidentified == ('alpha:B',)
        assert not result.alpha[1].any()

    # ------------------------------------------------------------------------------------------------------------------
    def test_result_does_not_depend_on_threads(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=5.0, n_teams=10)
        tracks, _ = scoreline.prepare(games)
        X = scoreline.build_design(games, 2)
        D = scoreline.stack_tracks(tracks)

        single = scoreline.fit(X, D, threads=1, block_size=16)
        many = scoreline.fit(X, D, threads=4, block_size=16)

        np.testing.assert_array_equal(single.beta, many.beta)
        np.testing.assert_array_equal(single.alpha, many.alpha)

    # ------------------------------------------------------------------------------------------------------------------
    def test_one_factorization_for_all_seconds(self):
        games, _ = self.synth_season(kind=2)
        _, D, result = self.fit_games(games, 2, block_size=32)

        assert result.diagnostics['n_factorizations'] == 1
        assert result.diagnostics['n_solved_columns'] == D.shape[1]

    # ------------------------------------------------------------------------------------------------------------------
    def test_residuals(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=5.0)
        X, D, result = self.fit_games(games, 2)

        r = scoreline.residuals(X, result, D)

        assert r.shape == D.shape
        self.assertCurvesClose((r ** 2).sum(axis=0), result.sse)

        # -- least squares residuals are orthogonal to the columns of X
        self.assertCurvesClose(X.to_dense().T @ r, 0.0, atol=1e-7)

    # ------------------------------------------------------------------------------------------------------------------
    def test_dimension_mismatch(self):
        games, _ = self.synth_season(kind=1)
        X, D, _ = self.fit_games(games, 1)

        with self.assertRaises(scoreline.errors.DimensionMismatchError):
            scoreline.fit(X, D[1:])

    # ------------------------------------------------------------------------------------------------------------------
    def test_each_second_is_a_minimum(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=3.0)
        X, D, result = self.fit_games(games, 2)

        dense = X.to_dense()
        theta = np.asarray(result.theta, dtype=np.float64)
        eps = 1e-3

        for t in (1, D.shape[1] // 2, D.shape[1] - 1):
            base = ((dense @ theta[:, t] - D[:, t]) ** 2).sum()
            assert abs(base - result.sse[t]) < 1e-7 * max(1.0, base)

            for k in range(theta.shape[0]):
                for step in (eps, -eps):
                    moved = theta[:, t].copy()
                    moved[k] += step
                    assert ((dense @ moved - D[:, t]) ** 2).sum() >= base - 1e-9

    # ------------------------------------------------------------------------------------------------------------------
    def test_linear_in_the_score_matrix(self):
        games, _ = self.synth_season(kind=2, noise='iid', sigma=3.0)
        X, D, result = self.fit_games(games, 2)

        doubled = scoreline.fit(X, 2.0 * D)

        self.assertCurvesClose(doubled.beta, 2.0 * np.asarray(result.beta), atol=1e-7)
        self.assertCurvesClose(doubled.alpha, 2.0 * np.asarray(result.alpha), atol=1e-7)
