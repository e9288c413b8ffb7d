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
import time
import pstats
import cProfile
import unittest

import numpy as np

import scoreline
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
@unittest.skipUnless(os.environ.get('SCORELINE_STRESS') == '1', 'set SCORELINE_STRESS=1 to run the benchmark')
class StressTest(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_full_season(self):
        cfg = scoreline.SynthConfig(
            n_teams=353, games_per_team=32, regulation_s=2400, kind=2, noise='random_walk', sigma=0.5, seed=2019,
        )

        start = time.perf_counter()
        games, truth = scoreline.generate_season(cfg)
        print('Generated %s games in %.2f seconds' % (len(games), time.perf_counter() - start))

        profile = cProfile.Profile()
        profile.enable()

        start = time.perf_counter()
        X, D, fit = self.fit_games(games, 2)
        elapsed = time.perf_counter() - start

        profile.disable()
        pstats.Stats(profile).sort_stats('cumtime').print_stats(15)

        print('Fitted %s games, %s teams in %.2f seconds' % (X.m, X.spec.n_teams, elapsed))
        print('factorization %.3fs, solve %.3fs' % (fit.diagnostics['factorization_s'], fit.diagnostics['solve_s']))

        assert scoreline.check_connectivity(X).is_connected
        assert fit.diagnostics['n_factorizations'] == 1
        assert elapsed < 60.0

        r = scoreline.residuals(X, fit, D)
        np.testing.assert_allclose((r ** 2).sum(axis=0), fit.sse, rtol=1e-9, atol=1e-6)

        # -- a random walk drifts, so only the mean advantage at the end is checked
        assert abs(fit.alpha[-1] - truth.alpha[-1]) < 1.5
