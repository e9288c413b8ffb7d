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

import numpy as np
from scipy import io

import scoreline
from scoreline.core import design
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestDesignMatrix(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def games(self):
        return [
            self.make_game('g1', 'A', 'B', [(10, 2, 0)]),
            self.make_game('g2', 'C', 'A', [(10, 2, 0)], neutral=True),
            self.make_game('g3', 'B', 'C', [(10, 0, 2)]),
        ]

    # ------------------------------------------------------------------------------------------------------------------
    def test_basic(self):
        X = scoreline.build_design(self.games(), 1)

        expected = np.array([
            [1, -1, 0],
            [-1, 0, 1],
            [0, 1, -1],
        ], dtype=np.float64)

        assert X.shape == (3, 3)
        np.testing.assert_array_equal(X.to_dense(), expected)
        assert X.spec.parameter_labels() == ['beta:A', 'beta:B', 'beta:C']

    # ------------------------------------------------------------------------------------------------------------------
    def test_constant_home_advantage_skips_neutral_games(self):
        X = scoreline.build_design(self.games(), 2)

        np.testing.assert_array_equal(X.to_dense()[:, 3], [1, 0, 1])
        np.testing.assert_array_equal(X.home_court_rows(), [True, False, True])
        assert X.spec.parameter_labels()[-1] == 'alpha'

    # ------------------------------------------------------------------------------------------------------------------
    def test_individual_home_advantage_uses_host_column(self):
        X = scoreline.build_design(self.games(), 'individual_hca')
        dense = X.to_dense()

        assert X.shape == (3, 6)
        np.testing.assert_array_equal(dense[0, 3:], [1, 0, 0])
        np.testing.assert_array_equal(dense[1, 3:], [0, 0, 0])
        np.testing.assert_array_equal(dense[2, 3:], [0, 1, 0])

        # -- C never hosts, so its advantage column is empty
        assert X.column_counts()[5] == 0

    # ------------------------------------------------------------------------------------------------------------------
    def test_team_pairs(self):
        X = scoreline.build_design(self.games(), 2)
        home, away = X.team_pairs()

        np.testing.assert_array_equal(home, [0, 2, 1])
        np.testing.assert_array_equal(away, [1, 0, 2])

    # ------------------------------------------------------------------------------------------------------------------
    def test_explicit_team_list(self):
        X = scoreline.build_design(self.games(), 1, teams=['D', 'C', 'B', 'A'])

        assert X.spec.teams == ('D', 'C', 'B', 'A')
        assert X.column_counts()[0] == 0

        with self.assertRaises(scoreline.errors.UnknownTeamError):
            scoreline.build_design(self.games(), 1, teams=['A', 'B'])

    # ------------------------------------------------------------------------------------------------------------------
    def test_model_kind_values(self):
        assert scoreline.ModelKind.from_value('2') is scoreline.ModelKind.CONSTANT_HCA
        assert scoreline.ModelKind.from_value('basic') is scoreline.ModelKind.BASIC
        assert not scoreline.ModelKind.BASIC.has_alpha

        with self.assertRaises(scoreline.errors.ModelKindError):
            scoreline.ModelKind.from_value(4)

    # ------------------------------------------------------------------------------------------------------------------
    def test_empty_schedule(self):
        with self.assertRaises(scoreline.errors.EmptyScheduleError):
            scoreline.build_design([], 1)

    # ------------------------------------------------------------------------------------------------------------------
    def test_design_is_read_only(self):
        X = scoreline.build_design(self.games(), 1)

        with self.assertRaises(ValueError):
            X.vals[0] = 3.0

    # ------------------------------------------------------------------------------------------------------------------
    def test_matrix_market_dump(self):
        X = scoreline.build_design(self.games(), 2)
        path = design.write_matrix_market(X, os.path.join(self.make_temp_dir(), 'design.mtx'))

        np.testing.assert_array_equal(io.mmread(path).toarray(), X.to_dense())
