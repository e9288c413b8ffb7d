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
from scoreline.core import ratings
from scoreline.core.curves import CurveSeries
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestSmoothing(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_knot_vector(self):
        knots = ratings.knot_vector(240, order=4, knot_spacing_s=60)

        np.testing.assert_array_equal(knots, [0, 0, 0, 0, 60, 120, 180, 240, 240, 240, 240])

    # ------------------------------------------------------------------------------------------------------------------
    def test_reproduces_polynomials(self):
        t = np.arange(2401, dtype=np.float64)

        for values in (np.full(2401, 3.5), 1e-3 * t - 2.0, 1e-9 * (t - 1200.0) ** 3 + 1e-6 * t ** 2):
            smoothed = scoreline.smooth(CurveSeries('beta', values))
            self.assertCurvesClose(smoothed.values, values)

        assert smoothed.name == 'beta_smooth'

    # ------------------------------------------------------------------------------------------------------------------
    def test_reduces_noise(self):
        rng = np.random.default_rng(3)
        t = np.arange(2401, dtype=np.float64)
        truth = 5.0 * np.sin(t / 400.0)
        noisy = truth + rng.standard_normal(t.size)

        smoothed = scoreline.smooth(CurveSeries('beta', noisy))

        assert np.abs(smoothed.values - truth).mean() < 0.5 * np.abs(noisy - truth).mean()

    # ------------------------------------------------------------------------------------------------------------------
    def test_lower_order(self):
        values = np.abs(np.arange(121, dtype=np.float64) - 60.0)

        smoothed = scoreline.smooth(CurveSeries('kink', values), order=2, knot_spacing_s=60)

        self.assertCurvesClose(smoothed.values, values)

    # ------------------------------------------------------------------------------------------------------------------
    def test_invalid_basis(self):
        curve = CurveSeries('beta', np.zeros(5))

        for order, spacing in ((0, 60), (4, 0), (8, 60)):
            try:
                scoreline.smooth(curve, order=order, knot_spacing_s=spacing)
                self.fail((order, spacing))
            except scoreline.errors.SmoothingBasisError:
                pass

        with self.assertRaises(scoreline.errors.SmoothingBasisError):
            scoreline.smooth(CurveSeries('beta', np.zeros(1)))

    # ------------------------------------------------------------------------------------------------------------------
    def test_keeps_the_mean(self):
        rng = np.random.default_rng(5)
        t = np.arange(2401, dtype=np.float64)
        noisy = 5.0 + 0.002 * t + rng.standard_normal(t.size)

        smoothed = scoreline.smooth(CurveSeries('beta', noisy))

        assert abs(smoothed.values.mean() - noisy.mean()) <= 0.02 * abs(noisy.mean())
