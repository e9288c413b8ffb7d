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
from scipy import integrate, special

import scoreline
from scoreline.core import inference
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
def f_density(x, d1, d2):
    log_density = (
        0.5 * d1 * np.log(d1 * x) + 0.5 * d2 * np.log(d2) - 0.5 * (d1 + d2) * np.log(d1 * x + d2)
        - np.log(x) - special.betaln(d1 / 2.0, d2 / 2.0)
    )
    return np.exp(log_density)


# ----------------------------------------------------------------------------------------------------------------------
class TestDistributions(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_f_cdf_matches_integrated_density(self):
        for d1, d2 in ((1, 5), (2, 10), (3, 90), (12, 7), (30, 1500)):
            for x in (0.05, 0.5, 1.0, 2.5, 8.0):
                expected, _ = integrate.quad(
                    f_density, 0.0, x, args=(d1, d2), limit=200, epsabs=1e-13, epsrel=1e-12,
                )
                assert abs(scoreline.f_cdf(x, d1, d2) - expected) < 1e-8, (d1, d2, x)

    # ------------------------------------------------------------------------------------------------------------------
    def test_f_cdf_median_of_equal_dof(self):
        for d in (1, 2, 7, 50, 1000):
            assert abs(scoreline.f_cdf(1.0, d, d) - 0.5) < 1e-12

    # ------------------------------------------------------------------------------------------------------------------
    def test_f_and_t(self):
        # -- t^2 on d degrees of freedom is F(1, d)
        for d in (1, 4, 30, 500):
            for x in (0.1, 1.0, 2.0, 5.0):
                assert abs(scoreline.f_cdf(x * x, 1, d) - (2.0 * scoreline.t_cdf(x, d) - 1.0)) < 1e-10

    # ------------------------------------------------------------------------------------------------------------------
    def test_tails_and_limits(self):
        x = np.array([-1.0, 0.0, 0.3, 4.0, np.inf])

        cdf = scoreline.f_cdf(x, 3, 20)
        sf = inference.f_sf(x, 3, 20)

        np.testing.assert_allclose(cdf + sf, 1.0, atol=1e-14)
        assert cdf[0] == 0.0 and cdf[1] == 0.0 and cdf[-1] == 1.0
        assert sf[-1] == 0.0

        # -- far tails stay accurate instead of rounding to zero
        assert 0.0 < inference.f_sf(400.0, 5, 200) < 1e-50

        assert np.isnan(scoreline.f_cdf(np.nan, 2, 2))
        assert isinstance(scoreline.f_cdf(1.0, 2, 2), float)

    # ------------------------------------------------------------------------------------------------------------------
    def test_t_quantile(self):
        for d in (1, 3, 60):
            for q in (0.05, 0.5, 0.9, 0.975):
                assert abs(scoreline.t_cdf(scoreline.t_quantile(q, d), d) - q) < 1e-10

        with self.assertRaises(scoreline.errors.UsageError):
            scoreline.t_quantile(1.0, 5)

    # ------------------------------------------------------------------------------------------------------------------
    def test_invalid_degrees_of_freedom(self):
        for d1, d2 in ((0, 5), (3, -1), (2, float('inf')), (True, 4), ('3', 4)):
            try:
                scoreline.f_cdf(1.0, d1, d2)
                self.fail((d1, d2))
            except scoreline.errors.DegreesOfFreedomError:
                pass

        with self.assertRaises(scoreline.errors.DegreesOfFreedomError):
            scoreline.t_cdf(0.0, 0)
