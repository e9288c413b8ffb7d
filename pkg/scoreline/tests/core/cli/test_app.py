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
import io
import os
import json

import scoreline
from scoreline.core.cli import Application
from scoreline.core.errors import ExitCodes
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class CliTestCase(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def run_cli(self, *argv):
        """
        Run one command on a fresh application. Returns the exit code and the parsed summary, or the error text.
        """
        stdout, stderr = io.StringIO(), io.StringIO()
        code = Application(stdout=stdout, stderr=stderr).run([str(a) for a in argv])

        if code == ExitCodes.OK and stdout.getvalue():
            return code, json.loads(stdout.getvalue())
        return code, stderr.getvalue()

    # ------------------------------------------------------------------------------------------------------------------
    def read_json(self, *parts):
        with open(os.path.join(*parts), 'r', encoding='utf-8') as handle:
            return json.load(handle)

    # ------------------------------------------------------------------------------------------------------------------
    def make_season(self, **kwargs):
        directory = self.make_temp_dir()
        games, truth = self.synth_season(**kwargs)
        scoreline.write_season(directory, games, truth)
        return os.path.join(directory, 'games.jsonl')


# ----------------------------------------------------------------------------------------------------------------------
class TestCommands(CliTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_season_end_to_end(self):
        root = self.make_temp_dir()
        season, fit1, fit2 = (os.path.join(root, name) for name in ('season', 'fit1', 'fit2'))

        code, summary = self.run_cli(
            'synth', '--out', season, '--n-teams', 6, '--games-per-team', 4, '--regulation-s', 120,
            '--model', 2, '--noise', 'iid', '--sigma', 3, '--seed', 3,
        )
        assert code == 0, summary
        assert summary['n_games'] == 12
        games = os.path.join(season, 'games.jsonl')

        code, summary = self.run_cli('validate', games, '--out', os.path.join(root, 'valid'))
        assert code == 0, summary
        assert summary['n_excluded'] == 0

        code, summary = self.run_cli('fit', games, '--out', fit2, '--model', 2)
        assert code == 0, summary
        assert summary['model'] == 'constant_hca'
        assert summary['rank'] == 6
        assert os.path.join(fit2, 'beta.npy') in summary['outputs']
        assert summary['outputs'][-1] == os.path.join(fit2, 'provenance.json')

        code, summary = self.run_cli('fit', games, '--out', fit1, '--model', 1, '--dump-matrix')
        assert code == 0, summary
        assert os.path.isfile(os.path.join(fit1, 'design.mtx'))

        code, summary = self.run_cli('anova', fit1, fit2, '--out', os.path.join(root, 'anova'), '--level', 0.9)
        assert code == 0, summary
        assert summary['df_num'] == 1
        for name in ('anova.csv', 'anova_summary.json', 'alpha_band.csv'):
            assert os.path.isfile(os.path.join(root, 'anova', name)), name

        # -- a shared home advantage has no team to name
        code, summary = self.run_cli('anova', fit1, fit2, '--out', os.path.join(root, 'anova_t'), '--team', 'T1')
        assert code == 0, summary
        with open(os.path.join(root, 'anova_t', 'alpha_band.csv'), 'r') as handle:
            assert handle.readline().strip() == 'second,alpha,alpha_lower_80,alpha_upper_80'

        code, summary = self.run_cli('rank', fit2, '--out', os.path.join(root, 'rank'), '--weight', 'linear')
        assert code == 0, summary
        assert summary['weight'] == 'linear' and summary['n_teams'] == 6

        code, summary = self.run_cli('rank', fit2, '--out', os.path.join(root, 'rank_uniform'))
        assert code == 0, summary
        with open(os.path.join(root, 'rank_uniform', 'rankings.csv'), 'r') as handle:
            assert handle.readline().strip().startswith('team,')

        code, summary = self.run_cli('sos', fit2, games, '--out', os.path.join(root, 'sos'), '--team', 'T0')
        assert code == 0, summary
        assert os.path.isfile(os.path.join(root, 'sos', 'decomposition_T0.csv'))

        code, summary = self.run_cli('predict', fit2, 'T0', 'T1', '--out', os.path.join(root, 'p'), '--venue', 'home')
        assert code == 0, summary
        assert summary['final_leader'] in ('T0', 'T1', 'tie')

        code, summary = self.run_cli('smooth', fit2, '--out', os.path.join(root, 'smooth'), '--team', 'T0',
                                     '--knot-spacing', 30)
        assert code == 0, summary
        assert summary['curves'] == ['beta_T0_smooth']

        prediction = os.path.join(root, 'p', 'prediction.csv')
        code, summary = self.run_cli('smooth', prediction, '--out', os.path.join(root, 'smooth2'), '--order', 2)
        assert code == 0, summary
        assert summary['curves'] == ['T0_vs_T1_home_smooth']

    # ------------------------------------------------------------------------------------------------------------------
    def test_usage_errors(self):
        out = self.make_temp_dir()
        games = self.make_season(kind=1)

        for argv in (
            (),
            ('bogus',),
            ('fit',),
            ('fit', games, '--out', out, '--no-such-flag'),
            ('fit', games, '--out', out, '--model', 'x'),
            ('fit', games, '--out', out, '--constraint', 'pin_team:nobody'),
            ('rank', out, '--out', out),
            ('fit', games, '--out', out, '--log-level', 'LOUD'),
        ):
            code, _ = self.run_cli(*argv)
            assert code == ExitCodes.USAGE_ERROR, argv

    # ------------------------------------------------------------------------------------------------------------------
    def test_failure_marker(self):
        out = self.make_temp_dir()
        games = self.make_season(kind=1)

        code, _ = self.run_cli('fit', games, '--out', out, '--model', 7)
        assert code == ExitCodes.USAGE_ERROR

        marker = self.read_json(out, 'FAILED.json')
        assert marker['command'] == 'fit'
        assert marker['exit_code'] == ExitCodes.USAGE_ERROR
        assert marker['error']['error'] == scoreline.errors.ModelKindError.key

        code, _ = self.run_cli('fit', games, '--out', out, '--model', 1)
        assert code == 0
        assert not os.path.exists(os.path.join(out, 'FAILED.json'))
        assert os.path.exists(os.path.join(out, 'provenance.json'))

        code, _ = self.run_cli('fit', games, '--out', out, '--model', 1, '--constraint', 'pin_team:nobody')
        assert code == ExitCodes.USAGE_ERROR
        assert os.path.exists(os.path.join(out, 'FAILED.json'))
        assert not os.path.exists(os.path.join(out, 'provenance.json'))

    # ------------------------------------------------------------------------------------------------------------------
    def test_validation_failure(self):
        directory = self.make_temp_dir()
        games = [
            self.make_game('g1', 'A', 'B', [(10, 2, 0), (20, 4, 0)]),
            self.make_game('g2', 'B', 'A', [(10, 2, 0), (20, 1, 0)]),
        ]
        path = self.write_jsonl(directory, games)
        out = os.path.join(directory, 'out')

        code, _ = self.run_cli('validate', path, '--out', out)

        assert code == ExitCodes.VALIDATION_FAILED
        assert os.path.isfile(os.path.join(out, 'repairs.jsonl'))
        assert self.read_json(out, 'FAILED.json')['exit_code'] == ExitCodes.VALIDATION_FAILED

        code, summary = self.run_cli('validate', path, '--out', out, '--force')
        assert code == 0
        assert summary['n_games'] == 2

    # ------------------------------------------------------------------------------------------------------------------
    def test_identifiability_failure(self):
        directory = self.make_temp_dir()
        games = [
            self.make_game('g1', 'A', 'B', [(10, 4, 0)]),
            self.make_game('g2', 'B', 'A', [(10, 2, 0)]),
            self.make_game('g3', 'C', 'D', [(10, 0, 2)]),
            self.make_game('g4', 'D', 'C', [(10, 0, 1)]),
        ]
        path = self.write_jsonl(directory, games)
        out = os.path.join(directory, 'fit')

        code, _ = self.run_cli('fit', path, '--out', out, '--model', 1)
        assert code == ExitCodes.IDENTIFIABILITY_FAILED
        assert self.read_json(out, 'FAILED.json')['exit_code'] == ExitCodes.IDENTIFIABILITY_FAILED

        code, summary = self.run_cli('fit', path, '--out', out, '--model', 1, '--per-component')
        assert code == 0
        assert any('components' in warning for warning in summary['warnings'])

    # ------------------------------------------------------------------------------------------------------------------
    def test_mismatched_games(self):
        out = self.make_temp_dir()
        games = self.make_season(kind=2)
        other = self.make_season(kind=2, seed=12)

        code, _ = self.run_cli('fit', games, '--out', out)
        assert code == 0

        code, _ = self.run_cli('sos', out, other, '--out', self.make_temp_dir())
        assert code == ExitCodes.USAGE_ERROR

    # ------------------------------------------------------------------------------------------------------------------
    def test_version(self):
        code, _ = self.run_cli('--version')
        assert code == 0

    # ------------------------------------------------------------------------------------------------------------------
    def test_main(self):
        assert scoreline.main(['bogus']) == ExitCodes.USAGE_ERROR
