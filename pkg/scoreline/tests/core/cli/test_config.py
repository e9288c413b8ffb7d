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

from scoreline.core.cli import config, load_run_config
from scoreline.core.errors import ConfigError, ExitCodes
from scoreline.tests.core.cli.test_app import CliTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestRunConfig(CliTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def write_config(self, text):
        path = os.path.join(self.make_temp_dir(), 'run.cfg')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        return path

    # ------------------------------------------------------------------------------------------------------------------
    def test_load(self):
        path = self.write_config('# fit settings\nmodel = 1\n--per-component = yes  # disconnected\nBlock-Size=64\n')

        assert load_run_config(path) == dict(model='1', per_component='yes', block_size='64')

    # ------------------------------------------------------------------------------------------------------------------
    def test_load_errors(self):
        with self.assertRaises(ConfigError):
            load_run_config(os.path.join(self.make_temp_dir(), 'missing.cfg'))

        with self.assertRaises(ConfigError):
            load_run_config(self.write_config('model = 1\nmodel = 2\n'))

        with self.assertRaises(ConfigError):
            load_run_config(self.write_config('no delimiter here\n'))

    # ------------------------------------------------------------------------------------------------------------------
    def test_precedence(self):
        games = self.make_season(kind=2, noise='iid', sigma=2.0)
        path = self.write_config('model = 1\nconstraint = pin_worst\nthreshold = 0.2\nlog_level = debug\n')

        code, summary = self.run_cli('fit', games, '--out', self.make_temp_dir(), '--config', path)
        assert code == 0, summary
        assert summary['model'] == 'basic'
        assert summary['constraint'] == 'pin_worst'

        code, summary = self.run_cli('fit', games, '--out', self.make_temp_dir(), '--config', path, '--model', 2)
        assert code == 0, summary
        assert summary['model'] == 'constant_hca'
        assert summary['constraint'] == 'pin_worst'

    # ------------------------------------------------------------------------------------------------------------------
    def test_unknown_setting(self):
        games = self.make_season(kind=2)
        path = self.write_config('colour = red\n')

        code, _ = self.run_cli('fit', games, '--out', self.make_temp_dir(), '--config', path)
        assert code == ExitCodes.USAGE_ERROR

    # ------------------------------------------------------------------------------------------------------------------
    def test_paths_are_absolute(self):
        run_config = config.RunConfig(
            command='fit', arguments=dict(games='/a/games.jsonl', out='/b', model=2, threads=None),
            inputs=dict(games='/a/games.jsonl'), output_dir='/b',
        )

        assert run_config.options() == dict(games='/a/games.jsonl', model=2, out='/b', threads=None)
        assert config.normalize_key('--Dump-Matrix') == 'dump_matrix'
