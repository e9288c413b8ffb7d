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
import hashlib

from scoreline.core import utils
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestUtils(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_sha256_file(self):
        directory = self.make_temp_dir()
        path = os.path.join(directory, 'a.bin')
        data = os.urandom(40000)

        with open(path, 'wb') as handle:
            handle.write(data)

        assert utils.sha256_file(path, buff_size=1000) == hashlib.sha256(data).hexdigest()
        assert utils.sha256_bytes(data) == hashlib.sha256(data).hexdigest()

    # ------------------------------------------------------------------------------------------------------------------
    def test_sha256_directory(self):
        first, second = self.make_temp_dir(), self.make_temp_dir()

        for directory in (first, second):
            os.makedirs(os.path.join(directory, 'sub'))
            for name, text in (('b.txt', 'b'), ('a.txt', 'a'), (os.path.join('sub', 'c.txt'), 'c')):
                with open(os.path.join(directory, name), 'w') as handle:
                    handle.write(text)

        assert utils.sha256_file(first) == utils.sha256_file(second)

        with open(os.path.join(second, 'sub', 'c.txt'), 'w') as handle:
            handle.write('changed')

        assert utils.sha256_file(first) != utils.sha256_file(second)

    # ------------------------------------------------------------------------------------------------------------------
    def test_digest_strings(self):
        assert utils.digest_strings(['a', 'b']) != utils.digest_strings(['b', 'a'])
        assert utils.digest_strings(['ab']) != utils.digest_strings(['a', 'b'])

    # ------------------------------------------------------------------------------------------------------------------
    def test_dump_json(self):
        data = utils.dump_json(dict(b=1, a=[1.5, None]))

        assert data.endswith(b'\n')
        assert data.index(b'"a"') < data.index(b'"b"')
        assert json.loads(data.decode('utf-8')) == dict(a=[1.5, None], b=1)

        with self.assertRaises(ValueError):
            utils.dump_json(dict(x=float('nan')))

    # ------------------------------------------------------------------------------------------------------------------
    def test_ensure_directory(self):
        path = os.path.join(self.make_temp_dir(), 'x', 'y')

        assert utils.ensure_directory(path) == path
        assert utils.ensure_directory(path) == path
        assert os.path.isdir(path)
