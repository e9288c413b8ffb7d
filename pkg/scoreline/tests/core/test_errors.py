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
import unittest

import scoreline
from scoreline.core import errors


# ----------------------------------------------------------------------------------------------------------------------
class TestScorelineErrors(unittest.TestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_register_error_type(self):
        class NewErrorType(Exception):
            pass

        scoreline.register_error_type('new', NewErrorType)

        assert scoreline.error_from_key('new') is NewErrorType
        assert scoreline.key_from_error_type(NewErrorType) == 'new'

    # ------------------------------------------------------------------------------------------------------------------
    def test_request_invalid_error_type(self):
        try:
            scoreline.key_from_error_type(None)
            self.fail()
        except KeyError:
            pass

    # ------------------------------------------------------------------------------------------------------------------
    def test_register_invalid_error_type(self):
        class InvalidErrorType(object):
            pass

        try:
            scoreline.register_error_type('invalid', InvalidErrorType)
            self.fail()
        except TypeError:
            pass

    # ------------------------------------------------------------------------------------------------------------------
    def test_register_invalid_key(self):
        class ValidErrorType(Exception):
            pass

        try:
            scoreline.register_error_type('__invalid/key--', ValidErrorType)
            self.fail()
        except KeyError:
            pass

    # ------------------------------------------------------------------------------------------------------------------
    def test_most_specific_key(self):
        assert scoreline.key_from_error_type(errors.MonotonicityError('x')) == errors.MonotonicityError.key
        assert scoreline.key_from_error_type(errors.CommandNotFoundError('x')) == errors.CommandNotFoundError.key
        assert scoreline.error_from_key('nothing_registered') is Exception

    # ------------------------------------------------------------------------------------------------------------------
    def test_exit_codes(self):
        codes = scoreline.ExitCodes

        assert scoreline.exit_code_from_error(errors.GameParseError('x')) == codes.VALIDATION_FAILED
        assert scoreline.exit_code_from_error(errors.MonotonicityError('x')) == codes.VALIDATION_FAILED
        assert scoreline.exit_code_from_error(errors.IdentifiabilityError('x')) == codes.IDENTIFIABILITY_FAILED
        assert scoreline.exit_code_from_error(errors.ConfigError('x')) == codes.USAGE_ERROR
        assert scoreline.exit_code_from_error(errors.NonNestedModelsError('x')) == codes.USAGE_ERROR
        assert scoreline.exit_code_from_error(RuntimeError('x')) == codes.UNHANDLED

    # ------------------------------------------------------------------------------------------------------------------
    def test_to_dict(self):
        error = errors.GameParseError('bad line', source='games.jsonl', line=3, field=None)

        assert str(error) == '[Scoreline][Game Parse Error] bad line (source: games.jsonl, line: 3, field: None)'
        assert str(errors.ConfigError('no file')) == '[Scoreline][%s] no file' % errors.ConfigError.label
        assert error.to_dict() == dict(
            error=errors.GameParseError.key,
            label=error.label,
            message='bad line',
            code=scoreline.ExitCodes.VALIDATION_FAILED,
            source='games.jsonl',
            line=3,
            field=None,
        )
