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
from .codes import ExitCodes
from .constants import register_error_type


# ----------------------------------------------------------------------------------------------------------------------
class ScorelineExceptionBase(Exception):
    key = 'scoreline_exception'
    label = 'Exception'
    code = ExitCodes.UNHANDLED

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, message, **kwargs):
        Exception.__init__(self, message)
        self.kwargs = kwargs

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def message(self):
        return self.args[0] if self.args else ''

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        result = dict(error=self.key, label=self.label, message=str(self.message), code=self.code)
        for key, value in self.kwargs.items():
            result[key] = value if isinstance(value, (int, float, str, bool, type(None))) else str(value)
        return result

    # ------------------------------------------------------------------------------------------------------------------
    def __str__(self):
        return '[Scoreline][%s] %s' % (self.label, self.message)


register_error_type(ScorelineExceptionBase.key, ScorelineExceptionBase)


# ----------------------------------------------------------------------------------------------------------------------
class ScorelineValidationError(ScorelineExceptionBase):
    key = 'validation_error'
    label = 'Validation Error'
    code = ExitCodes.VALIDATION_FAILED


register_error_type(ScorelineValidationError.key, ScorelineValidationError)


# ----------------------------------------------------------------------------------------------------------------------
class GameParseError(ScorelineValidationError):
    key = 'game_parse_error'
    label = 'Game Parse Error'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, message, source=None, line=None, field=None, **kwargs):
        ScorelineValidationError.__init__(self, message, source=source, line=line, field=field, **kwargs)
        self.source = source
        self.line = line
        self.field = field

    # ------------------------------------------------------------------------------------------------------------------
    def __str__(self):
        return '[Scoreline][%s] %s (source: %s, line: %s, field: %s)' % (
            self.label,
            self.message,
            self.source,
            self.line,
            self.field,
        )


register_error_type(GameParseError.key, GameParseError)


# ----------------------------------------------------------------------------------------------------------------------
class InvalidGameRecordError(ScorelineValidationError):
    key = 'invalid_game_record'
    label = 'Invalid Game Record'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, message, field=None, **kwargs):
        ScorelineValidationError.__init__(self, message, field=field, **kwargs)
        self.field = field


register_error_type(InvalidGameRecordError.key, InvalidGameRecordError)


# ----------------------------------------------------------------------------------------------------------------------
class DuplicateGameError(ScorelineValidationError):
    key = 'duplicate_game'
    label = 'Duplicate Game'


register_error_type(DuplicateGameError.key, DuplicateGameError)


# ----------------------------------------------------------------------------------------------------------------------
class MonotonicityError(ScorelineValidationError):
    key = 'monotonicity_error'
    label = 'Decreasing Score'


register_error_type(MonotonicityError.key, MonotonicityError)


# ----------------------------------------------------------------------------------------------------------------------
class IrreparableMismatchError(ScorelineValidationError):
    key = 'irreparable_mismatch'
    label = 'Irreparable Final Score Mismatch'


register_error_type(IrreparableMismatchError.key, IrreparableMismatchError)


# ----------------------------------------------------------------------------------------------------------------------
class SwingLimitError(ScorelineValidationError):
    key = 'swing_limit_exceeded'
    label = 'Swing Limit Exceeded'


register_error_type(SwingLimitError.key, SwingLimitError)


# ----------------------------------------------------------------------------------------------------------------------
class GridMismatchError(ScorelineValidationError):
    key = 'grid_mismatch'
    label = 'Grid Mismatch'
    code = ExitCodes.USAGE_ERROR


register_error_type(GridMismatchError.key, GridMismatchError)


# ----------------------------------------------------------------------------------------------------------------------
class UnknownTeamError(ScorelineExceptionBase):
    key = 'unknown_team'
    label = 'Unknown Team'
    code = ExitCodes.USAGE_ERROR


register_error_type(UnknownTeamError.key, UnknownTeamError)


# ----------------------------------------------------------------------------------------------------------------------
class EmptyScheduleError(ScorelineExceptionBase):
    key = 'empty_schedule'
    label = 'Empty Schedule'
    code = ExitCodes.USAGE_ERROR


register_error_type(EmptyScheduleError.key, EmptyScheduleError)


# ----------------------------------------------------------------------------------------------------------------------
class IdentifiabilityError(ScorelineExceptionBase):
    key = 'identifiability_error'
    label = 'Identifiability Error'
    code = ExitCodes.IDENTIFIABILITY_FAILED


register_error_type(IdentifiabilityError.key, IdentifiabilityError)


# ----------------------------------------------------------------------------------------------------------------------
class DimensionMismatchError(ScorelineExceptionBase):
    key = 'dimension_mismatch'
    label = 'Dimension Mismatch'
    code = ExitCodes.USAGE_ERROR


register_error_type(DimensionMismatchError.key, DimensionMismatchError)


# ----------------------------------------------------------------------------------------------------------------------
class NonNestedModelsError(ScorelineExceptionBase):
    key = 'non_nested_models'
    label = 'Models Not Nested'
    code = ExitCodes.USAGE_ERROR


register_error_type(NonNestedModelsError.key, NonNestedModelsError)


# ----------------------------------------------------------------------------------------------------------------------
class ModelKindError(ScorelineExceptionBase):
    key = 'model_kind_error'
    label = 'Unsupported Model Kind'
    code = ExitCodes.USAGE_ERROR


register_error_type(ModelKindError.key, ModelKindError)


# ----------------------------------------------------------------------------------------------------------------------
class DegreesOfFreedomError(ScorelineExceptionBase):
    key = 'degrees_of_freedom_error'
    label = 'Invalid Degrees of Freedom'
    code = ExitCodes.USAGE_ERROR


register_error_type(DegreesOfFreedomError.key, DegreesOfFreedomError)


# ----------------------------------------------------------------------------------------------------------------------
class ZeroWeightError(ScorelineExceptionBase):
    key = 'zero_weight'
    label = 'Zero Total Weight'
    code = ExitCodes.USAGE_ERROR


register_error_type(ZeroWeightError.key, ZeroWeightError)


# ----------------------------------------------------------------------------------------------------------------------
class WeightSpecError(ScorelineExceptionBase):
    key = 'weight_spec_error'
    label = 'Invalid Weight'
    code = ExitCodes.USAGE_ERROR


register_error_type(WeightSpecError.key, WeightSpecError)


# ----------------------------------------------------------------------------------------------------------------------
class SmoothingBasisError(ScorelineExceptionBase):
    key = 'smoothing_basis_error'
    label = 'Smoothing Basis Error'
    code = ExitCodes.USAGE_ERROR


register_error_type(SmoothingBasisError.key, SmoothingBasisError)


# ----------------------------------------------------------------------------------------------------------------------
class NoGamesPlayedError(ScorelineExceptionBase):
    key = 'no_games_played'
    label = 'No Games Played'
    code = ExitCodes.USAGE_ERROR


register_error_type(NoGamesPlayedError.key, NoGamesPlayedError)


# ----------------------------------------------------------------------------------------------------------------------
class InfeasibleSynthConfigError(ScorelineExceptionBase):
    key = 'infeasible_synth_config'
    label = 'Infeasible Synthetic Season'
    code = ExitCodes.USAGE_ERROR


register_error_type(InfeasibleSynthConfigError.key, InfeasibleSynthConfigError)


# ----------------------------------------------------------------------------------------------------------------------
class ConfigError(ScorelineExceptionBase):
    key = 'config_error'
    label = 'Configuration Error'
    code = ExitCodes.USAGE_ERROR


register_error_type(ConfigError.key, ConfigError)


# ----------------------------------------------------------------------------------------------------------------------
class UsageError(ScorelineExceptionBase):
    key = 'usage_error'
    label = 'Usage Error'
    code = ExitCodes.USAGE_ERROR


register_error_type(UsageError.key, UsageError)


# ----------------------------------------------------------------------------------------------------------------------
class CommandNotFoundError(UsageError):
    key = 'command_not_found'
    label = 'Command Not Found'


register_error_type(CommandNotFoundError.key, CommandNotFoundError)
