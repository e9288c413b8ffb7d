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
__version__ = '0.1.0'

from .core import cli
from .core import log
from .core import synth
from .core import errors
from .core import ingest
from .core import design
from .core import solver
from .core import ratings
from .core import command
from .core import inference
from .core import interface
from .core import constants

from .core.log import get_logger, configure_logging

from .core.errors import ExitCodes
from .core.errors import error_from_key, register_error_type, key_from_error_type, exit_code_from_error

from .core.ingest import GameRecord, ScoringEvent, DifferentialTrack, RepairReport
from .core.ingest import parse_game_file, serialize_games, load_games, write_games, prepare, resample, stack_tracks

from .core.design import ModelKind, ModelSpec, DesignMatrix, build_design, check_connectivity

from .core.solver import RatingSet, fit, residuals, save_ratings, load_ratings
from .core.solver import SumZero, PinTeam, PinAverageScore, PinWorst, parse_constraint, register_constraint_type

from .core.inference import anova_nested, anova_summary, alpha_confidence_band, f_cdf, t_cdf, t_quantile

from .core.curves import CurveSeries
from .core.ratings import WeightSpec, WeightKind, scalar_rating, rank_teams, smooth, decompose, predict, Venue

from .core.synth import SynthConfig, SeasonTruth, generate_season, write_season

from .core.command import CliCommand, hidden
from .core.interface import CommandInterface, PipelineInterface, register_interface_type

from .core.cli import Application, RunConfig, main, load_run_config
