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

Synthetic seasons
=================

1. Draw true curves beta_i(t) (sum zero at every second) and alpha(t) or alpha_i(t). All curves are 0 at t = 0,
   since every game starts level.
2. Draw a schedule in rounds of random pairings, redrawing until the model is identified.
3. For every game, d(t) = (X theta(t))_k + noise, rounded to integers.
4. Turn d into scoring events: the home team scores when d steps up, the away team when it steps down.

Each game draws its noise from its own child of the season's seed sequence, so the output depends only on the seed.
"""
import os
import json
import typing
import datetime
import dataclasses
import concurrent.futures

import numpy as np
from scipy import interpolate

from ..log import get_logger
from .config import SynthConfig
from ..utils import dump_json, ensure_directory
from ..errors import InfeasibleSynthConfigError
from ..ingest import GameRecord, ScoringEvent, write_games
from ..design import ModelKind, build_design, check_connectivity

logger = get_logger('synth')

SEASON_START = datetime.date(2026, 11, 1)
TRUTH_FILE_NAME = 'truth.json'

# -- seconds between knots of the 'spline' beta family
SPLINE_KNOT_SPACING_S = 600


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(eq=False)
class SeasonTruth(object):
    """
    The parameters a synthetic season was generated from, on the per-second grid.
    """

    teams: typing.Tuple[str, ...]
    kind: ModelKind
    beta: np.ndarray
    alpha: typing.Optional[np.ndarray]
    config: SynthConfig

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def theta(self):
        # type: () -> np.ndarray
        if self.alpha is None:
            return self.beta
        return np.vstack([self.beta, np.atleast_2d(self.alpha)])

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        return dict(
            teams=list(self.teams),
            kind=int(self.kind),
            config=self.config.to_dict(),
            beta=self.beta.tolist(),
            alpha=None if self.alpha is None else self.alpha.tolist(),
        )

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, data):
        # type: (dict) -> SeasonTruth
        alpha = data.get('alpha')
        return cls(
            teams=tuple(data['teams']),
            kind=ModelKind.from_value(data['kind']),
            beta=np.array(data['beta'], dtype=np.float64),
            alpha=None if alpha is None else np.array(alpha, dtype=np.float64),
            config=SynthConfig.from_dict(data['config']),
        )


# ----------------------------------------------------------------------------------------------------------------------
def team_names(n_teams):
    # type: (int) -> typing.Tuple[str, ...]
    width = len(str(n_teams - 1))
    return tuple('T%0*d' % (width, i) for i in range(n_teams))


# ----------------------------------------------------------------------------------------------------------------------
def _shape(cfg, grid):
    # type: (SynthConfig, np.ndarray) -> np.ndarray
    """
    Common time profile of the 'constant' and 'linear' families: flat after tip-off, or a ramp to 1 at the end.
    """
    if cfg.beta_family == 'constant':
        return (grid > 0).astype(np.float64)
    return grid / float(cfg.regulation_s)


# ----------------------------------------------------------------------------------------------------------------------
def _quantize_sum_zero(curves):
    # type: (np.ndarray) -> np.ndarray
    """
    Round every curve to integers, giving the last team the negative sum of the others so columns still sum to 0.
    """
    result = np.rint(curves)
    result[-1] = -result[:-1].sum(axis=0)
    return result


# ----------------------------------------------------------------------------------------------------------------------
def true_beta(cfg, rng):
    # type: (SynthConfig, np.random.Generator) -> np.ndarray
    n = cfg.n_teams
    grid = np.arange(cfg.regulation_s + 1, dtype=np.float64)
    strengths = rng.standard_normal(n) * cfg.beta_scale

    if cfg.beta_family == 'spline':
        interior = np.arange(SPLINE_KNOT_SPACING_S, cfg.regulation_s, SPLINE_KNOT_SPACING_S, dtype=np.float64)
        knots = np.concatenate([np.zeros(4), interior, np.full(4, float(cfg.regulation_s))])
        n_coefficients = len(knots) - 4

        # -- coefficients wander around each team's strength; a zero first coefficient pins beta(0) to 0
        coefficients = strengths[:, None] * (1.0 + 0.3 * rng.standard_normal((n, n_coefficients)))
        coefficients[:, 0] = 0.0
        beta = interpolate.BSpline(knots, coefficients.T, 3)(grid).T

    else:
        beta = strengths[:, None] * _shape(cfg, grid)[None, :]

    beta = beta - beta.mean(axis=0)
    if cfg.quantize:
        beta = _quantize_sum_zero(beta)
    beta[:, 0] = 0.0
    return beta


# ----------------------------------------------------------------------------------------------------------------------
def true_alpha(cfg, rng, hosts):
    # type: (SynthConfig, np.random.Generator, np.ndarray) -> typing.Optional[np.ndarray]
    """
    Home advantage curves. Teams that never host get no advantage, since no game could reveal it.
    """
    if cfg.kind is ModelKind.BASIC:
        return None

    grid = np.arange(cfg.regulation_s + 1, dtype=np.float64)
    profile = _shape(cfg, grid) if cfg.beta_family != 'spline' else grid / float(cfg.regulation_s)

    if cfg.kind is ModelKind.CONSTANT_HCA:
        alpha = cfg.alpha * profile if hosts.any() else np.zeros_like(grid)
        return np.rint(alpha) if cfg.quantize else alpha

    levels = cfg.alpha + cfg.alpha_spread * rng.standard_normal(cfg.n_teams)
    alpha = levels[:, None] * profile[None, :]
    alpha[~hosts] = 0.0
    return np.rint(alpha) if cfg.quantize else alpha


# ----------------------------------------------------------------------------------------------------------------------
def draw_schedule(cfg, rng):
    # type: (SynthConfig, np.random.Generator) -> typing.List[typing.Tuple[int, int, int, bool]]
    """
    Rounds of random pairings. Returns (round, home index, away index, neutral) per game.
    """
    schedule = list()
    for round_index in range(cfg.games_per_team):
        order = rng.permutation(cfg.n_teams)
        for k in range(0, cfg.n_teams - 1, 2):
            first, second = int(order[k]), int(order[k + 1])
            if rng.random() < 0.5:
                first, second = second, first
            neutral = bool(rng.random() < cfg.neutral_fraction)
            schedule.append((round_index, first, second, neutral))
    return schedule


# ----------------------------------------------------------------------------------------------------------------------
def _schedule_games(cfg, teams, schedule):
    # type: (SynthConfig, typing.Sequence[str], list) -> typing.List[GameRecord]
    width = len(str(len(schedule) - 1))
    return [
        GameRecord(
            game_id='g%0*d' % (width, k),
            date=SEASON_START + datetime.timedelta(days=round_index),
            home_team=teams[home],
            away_team=teams[away],
            neutral_site=neutral,
            reported_final=(0, 0),
            regulation_length_s=cfg.regulation_s,
        )
        for k, (round_index, home, away, neutral) in enumerate(schedule)
    ]


# ----------------------------------------------------------------------------------------------------------------------
def connected_schedule(cfg, rng, teams):
    # type: (SynthConfig, np.random.Generator, typing.Sequence[str]) -> list
    """
    Draw schedules until the team graph is connected and, for IndividualHCA, the home/road parameter graph too.
    """
    for attempt in range(cfg.max_attempts):
        schedule = draw_schedule(cfg, rng)
        if not schedule:
            break

        X = build_design(_schedule_games(cfg, teams, schedule), cfg.kind, teams=teams)
        report = check_connectivity(X)

        if report.is_connected and report.parameter_graph_connected is not False:
            logger.debug('Connected schedule found after %s attempts' % (attempt + 1))
            return schedule

    raise InfeasibleSynthConfigError(
        'No identified schedule for %s teams with %s games each after %s attempts; add games per team' % (
            cfg.n_teams, cfg.games_per_team, cfg.max_attempts,
        )
    )


# ----------------------------------------------------------------------------------------------------------------------
def score_path(d, regulation_s):
    # type: (np.ndarray, int) -> typing.Tuple[ScoringEvent, ...]
    """
    Monotone scoring events realizing an integer differential path that starts at 0.
    """
    steps = np.diff(d)
    times = np.flatnonzero(steps) + 1

    home = np.cumsum(np.clip(steps, 0, None))
    away = np.cumsum(np.clip(-steps, 0, None))

    return tuple(ScoringEvent(int(t), int(home[t - 1]), int(away[t - 1])) for t in times if t <= regulation_s)


# ----------------------------------------------------------------------------------------------------------------------
def _noise(cfg, rng, length):
    # type: (SynthConfig, np.random.Generator, int) -> np.ndarray
    noise = np.zeros(length)
    if cfg.noise == 'iid':
        noise[1:] = cfg.sigma * rng.standard_normal(length - 1)
    elif cfg.noise == 'random_walk':
        noise[1:] = np.cumsum(cfg.sigma * rng.standard_normal(length - 1))
    return noise


# ----------------------------------------------------------------------------------------------------------------------
def _play_game(cfg, game, expected, seed_sequence):
    # type: (SynthConfig, GameRecord, np.ndarray, np.random.SeedSequence) -> GameRecord
    rng = np.random.default_rng(seed_sequence)

    d = np.rint(expected + _noise(cfg, rng, len(expected))).astype(np.int64)
    d[0] = 0

    events = score_path(d, cfg.regulation_s)
    final = events[-1].score if events else (0, 0)

    return game.replace(events=events, reported_final=final)


# ----------------------------------------------------------------------------------------------------------------------
def generate_season(cfg, threads=None):
    # type: (SynthConfig, typing.Optional[int]) -> typing.Tuple[typing.List[GameRecord], SeasonTruth]
    """
    Generate a season and the truth it came from.

    :param cfg: the season recipe.
    :type cfg: SynthConfig

    :param threads: worker threads for per-game generation. The output does not depend on it.
    :type threads: int

    :return: the games, in schedule order, and the true parameters.
    :rtype: tuple
    """
    root = np.random.SeedSequence(int(cfg.seed))
    schedule_sequence, truth_sequence, noise_sequence = root.spawn(3)

    teams = team_names(cfg.n_teams)
    schedule = connected_schedule(cfg, np.random.default_rng(schedule_sequence), teams)
    games = _schedule_games(cfg, teams, schedule)

    X = build_design(games, cfg.kind, teams=teams)

    hosts = np.zeros(cfg.n_teams, dtype=bool)
    for _, home, _, neutral in schedule:
        hosts[home] |= not neutral

    truth_rng = np.random.default_rng(truth_sequence)
    beta = true_beta(cfg, truth_rng)
    alpha = true_alpha(cfg, truth_rng, hosts)
    truth = SeasonTruth(teams, cfg.kind, beta, alpha, cfg)

    expected = X.to_sparse() @ truth.theta
    game_sequences = noise_sequence.spawn(len(games))

    threads = max(int(threads or os.cpu_count() or 1), 1)
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        played = list(executor.map(
            _play_game,
            [cfg] * len(games),
            games,
            list(expected),
            game_sequences,
        ))

    logger.info(
        'Generated %s games for %s teams (%s, %s noise, seed %s)' % (
            len(played), cfg.n_teams, cfg.kind.name, cfg.noise, cfg.seed,
        )
    )
    return played, truth


# ----------------------------------------------------------------------------------------------------------------------
def write_season(directory, games, truth):
    # type: (str, typing.Sequence[GameRecord], SeasonTruth) -> typing.List[str]
    """
    Write games.jsonl and the truth.json sidecar.
    """
    ensure_directory(directory)
    written = write_games(directory, games, format='jsonl')

    path = os.path.join(directory, TRUTH_FILE_NAME)
    with open(path, 'wb') as handle:
        handle.write(dump_json(truth.to_dict()))
    written.append(path)

    return written


# ----------------------------------------------------------------------------------------------------------------------
def load_truth(path):
    # type: (str) -> SeasonTruth
    if os.path.isdir(path):
        path = os.path.join(path, TRUTH_FILE_NAME)
    with open(path, 'r', encoding='utf-8') as handle:
        return SeasonTruth.from_dict(json.load(handle))
