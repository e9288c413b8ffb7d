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
import typing

import numpy as np
import pandas as pd

from .base import CommandInterface
from .constants import register_interface_type
from .. import ingest, design, solver, inference, ratings, synth
from ..command import InputPath, OutputDir, hidden
from ..constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_CONFIDENCE_LEVEL,
    DEFAULT_KNOT_SPACING_S,
    DEFAULT_SPLINE_ORDER,
    DEFAULT_THRESHOLD,
)
from ..errors import DimensionMismatchError, GameParseError, ScorelineValidationError, UsageError
from ..utils import digest_strings, dump_json, ensure_directory

REPAIR_REPORT_FILE_NAME = 'repairs.jsonl'
VALIDATION_FILE_NAME = 'validation.json'
MATRIX_FILE_NAME = 'design.mtx'
ANOVA_FILE_NAME = 'anova.csv'
ANOVA_SUMMARY_FILE_NAME = 'anova_summary.json'
BAND_FILE_NAME = 'alpha_band.csv'
RANKINGS_FILE_NAME = 'rankings.csv'
SOS_FILE_NAME = 'sos.csv'
DECOMPOSITION_FILE_NAME = 'decomposition_%s.csv'
PREDICTION_FILE_NAME = 'prediction.csv'
SMOOTHED_FILE_NAME = 'smoothed.csv'

RANKING_COLUMNS = ('team', 'scalar_rating', 'rank', 'end_of_game_rank', 'tied')
SOS_COLUMNS = ('team', 'scalar_sos', 'rank')


# ----------------------------------------------------------------------------------------------------------------------
class PipelineInterface(CommandInterface):
    """
    The scoreline commands. Each reads files, writes its outputs into one directory and returns a JSON-friendly
    summary listing the files it wrote.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @hidden
    def _write(self, directory, name, data):
        # type: (str, str, bytes) -> str
        path = os.path.join(ensure_directory(directory), name)
        with open(path, 'wb') as handle:
            handle.write(data)
        return path

    # ------------------------------------------------------------------------------------------------------------------
    @hidden
    def _write_rows(self, directory, name, header, rows):
        # type: (str, str, typing.Sequence[str], typing.Iterable[list]) -> str
        path = os.path.join(ensure_directory(directory), name)
        pd.DataFrame(list(rows), columns=list(header)).to_csv(path, index=False, lineterminator='\n')
        return path

    # ------------------------------------------------------------------------------------------------------------------
    @hidden
    def _load_prepared(self, games, force, max_swing):
        """
        Load games, exclude the ones whose scores decrease (unless forced), and resample the rest.
        """
        report = ingest.RepairReport()
        records = ingest.load_games(games, force=force, report=report)

        rejected = report.counts().get(ingest.MONOTONICITY_REJECTED, 0)
        if rejected:
            self.logger.warning('Excluded %s games whose scores decrease; pass --force to keep them' % rejected)

        tracks, report = ingest.prepare(records, max_swing=max_swing, force=force, report=report)
        return records, tracks, report

    # ------------------------------------------------------------------------------------------------------------------
    def validate(self, games: InputPath, out: OutputDir, force: bool = False, max_swing: int = None):
        """
        Parse and repair a game file, writing the repair report and a validation summary.

        Exits with the validation failure code when any game had to be excluded.

        :param games: games.jsonl, games.csv with events.csv beside it, or a directory holding either.
        :param out: directory for repairs.jsonl and validation.json.
        :param force: keep games whose scores decrease instead of rejecting them.
        :param max_swing: largest allowed change of the differential within one second.
        """
        records, tracks, report = self._load_prepared(games, force, max_swing)

        n_excluded = report.counts().get(ingest.MONOTONICITY_REJECTED, 0)
        summary = dict(
            n_games=len(records),
            n_excluded=n_excluded,
            n_repairs=len(report.repairs),
            repair_counts=dict(report.counts()),
            games_digest=digest_strings(g.game_id for g in records),
        )

        outputs = [
            self._write(out, REPAIR_REPORT_FILE_NAME, report.to_jsonl()),
            self._write(out, VALIDATION_FILE_NAME, dump_json(summary)),
        ]

        if n_excluded:
            raise ScorelineValidationError(
                '%s games were rejected; see %s' % (n_excluded, outputs[0]),
                n_excluded=n_excluded,
                report=outputs[0],
            )

        return dict(summary, outputs=outputs)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(
            self,
            games: InputPath,
            out: OutputDir,
            model: int = 2,
            constraint: str = 'sum_zero',
            per_component: bool = False,
            force: bool = False,
            max_swing: int = None,
            block_size: int = DEFAULT_BLOCK_SIZE,
            threads: int = None,
            dump_matrix: bool = False,
    ):
        """
        Fit functional ratings to a season and save them.

        :param games: the season's game file or directory.
        :param out: directory for the fit.
        :param model: 1 (basic), 2 (constant home advantage) or 3 (per-team home advantage).
        :param constraint: sum_zero, pin_worst, pin_average_score or pin_team:<team>[=<value>].
        :param per_component: rate a disconnected schedule within each connected component.
        :param force: keep games whose scores decrease.
        :param max_swing: largest allowed change of the differential within one second.
        :param block_size: time columns per solve block.
        :param threads: solver threads; defaults to the CPU count.
        :param dump_matrix: also write the design matrix in MatrixMarket format.
        """
        records, tracks, report = self._load_prepared(games, force, max_swing)

        D = ingest.stack_tracks(tracks)
        X = design.build_design(records, model)

        mean_score = None
        if constraint.strip().lower().startswith(solver.PinAverageScore.key):
            mean_score = ingest.average_score_curve(tracks)

        result = solver.fit(
            X,
            D,
            constraint=solver.parse_constraint(constraint, mean_score=mean_score),
            per_component=per_component,
            block_size=block_size,
            threads=threads,
        )

        outputs = solver.save_ratings(result, out)
        outputs.append(self._write(out, REPAIR_REPORT_FILE_NAME, report.to_jsonl()))

        if dump_matrix:
            outputs.append(design.write_matrix_market(X, os.path.join(out, MATRIX_FILE_NAME)))

        self.logger.info(
            'Factorization %.3fs, solve %.3fs' % (
                result.diagnostics.get('factorization_s', 0.0), result.diagnostics.get('solve_s', 0.0),
            )
        )

        return dict(
            model=result.kind.name.lower(),
            constraint=result.constraint,
            rank=result.rank,
            dof_resid=result.dof_resid,
            total_sse=float(result.sse.sum()),
            n_games=result.m,
            n_teams=result.spec.n_teams,
            outputs=outputs,
        )

    # ------------------------------------------------------------------------------------------------------------------
    def anova(
            self,
            reduced: InputPath,
            full: InputPath,
            out: OutputDir,
            threshold: float = DEFAULT_THRESHOLD,
            burn_in: int = 0,
            level: float = DEFAULT_CONFIDENCE_LEVEL,
            team: str = None,
    ):
        """
        Per-second F test of a reduced fit against the full fit it is nested in.

        :param reduced: directory of the reduced fit.
        :param full: directory of the full fit.
        :param out: directory for anova.csv, anova_summary.json and alpha_band.csv.
        :param threshold: P value threshold the summary counts seconds against.
        :param burn_in: seconds at the start of the game the summary ignores.
        :param level: coverage of the home advantage confidence band.
        :param team: host team whose home advantage band is written, for per-team fits.
        """
        fit_reduced = solver.load_ratings(reduced)
        fit_full = solver.load_ratings(full)

        result = inference.anova_nested(fit_reduced, fit_full)
        summary = inference.anova_summary(result, threshold=threshold, burn_in_s=burn_in)

        degenerate = ['true' if flag else 'false' for flag in result.degenerate]
        outputs = [
            self._write(
                out,
                ANOVA_FILE_NAME,
                ratings.curves_to_csv([result.f_curve, result.p_curve], extra_columns=dict(degenerate=degenerate)),
            ),
            self._write(out, ANOVA_SUMMARY_FILE_NAME, dump_json(summary)),
        ]

        if fit_full.kind is design.ModelKind.INDIVIDUAL_HCA and team is None:
            self.logger.warning('Name a --team to write the home advantage band of a per-team fit')

        elif fit_full.kind.has_alpha:
            if fit_full.kind is design.ModelKind.CONSTANT_HCA:
                team = None
            lower, upper = inference.alpha_confidence_band(fit_full, level=level, team=team)
            estimate = ratings.CurveSeries(
                'alpha' if team is None else 'alpha_%s' % team, fit_full.alpha_curve(team), 'points',
            )
            outputs.append(self._write(out, BAND_FILE_NAME, ratings.curves_to_csv([estimate, lower, upper])))

        return dict(summary, outputs=outputs)

    # ------------------------------------------------------------------------------------------------------------------
    def rank(self, fit: InputPath, out: OutputDir, weight: str = 'uniform'):
        """
        Rank teams by weighted scalar rating.

        :param fit: directory of a fit.
        :param out: directory for rankings.csv.
        :param weight: uniform, linear, end or file:<path> of a second,weight CSV table.
        """
        result = solver.load_ratings(fit)
        w = ratings.parse_weight(weight)

        rows = ratings.rank_teams(result, w)
        outputs = [self._write_rows(out, RANKINGS_FILE_NAME, RANKING_COLUMNS, [row.to_list() for row in rows])]

        return dict(weight=w.describe(), n_teams=len(rows), leader=rows[0].team if rows else None, outputs=outputs)

    # ------------------------------------------------------------------------------------------------------------------
    def sos(
            self,
            fit: InputPath,
            games: InputPath,
            out: OutputDir,
            weight: str = 'uniform',
            team: str = None,
            force: bool = False,
            max_swing: int = None,
    ):
        """
        Strength of schedule of every team of a constant home advantage fit.

        :param fit: directory of a model 2 fit.
        :param games: the game file the fit was built from.
        :param out: directory for sos.csv and the decomposition curves.
        :param weight: uniform, linear, end or file:<path>.
        :param team: also write the rating, average differential and schedule curves of this team.
        :param force: keep games whose scores decrease, as the fit did.
        :param max_swing: largest allowed change of the differential within one second.
        """
        result = solver.load_ratings(fit)
        records, tracks, _ = self._load_prepared(games, force, max_swing)

        X = design.build_design(records, result.kind, teams=result.teams)
        if digest_strings(X.row_game) != result.games_digest:
            raise DimensionMismatchError('The games in %s are not the games the fit was built from' % games)

        D = ingest.stack_tracks(tracks)
        w = ratings.parse_weight(weight)

        rows = ratings.sos_table(result, X, D, w)
        outputs = [self._write_rows(out, SOS_FILE_NAME, SOS_COLUMNS, [row.to_list() for row in rows])]

        if team is not None:
            decomposition = ratings.decompose(result, X, D, team)
            beta = ratings.CurveSeries('beta_%s' % team, result.team_curve(team), 'points')
            outputs.append(self._write(
                out,
                DECOMPOSITION_FILE_NAME % team,
                ratings.curves_to_csv([beta, decomposition.avg_diff, decomposition.sos]),
            ))

        return dict(weight=w.describe(), n_teams=len(rows), outputs=outputs)

    # ------------------------------------------------------------------------------------------------------------------
    def predict(self, fit: InputPath, team_a: str, team_b: str, out: OutputDir, venue: str = 'neutral'):
        """
        Expected point differential of team_a over team_b at every second.

        :param fit: directory of a fit.
        :param team_a: the team the differential is oriented towards.
        :param team_b: the opponent.
        :param out: directory for prediction.csv.
        :param venue: neutral, or home for a game at team_a's home.
        """
        result = solver.load_ratings(fit)
        curve = ratings.predict(result, team_a, team_b, venue)
        leader = ratings.leaders(curve, team_a, team_b)

        outputs = [self._write(out, PREDICTION_FILE_NAME, ratings.curves_to_csv([curve], dict(leader=leader)))]

        return dict(
            prediction=curve.name,
            final_margin=float(curve.values[-1]),
            final_leader=leader[-1],
            outputs=outputs,
        )

    # ------------------------------------------------------------------------------------------------------------------
    @hidden
    def _read_curves(self, path, column, team):
        # type: (str, str, str) -> typing.List[ratings.CurveSeries]
        """
        Curves from a fit directory (team ratings) or from a curve CSV written by another command.
        """
        if os.path.isdir(path):
            result = solver.load_ratings(path)
            teams = [team] if team is not None else list(result.teams)
            return [ratings.CurveSeries('beta_%s' % t, result.team_curve(t), 'points') for t in teams]

        try:
            frame = pd.read_csv(path)
        except OSError as e:
            raise UsageError('Could not read curve file %s: %s' % (path, e))
        except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
            raise GameParseError('Curve file is not a valid CSV: %s' % e, source=path)

        if frame.empty:
            raise GameParseError('Curve file has no rows', source=path)

        names = [name for name in frame.columns if name != 'second']
        if column is not None:
            if column not in names:
                raise UsageError('Curve file %s has no column %s' % (path, column))
            names = [column]

        curves = list()
        for name in names:
            values = frame[name]
            if not pd.api.types.is_numeric_dtype(values) or pd.api.types.is_bool_dtype(values):
                if column is not None:
                    raise GameParseError('Column is not numeric', source=path, field=name)
                continue
            curves.append(ratings.CurveSeries(name, values.to_numpy(dtype=np.float64)))

        return curves

    # ------------------------------------------------------------------------------------------------------------------
    def smooth(
            self,
            curve: InputPath,
            out: OutputDir,
            order: int = DEFAULT_SPLINE_ORDER,
            knot_spacing: int = DEFAULT_KNOT_SPACING_S,
            column: str = None,
            team: str = None,
    ):
        """
        Project curves onto a B-spline basis with uniform knots.

        :param curve: a curve CSV from another command, or a fit directory to smooth team ratings.
        :param out: directory for smoothed.csv.
        :param order: spline order; 4 gives cubic splines.
        :param knot_spacing: seconds between interior knots.
        :param column: only smooth this column of the curve CSV.
        :param team: only smooth this team's rating, when reading a fit.
        """
        raw = self._read_curves(curve, column, team)
        if not raw:
            raise UsageError('%s holds no numeric curves' % curve)

        smoothed = [ratings.smooth(c, order=order, knot_spacing_s=knot_spacing) for c in raw]
        outputs = [self._write(out, SMOOTHED_FILE_NAME, ratings.curves_to_csv(smoothed))]

        return dict(curves=[c.name for c in smoothed], order=order, knot_spacing=knot_spacing, outputs=outputs)

    # ------------------------------------------------------------------------------------------------------------------
    def synth(
            self,
            out: OutputDir,
            synth_config: InputPath = None,
            n_teams: int = None,
            games_per_team: int = None,
            model: int = None,
            neutral_fraction: float = None,
            beta_family: str = None,
            alpha: float = None,
            noise: str = None,
            sigma: float = None,
            seed: int = None,
            regulation_s: int = None,
            threads: int = None,
    ):
        """
        Generate a synthetic season with known true ratings.

        :param out: directory for games.jsonl and truth.json.
        :param synth_config: JSON file of season settings; flags override it.
        :param n_teams: number of teams.
        :param games_per_team: games each team plays.
        :param model: model the truth is drawn from, 1, 2 or 3.
        :param neutral_fraction: share of games at neutral sites.
        :param beta_family: constant, linear or spline team rating curves.
        :param alpha: home advantage in points.
        :param noise: none, iid or random_walk.
        :param sigma: noise scale in points.
        :param seed: random seed.
        :param regulation_s: seconds of regulation.
        :param threads: worker threads; the output does not depend on it.
        """
        cfg = synth.load_synth_config(synth_config) if synth_config is not None else synth.SynthConfig()

        overrides = dict(
            n_teams=n_teams,
            games_per_team=games_per_team,
            kind=model,
            neutral_fraction=neutral_fraction,
            beta_family=beta_family,
            alpha=alpha,
            noise=noise,
            sigma=sigma,
            seed=seed,
            regulation_s=regulation_s,
        )
        cfg = cfg.replace(**{key: value for key, value in overrides.items() if value is not None})

        games, truth = synth.generate_season(cfg, threads=threads)
        outputs = synth.write_season(out, games, truth)

        return dict(n_games=len(games), n_teams=cfg.n_teams, seed=cfg.seed, outputs=outputs)


register_interface_type('pipeline', PipelineInterface)
