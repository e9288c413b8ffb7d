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
import typing
import dataclasses

import numpy as np

from ..log import get_logger
from .factorization import Factorization
from ..utils import digest_strings
from .constraints import Constraint, SumZero
from ..constants import DEFAULT_BLOCK_SIZE
from ..design import DesignMatrix, ModelKind, ModelSpec, check_connectivity
from ..errors import DimensionMismatchError, IdentifiabilityError, ModelKindError

logger = get_logger('solver')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(eq=False)
class RatingSet(object):
    """
    Fitted functional ratings on the per-second grid.

    beta is n x (T+1). alpha is None (Basic), a (T+1,) curve (ConstantHCA) or n x (T+1) (IndividualHCA).
    alpha_variance is the matching inverse Gram entry (None, a float, or one per team).
    """

    spec: ModelSpec
    beta: np.ndarray
    alpha: typing.Optional[np.ndarray]
    sse: np.ndarray
    rank: int
    dof_resid: int
    m: int
    constraint: str = SumZero.key
    games_digest: str = ''
    alpha_variance: typing.Optional[typing.Union[float, np.ndarray]] = None
    unidentified: typing.Tuple[str, ...] = ()
    components: typing.Tuple[typing.Tuple[str, ...], ...] = ()
    diagnostics: dict = dataclasses.field(default_factory=dict)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def kind(self):
        # type: () -> ModelKind
        return self.spec.kind

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def teams(self):
        # type: () -> typing.Tuple[str, ...]
        return self.spec.teams

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def grid_len(self):
        # type: () -> int
        return self.beta.shape[1]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def regulation_length_s(self):
        # type: () -> int
        return self.grid_len - 1

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def theta(self):
        # type: () -> np.ndarray
        """
        All parameters stacked in design column order, p x (T+1).
        """
        if self.alpha is None:
            return self.beta
        return np.vstack([self.beta, np.atleast_2d(self.alpha)])

    # ------------------------------------------------------------------------------------------------------------------
    def team_curve(self, team):
        # type: (str) -> np.ndarray
        return self.beta[self.spec.index_of(team)]

    # ------------------------------------------------------------------------------------------------------------------
    def alpha_curve(self, team=None):
        # type: (typing.Optional[str]) -> np.ndarray
        """
        The home advantage curve; for IndividualHCA fits, the one of the given team.
        """
        if self.alpha is None:
            raise ModelKindError('A %s fit has no home advantage' % self.kind.name)

        if self.kind is ModelKind.CONSTANT_HCA:
            return self.alpha

        if team is None:
            raise ModelKindError('IndividualHCA fits have one home advantage per team; name a team')

        return self.alpha[self.spec.index_of(team)]

    # ------------------------------------------------------------------------------------------------------------------
    def alpha_variance_of(self, team=None):
        # type: (typing.Optional[str]) -> float
        if self.alpha_variance is None:
            raise ModelKindError('A %s fit has no home advantage' % self.kind.name)
        if self.kind is ModelKind.CONSTANT_HCA:
            return float(self.alpha_variance)
        if team is None:
            raise ModelKindError('IndividualHCA fits have one home advantage per team; name a team')
        return float(self.alpha_variance[self.spec.index_of(team)])


# ----------------------------------------------------------------------------------------------------------------------
def _active_components(report, X):
    # type: (...) -> typing.List[typing.Tuple[str, ...]]
    counts = X.column_counts()[:X.spec.n_teams]
    return [c for c in report.components if any(counts[X.spec.index_of(team)] > 0 for team in c)]


# ----------------------------------------------------------------------------------------------------------------------
def fit(X, D, constraint=None, per_component=False, block_size=DEFAULT_BLOCK_SIZE, threads=None, factorization=None):
    # type: (DesignMatrix, np.ndarray, Constraint, bool, int, int, Factorization) -> RatingSet
    """
    Least squares at every second against one factorization of X.

    :param X: the design matrix.
    :type X: DesignMatrix

    :param D: m x (T+1) stacked differential tracks, rows in the order of X.
    :type D: np.ndarray

    :param constraint: how the common level of the ratings is fixed; SumZero by default.
    :type constraint: Constraint

    :param per_component: accept a disconnected schedule. Ratings then sum to zero within every connected component
                          and only compare within a component.
    :type per_component: bool

    :param block_size: time columns per solve block.
    :type block_size: int

    :param threads: solver threads; defaults to the CPU count.
    :type threads: int

    :param factorization: a factorization of X to reuse.
    :type factorization: Factorization

    :return: the fit.
    :rtype: RatingSet
    """
    constraint = constraint if constraint is not None else SumZero()

    D = np.asarray(D, dtype=np.float64)
    if D.ndim != 2 or D.shape[0] != X.m:
        raise DimensionMismatchError('Response has shape %s but the design matrix has %s rows' % (D.shape, X.m))
    if D.shape[1] < 2:
        raise DimensionMismatchError('Response needs at least two time columns, got %s' % D.shape[1])

    spec = X.spec
    n = spec.n_teams

    factorization = factorization or Factorization(X)
    if factorization.shape != X.shape:
        raise DimensionMismatchError('Factorization of a %s matrix does not fit X %s' % (factorization.shape, X.shape))

    report = check_connectivity(X)
    components = _active_components(report, X)

    # -- every connected component contributes exactly one null direction; anything more is unidentified
    if factorization.nullity > len(components):
        raise IdentifiabilityError(
            'The design has %s null directions but only %s team components; some home advantages are not '
            'identified by the schedule' % (factorization.nullity, len(components)),
            nullity=factorization.nullity,
            components=len(components),
        )

    if len(components) > 1:
        if not per_component:
            raise IdentifiabilityError(
                'Team graph has %s connected components; refit with per_component to rate teams within each' % (
                    len(components),
                ),
                components=len(components),
            )
        if not isinstance(constraint, SumZero):
            raise IdentifiabilityError(
                'Constraint %s fixes one level for all teams, but %s components need one each' % (
                    constraint.describe(), len(components),
                ),
            )
        logger.warning('Fitting %s components separately' % len(components))

    theta = np.zeros((spec.n_params, D.shape[1]), dtype=np.float64)
    theta[factorization.active] = factorization.solve(D, block_size=block_size, threads=threads)

    sse = ((X.to_sparse() @ theta - D) ** 2).sum(axis=0)

    beta = theta[:n]

    # -- the minimum-norm solution already sums to zero per component; recentering strips rounding noise
    for component in components:
        index = [spec.index_of(team) for team in component]
        beta[index] -= beta[index].mean(axis=0)

    beta = beta + constraint.shift(spec, beta)

    alpha = None
    alpha_variance = None
    variance = np.zeros(spec.n_params)
    variance[factorization.active] = factorization.inverse_gram_diagonal()

    if spec.kind is ModelKind.CONSTANT_HCA:
        alpha = theta[n].copy()
        alpha_variance = float(variance[n])
    elif spec.kind is ModelKind.INDIVIDUAL_HCA:
        alpha = theta[n:].copy()
        alpha_variance = variance[n:].copy()

    labels = spec.parameter_labels()
    inactive = np.setdiff1d(np.arange(spec.n_params), factorization.active)
    unidentified = tuple(labels[i] for i in inactive)
    if unidentified:
        logger.warning('Parameters without any game are pinned to zero: %s' % ', '.join(unidentified))

    result = RatingSet(
        spec=spec,
        beta=beta,
        alpha=alpha,
        sse=sse,
        rank=factorization.rank,
        dof_resid=X.m - factorization.rank,
        m=X.m,
        constraint=constraint.describe(),
        games_digest=digest_strings(X.row_game),
        alpha_variance=alpha_variance,
        unidentified=unidentified,
        components=tuple(components),
        diagnostics=dict(factorization.counters(), block_size=int(block_size)),
    )

    logger.info(
        'Fitted %s: %s games, %s teams, rank %s, dof %s, total SSE %.6g' % (
            spec.kind.name, X.m, n, result.rank, result.dof_resid, float(sse.sum()),
        )
    )
    return result


# ----------------------------------------------------------------------------------------------------------------------
def residuals(X, ratings, D):
    # type: (DesignMatrix, RatingSet, np.ndarray) -> np.ndarray
    """
    r[k, t] = (X theta(t) - d(t))[k].
    """
    D = np.asarray(D, dtype=np.float64)
    theta = ratings.theta

    if X.spec != ratings.spec:
        raise DimensionMismatchError('The fit was not made with this design matrix')
    if D.shape != (X.m, theta.shape[1]):
        raise DimensionMismatchError('Response has shape %s, expected %s' % (D.shape, (X.m, theta.shape[1])))

    return X.to_sparse() @ theta - D
