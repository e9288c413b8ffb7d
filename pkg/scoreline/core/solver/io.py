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

A fit on disk is a directory holding:

    beta.npy        n x (T+1) team ratings
    alpha.npy       home advantage curve(s), absent for Basic fits
    sse.npy         SSE per second
    ratings.json    model, teams, constraint, rank, dof and the other scalar fields
"""
import os
import json
import typing

import numpy as np

from ..log import get_logger
from .fit import RatingSet
from ..design import ModelKind, ModelSpec
from ..utils import dump_json, ensure_directory
from ..errors import ConfigError

logger = get_logger('solver.io')

BETA_FILE_NAME = 'beta.npy'
ALPHA_FILE_NAME = 'alpha.npy'
SSE_FILE_NAME = 'sse.npy'
SIDECAR_FILE_NAME = 'ratings.json'

# -- counters that vary between runs stay out of the sidecar
_STABLE_DIAGNOSTICS = ('n_factorizations', 'n_solved_columns', 'block_size')


# ----------------------------------------------------------------------------------------------------------------------
def ratings_sidecar(ratings):
    # type: (RatingSet) -> dict
    alpha_variance = ratings.alpha_variance
    if isinstance(alpha_variance, np.ndarray):
        alpha_variance = [float(v) for v in alpha_variance]

    return dict(
        kind=int(ratings.kind),
        model=ratings.kind.name.lower(),
        teams=list(ratings.teams),
        constraint=ratings.constraint,
        rank=int(ratings.rank),
        dof_resid=int(ratings.dof_resid),
        m=int(ratings.m),
        grid_len=int(ratings.grid_len),
        games_digest=ratings.games_digest,
        alpha_variance=alpha_variance,
        unidentified=list(ratings.unidentified),
        components=[list(c) for c in ratings.components],
        total_sse=float(ratings.sse.sum()),
        diagnostics={k: ratings.diagnostics[k] for k in _STABLE_DIAGNOSTICS if k in ratings.diagnostics},
    )


# ----------------------------------------------------------------------------------------------------------------------
def save_ratings(ratings, directory):
    # type: (RatingSet, str) -> typing.List[str]
    """
    Write a fit to a directory. Returns the written file paths.
    """
    ensure_directory(directory)

    written = list()

    def _save_array(name, array):
        path = os.path.join(directory, name)
        with open(path, 'wb') as handle:
            np.save(handle, np.ascontiguousarray(array, dtype=np.float64), allow_pickle=False)
        written.append(path)

    _save_array(BETA_FILE_NAME, ratings.beta)
    if ratings.alpha is not None:
        _save_array(ALPHA_FILE_NAME, ratings.alpha)
    _save_array(SSE_FILE_NAME, ratings.sse)

    path = os.path.join(directory, SIDECAR_FILE_NAME)
    with open(path, 'wb') as handle:
        handle.write(dump_json(ratings_sidecar(ratings)))
    written.append(path)

    logger.info('Saved %s fit to %s' % (ratings.kind.name, directory))
    return written


# ----------------------------------------------------------------------------------------------------------------------
def load_ratings(directory):
    # type: (str) -> RatingSet
    sidecar_path = os.path.join(directory, SIDECAR_FILE_NAME)

    try:
        with open(sidecar_path, 'rb') as handle:
            sidecar = json.loads(handle.read().decode('utf-8'))
    except (OSError, ValueError) as e:
        raise ConfigError('Could not read fit from %s: %s' % (directory, e), path=directory)

    spec = ModelSpec(ModelKind.from_value(sidecar['kind']), tuple(sidecar['teams']))

    def _load_array(name):
        with open(os.path.join(directory, name), 'rb') as handle:
            return np.load(handle, allow_pickle=False)

    try:
        beta = _load_array(BETA_FILE_NAME)
        alpha = _load_array(ALPHA_FILE_NAME) if spec.kind.has_alpha else None
        sse = _load_array(SSE_FILE_NAME)
    except OSError as e:
        raise ConfigError('Fit in %s is incomplete: %s' % (directory, e), path=directory)

    alpha_variance = sidecar.get('alpha_variance')
    if isinstance(alpha_variance, list):
        alpha_variance = np.array(alpha_variance, dtype=np.float64)

    return RatingSet(
        spec=spec,
        beta=beta,
        alpha=alpha,
        sse=sse,
        rank=int(sidecar['rank']),
        dof_resid=int(sidecar['dof_resid']),
        m=int(sidecar['m']),
        constraint=sidecar.get('constraint', ''),
        games_digest=sidecar.get('games_digest', ''),
        alpha_variance=alpha_variance,
        unidentified=tuple(sidecar.get('unidentified', ())),
        components=tuple(tuple(c) for c in sidecar.get('components', ())),
        diagnostics=dict(sidecar.get('diagnostics', {})),
    )
