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
from scipy import sparse
from scipy.sparse import csgraph

from ..log import get_logger
from .model import DesignMatrix, ModelKind

logger = get_logger('design.connectivity')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ConnectivityReport(object):
    """
    Components of the team graph (teams as vertices, games as edges), ordered by their smallest team index.

    For IndividualHCA fits, `parameter_graph_connected` tells whether the graph on home strengths (beta_i + alpha_i)
    and road strengths (beta_j) is connected, which is what identifies every alpha_i up to the common shift.
    """

    components: typing.Tuple[typing.Tuple[str, ...], ...]
    labels: typing.Tuple[int, ...]
    parameter_graph_connected: typing.Optional[bool] = None

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def n_components(self):
        # type: () -> int
        return len(self.components)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def is_connected(self):
        # type: () -> bool
        return self.n_components == 1

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        return dict(
            is_connected=self.is_connected,
            n_components=self.n_components,
            components=[list(c) for c in self.components],
            parameter_graph_connected=self.parameter_graph_connected,
        )


# ----------------------------------------------------------------------------------------------------------------------
def _components(n_nodes, first, second):
    # type: (int, np.ndarray, np.ndarray) -> typing.Tuple[int, np.ndarray]
    graph = sparse.coo_matrix(
        (np.ones(len(first), dtype=np.int8), (first, second)),
        shape=(n_nodes, n_nodes),
    )
    return csgraph.connected_components(graph, directed=False)


# ----------------------------------------------------------------------------------------------------------------------
def _canonical_labels(labels):
    # type: (np.ndarray) -> np.ndarray
    """
    Relabel components in order of their first member, so labels do not depend on the graph library.
    """
    mapping = dict()
    for label in labels:
        if label not in mapping:
            mapping[label] = len(mapping)
    return np.array([mapping[label] for label in labels], dtype=np.int64)


# ----------------------------------------------------------------------------------------------------------------------
def parameter_graph_connected(X):
    # type: (DesignMatrix) -> bool
    """
    Each team i has a road node b_i and, if it hosts at least one game, a home node g_i = b_i + a_i. A game on team
    i's court links g_i with the visitor's b_j; a neutral game links b_i with b_j. Every alpha_i is identified (up to
    the common shift of all ratings) exactly when this graph is connected.
    """
    n = X.spec.n_teams
    home, away = X.team_pairs()
    hosted = X.home_court_rows()

    # -- home node of team i is n + i
    first = np.where(hosted, home + n, home)
    n_hosts = np.unique(home[hosted])

    count, labels = _components(2 * n, first, away)

    # -- home nodes of teams that never host are not parameters
    used = np.zeros(2 * n, dtype=bool)
    used[:n] = True
    used[n + n_hosts] = True

    return len(np.unique(labels[used])) == 1


# ----------------------------------------------------------------------------------------------------------------------
def check_connectivity(X):
    # type: (DesignMatrix) -> ConnectivityReport
    """
    Find the connected components of the team graph.

    :param X: the design matrix.
    :type X: DesignMatrix

    :return: the connectivity report.
    :rtype: ConnectivityReport
    """
    n = X.spec.n_teams
    home, away = X.team_pairs()

    _, labels = _components(n, home, away)
    labels = _canonical_labels(labels)

    components = tuple(
        tuple(X.spec.teams[i] for i in np.flatnonzero(labels == label))
        for label in range(int(labels.max()) + 1)
    )

    parameter_connected = None
    if X.spec.kind is ModelKind.INDIVIDUAL_HCA:
        parameter_connected = parameter_graph_connected(X)

    report = ConnectivityReport(components, tuple(int(v) for v in labels), parameter_connected)

    if not report.is_connected:
        logger.warning('Team graph has %s connected components' % report.n_components)
    if parameter_connected is False:
        logger.warning('Home/road parameter graph is not connected; some home advantages are not identified')

    return report
