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
import scoreline
from scoreline.core import design
from scoreline.tests import ScorelineTestCase


# ----------------------------------------------------------------------------------------------------------------------
class TestConnectivity(ScorelineTestCase):

    # ------------------------------------------------------------------------------------------------------------------
    def test_connected_schedule(self):
        games = [
            self.make_game('g1', 'A', 'B', []),
            self.make_game('g2', 'B', 'C', []),
        ]
        report = scoreline.check_connectivity(scoreline.build_design(games, 1))

        assert report.is_connected
        assert report.components == (('A', 'B', 'C'),)
        assert report.parameter_graph_connected is None

    # ------------------------------------------------------------------------------------------------------------------
    def test_two_components(self):
        games = [
            self.make_game('g1', 'D', 'C', []),
            self.make_game('g2', 'A', 'B', []),
        ]
        report = scoreline.check_connectivity(scoreline.build_design(games, 2))

        assert report.n_components == 2
        assert report.components == (('A', 'B'), ('C', 'D'))
        assert report.labels == (0, 0, 1, 1)
        assert report.to_dict()['is_connected'] is False

    # ------------------------------------------------------------------------------------------------------------------
    def test_parameter_graph(self):
        # -- A hosts B twice: the home node of A and the road node of B are linked, but nothing reaches A's road node
        games = [
            self.make_game('g1', 'A', 'B', []),
            self.make_game('g2', 'A', 'B', []),
        ]
        X = scoreline.build_design(games, 3)

        assert scoreline.check_connectivity(X).is_connected
        assert design.parameter_graph_connected(X) is False

        # -- a return game only links B's home node with A's road node
        games.append(self.make_game('g3', 'B', 'A', []))
        X = scoreline.build_design(games, 3)
        assert design.parameter_graph_connected(X) is False

        games.append(self.make_game('g4', 'A', 'B', [], neutral=True))
        X = scoreline.build_design(games, 3)
        assert design.parameter_graph_connected(X) is True

    # ------------------------------------------------------------------------------------------------------------------
    def test_neutral_games_link_road_nodes(self):
        games = [
            self.make_game('g1', 'A', 'B', []),
            self.make_game('g2', 'A', 'B', [], neutral=True),
        ]
        X = scoreline.build_design(games, 3)

        assert design.parameter_graph_connected(X) is True
