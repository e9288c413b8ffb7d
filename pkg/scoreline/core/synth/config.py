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
import json
import typing
import dataclasses

from ..design import ModelKind
from ..constants import DEFAULT_REGULATION_S
from ..errors import InfeasibleSynthConfigError

BETA_FAMILIES = ('constant', 'linear', 'spline')
NOISE_MODELS = ('none', 'iid', 'random_walk')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class SynthConfig(object):
    """
    Recipe for a synthetic season.

    beta_scale is the standard deviation of team strengths; alpha is the home advantage in points, with alpha_spread
    spreading per-team advantages for IndividualHCA seasons. With quantize set, true curves are rounded to integers
    (keeping the sum-zero constraint) so noise-free differentials are exact integers and fits recover the truth
    exactly.
    """

    n_teams: int = 10
    games_per_team: int = 6
    neutral_fraction: float = 0.0
    kind: ModelKind = ModelKind.CONSTANT_HCA
    beta_family: str = 'constant'
    beta_scale: float = 8.0
    alpha: float = 3.0
    alpha_spread: float = 0.0
    noise: str = 'none'
    sigma: float = 0.0
    seed: int = 0
    regulation_s: int = DEFAULT_REGULATION_S
    quantize: bool = True
    max_attempts: int = 100

    # ------------------------------------------------------------------------------------------------------------------
    def __post_init__(self):
        try:
            object.__setattr__(self, 'kind', ModelKind.from_value(self.kind))
        except Exception as e:
            raise InfeasibleSynthConfigError(str(e))

        if int(self.n_teams) < 2:
            raise InfeasibleSynthConfigError('A season needs at least two teams, got %s' % self.n_teams)
        if int(self.games_per_team) < 1:
            raise InfeasibleSynthConfigError('games_per_team must be at least 1, got %s' % self.games_per_team)
        if not 0.0 <= float(self.neutral_fraction) <= 1.0:
            raise InfeasibleSynthConfigError('neutral_fraction must lie in [0, 1], got %s' % self.neutral_fraction)
        if self.beta_family not in BETA_FAMILIES:
            raise InfeasibleSynthConfigError(
                'Unknown beta family %r, expected one of %s' % (self.beta_family, ', '.join(BETA_FAMILIES))
            )
        if self.noise not in NOISE_MODELS:
            raise InfeasibleSynthConfigError(
                'Unknown noise model %r, expected one of %s' % (self.noise, ', '.join(NOISE_MODELS))
            )
        if float(self.sigma) < 0 or float(self.beta_scale) < 0 or float(self.alpha_spread) < 0:
            raise InfeasibleSynthConfigError('sigma, beta_scale and alpha_spread must be non-negative')
        if int(self.regulation_s) < 1:
            raise InfeasibleSynthConfigError('regulation_s must be positive, got %s' % self.regulation_s)
        if int(self.max_attempts) < 1:
            raise InfeasibleSynthConfigError('max_attempts must be at least 1')
        if not 0 <= int(self.seed) < 2 ** 64:
            raise InfeasibleSynthConfigError('seed must be a 64-bit unsigned integer, got %s' % self.seed)

    # ------------------------------------------------------------------------------------------------------------------
    def replace(self, **changes):
        # type: (dict) -> SynthConfig
        return dataclasses.replace(self, **changes)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        result = dataclasses.asdict(self)
        result['kind'] = int(self.kind)
        return result

    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, data):
        # type: (dict) -> SynthConfig
        names = set(f.name for f in dataclasses.fields(cls))
        unknown = sorted(set(data) - names)
        if unknown:
            raise InfeasibleSynthConfigError('Unknown synth settings: %s' % ', '.join(unknown))
        return cls(**data)


# ----------------------------------------------------------------------------------------------------------------------
def load_synth_config(path):
    # type: (str) -> SynthConfig
    """
    Read a SynthConfig from a JSON object.
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            data = json.load(handle)
    except (OSError, ValueError) as e:
        raise InfeasibleSynthConfigError('Could not read synth config %s: %s' % (path, e))

    if not isinstance(data, dict):
        raise InfeasibleSynthConfigError('Synth config %s must be a JSON object' % path)

    return SynthConfig.from_dict(data)
