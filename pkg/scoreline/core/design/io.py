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

from scipy import io

from ..log import get_logger
from .model import DesignMatrix

logger = get_logger('design.io')


# ----------------------------------------------------------------------------------------------------------------------
def write_matrix_market(X, path):
    # type: (DesignMatrix, str) -> str
    """
    Dump X in MatrixMarket coordinate format. Row and column order follow the game order and parameter labels.
    """
    path = os.path.abspath(path)
    comment = ' '.join(X.spec.parameter_labels())
    io.mmwrite(path, X.to_sparse().tocoo(), comment=comment, field='integer')

    # -- mmwrite appends the extension when it is missing
    if not os.path.exists(path) and os.path.exists(path + '.mtx'):
        path = path + '.mtx'

    logger.info('Wrote %s x %s design matrix to %s' % (X.m, X.spec.n_params, path))
    return path
