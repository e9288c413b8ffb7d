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
import time
import typing
import concurrent.futures

import numpy as np
from scipy import linalg

from ..log import get_logger
from ..design import DesignMatrix
from ..errors import DimensionMismatchError
from ..constants import DEFAULT_BLOCK_SIZE, RANK_TOLERANCE

logger = get_logger('solver.factorization')


# ----------------------------------------------------------------------------------------------------------------------
class Factorization(object):
    """
    Thin SVD of the design matrix with its zero columns removed, X_a = U S V^T, computed once.

    X does not change with time, so every second shares this factorization. The minimum-norm least-squares solution
    for a block of right-hand sides is V S^-1 U^T D, restricted to the singular values above the rank tolerance.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, X, tolerance=RANK_TOLERANCE):
        # type: (DesignMatrix, float) -> None
        self.shape = X.shape
        self.tolerance = tolerance

        self.active = np.flatnonzero(X.column_counts() > 0)

        started = time.perf_counter()

        dense = X.to_dense()[:, self.active]
        u, s, vt = linalg.svd(dense, full_matrices=False, lapack_driver='gesdd')

        largest = s[0] if s.size else 0.0
        self.rank = int(np.count_nonzero(s > tolerance * largest)) if largest > 0 else 0
        self.singular_values = s

        k = self.rank
        self.projector = np.ascontiguousarray(u[:, :k].T)
        self.back = np.ascontiguousarray(vt[:k].T / s[:k])
        self.null_basis = np.ascontiguousarray(vt[k:].T)

        self.factorization_s = time.perf_counter() - started
        self.solve_s = 0.0
        self.n_factorizations = 1
        self.n_solved_columns = 0

        logger.debug(
            'Factorized %s x %s design (%s active columns), rank %s in %.4f s' % (
                self.shape[0], self.shape[1], len(self.active), self.rank, self.factorization_s,
            )
        )

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def n_active(self):
        # type: () -> int
        return len(self.active)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def nullity(self):
        # type: () -> int
        return self.n_active - self.rank

    # ------------------------------------------------------------------------------------------------------------------
    def _solve_block(self, D, start, stop):
        return start, self.back @ (self.projector @ D[:, start:stop])

    # ------------------------------------------------------------------------------------------------------------------
    def solve(self, D, block_size=DEFAULT_BLOCK_SIZE, threads=None):
        # type: (np.ndarray, int, typing.Optional[int]) -> np.ndarray
        """
        Minimum-norm solutions for every column of D.

        Columns are cut into fixed blocks independent of the thread count, so the result does not depend on how many
        threads ran.

        :param D: m x (T+1) stacked differentials.
        :type D: np.ndarray

        :param block_size: number of time columns per block.
        :type block_size: int

        :param threads: worker threads; defaults to the machine's CPU count.
        :type threads: int

        :return: active parameters x (T+1).
        :rtype: np.ndarray
        """
        D = np.asarray(D, dtype=np.float64)
        if D.ndim != 2 or D.shape[0] != self.shape[0]:
            raise DimensionMismatchError(
                'Response has shape %s, the design matrix has %s rows' % (D.shape, self.shape[0])
            )

        block_size = max(int(block_size), 1)
        threads = max(int(threads or os.cpu_count() or 1), 1)

        started = time.perf_counter()

        result = np.empty((self.n_active, D.shape[1]), dtype=np.float64)
        bounds = [(start, min(start + block_size, D.shape[1])) for start in range(0, D.shape[1], block_size)]

        if threads == 1 or len(bounds) == 1:
            for start, stop in bounds:
                result[:, start:stop] = self._solve_block(D, start, stop)[1]

        else:
            with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
                futures = [executor.submit(self._solve_block, D, start, stop) for start, stop in bounds]
                for future in futures:
                    start, block = future.result()
                    result[:, start:start + block.shape[1]] = block

        self.solve_s += time.perf_counter() - started
        self.n_solved_columns += D.shape[1]

        logger.debug('Solved %s columns in %s blocks on %s threads' % (D.shape[1], len(bounds), threads))
        return result

    # ------------------------------------------------------------------------------------------------------------------
    def inverse_gram_diagonal(self):
        # type: () -> np.ndarray
        """
        Diagonal of the pseudo-inverse of X_a^T X_a, one entry per active column. For any column orthogonal to the
        null space this is the variance factor of its estimate.
        """
        return (self.back ** 2).sum(axis=1)

    # ------------------------------------------------------------------------------------------------------------------
    def counters(self):
        # type: () -> dict
        return dict(
            factorization_s=self.factorization_s,
            solve_s=self.solve_s,
            n_factorizations=self.n_factorizations,
            n_solved_columns=self.n_solved_columns,
        )
