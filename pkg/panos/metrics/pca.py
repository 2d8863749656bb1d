# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument


def pca_report(matrix):
    """Explained variance fractions of a (steps, d) matrix.

    Columns are centered, the covariance eigen-decomposed and the
    eigenvalues normalized to sum to 1, largest first. Negative round-off
    eigenvalues are reported as 0.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise InvalidArgument('expected a 2-D matrix')
    rows, columns = matrix.shape
    if rows < columns + 1:
        raise InvalidArgument('need at least %s rows, got %s' % (
            columns + 1, rows))
    if not np.isfinite(matrix).all():
        raise InvalidArgument('matrix must be finite')
    centered = matrix - matrix.mean(axis=0)
    covariance = centered.T @ centered / (rows - 1)
    eigenvalues = np.linalg.eigvalsh(covariance)[::-1]
    eigenvalues = np.clip(eigenvalues, 0.0, None)
    total = eigenvalues.sum()
    if total == 0:
        raise InvalidArgument('matrix has no variance')
    return eigenvalues / total
