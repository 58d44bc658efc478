"""Numeric rank and kernel helpers for the linear-algebraic checks."""
from typing import Dict, Hashable, List, Sequence, Tuple

import numpy as np
from scipy import linalg


def numerical_rank(matrix: np.ndarray, rtol: float = 1e-6) -> Tuple[int, List[float]]:
    """
    Rank by relative singular value threshold.

    Args:
        matrix: Dense matrix
        rtol: Singular values below rtol * largest are treated as zero

    Returns:
        Tuple of (rank, singular values in descending order)
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        return 0, []
    singular = linalg.svd(matrix, compute_uv=False)
    if not singular.size or singular[0] == 0:
        return 0, [float(s) for s in singular]
    rank = int(np.sum(singular > rtol * singular[0]))
    return rank, [float(s) for s in singular]


def kernel_dimension(matrix: np.ndarray, rtol: float = 1e-9) -> int:
    """Dimension of the null space of a (rows x unknowns) system."""
    matrix = np.asarray(matrix, dtype=complex)
    unknowns = matrix.shape[1]
    if matrix.shape[0] == 0 or not np.any(matrix):
        return unknowns
    return int(linalg.null_space(matrix, rcond=rtol).shape[1])


def coefficient_matrix(
    columns: Sequence[Dict[Hashable, complex]], sort_key=None
) -> Tuple[np.ndarray, List[Hashable]]:
    """
    Stack sparse coefficient vectors as the columns of a dense matrix.

    Args:
        columns: One {basis key: value} mapping per unknown
        sort_key: Optional ordering of the basis keys

    Returns:
        Tuple of (matrix, row keys)
    """
    keys = sorted({key for column in columns for key in column}, key=sort_key)
    index = {key: i for i, key in enumerate(keys)}
    matrix = np.zeros((len(keys), len(columns)), dtype=complex)
    for j, column in enumerate(columns):
        for key, value in column.items():
            matrix[index[key], j] += value
    return matrix, keys
