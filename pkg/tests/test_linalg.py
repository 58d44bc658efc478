"""Tests for the numeric rank and kernel helpers."""
import numpy as np

from braidpy.utils.linalg import coefficient_matrix, kernel_dimension, numerical_rank


def test_numerical_rank():
    """Test rank detection with a relative threshold."""
    rank, singular = numerical_rank(np.eye(3))
    assert rank == 3
    assert singular == [1.0, 1.0, 1.0]
    outer = np.outer([1, 2, 3], [1, 1j])
    assert numerical_rank(outer)[0] == 1
    assert numerical_rank(np.diag([1.0, 1e-9]))[0] == 1
    assert numerical_rank(np.zeros((2, 2)))[0] == 0
    assert numerical_rank(np.zeros((0, 3))) == (0, [])


def test_kernel_dimension():
    """Test null space dimensions."""
    assert kernel_dimension(np.array([[1.0, 1.0]])) == 1
    assert kernel_dimension(np.eye(4)) == 0
    assert kernel_dimension(np.zeros((3, 2))) == 2
    assert kernel_dimension(np.array([[1.0, 0.0], [1e-12, 0.0]])) == 1


def test_coefficient_matrix():
    """Test stacking sparse columns."""
    matrix, keys = coefficient_matrix([{"b": 2.0}, {"a": 1.0, "b": -1.0}])
    assert keys == ["a", "b"]
    assert matrix.tolist() == [[0, 1], [2, -1]]
