"""linalg.py

This file handles exact linear algebra over Q(ζ_m). Matrices are numpy
arrays of dtype=object holding Cyclotomic entries of one order m.
"""

# Get packages.
import logging
from typing import List, Optional, Tuple
import numpy as np

# User defined modules.
from enriched_workbench.exact_scalars import Cyclotomic, one, zero
from enriched_workbench.errors import ShapeMismatch

# Set up logging.
logger = logging.getLogger(__name__)


def zeros(rows: int, cols: int, m: int) -> np.ndarray:
    """A rows x cols zero matrix over Q(ζ_m)."""
    return np.full((rows, cols), zero(m), dtype=object)


def identity(n: int, m: int) -> np.ndarray:
    """The n x n identity matrix over Q(ζ_m)."""
    matrix = zeros(n, n, m)
    for i in range(n):
        matrix[i, i] = one(m)
    return matrix


def as_matrix(rows, m: int) -> np.ndarray:
    """Convert nested lists of ints, Fractions or Cyclotomics to a matrix."""
    array = np.array(rows, dtype=object)
    if array.ndim != 2:
        array = array.reshape(len(rows), -1)
    out = np.empty(array.shape, dtype=object)
    for index, value in np.ndenumerate(array):
        out[index] = (value if isinstance(value, Cyclotomic)
                      else Cyclotomic.rational(m, value))
    return out


def matmul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Exact product a @ b, including empty inner dimensions."""
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(
            f"Cannot multiply {a.shape} by {b.shape}.")
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1], m)
    return a.dot(b)


def kron(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Kronecker product with row index i_a * rows(b) + i_b."""
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows == 0 or cols == 0:
        return zeros(rows, cols, m)
    outer = np.multiply.outer(a, b)
    return outer.transpose(0, 2, 1, 3).reshape(rows, cols)


def scale(matrix: np.ndarray, factor) -> np.ndarray:
    """Multiply every entry by a scalar."""
    out = np.empty(matrix.shape, dtype=object)
    for index, value in np.ndenumerate(matrix):
        out[index] = value * factor
    return out


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    """Exact entrywise equality (shapes must agree)."""
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def is_zero(matrix: np.ndarray) -> bool:
    """True when every entry is zero."""
    return all(not value for value in matrix.flat)


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form by exact Gaussian elimination.

    Args:
        matrix (np.ndarray): The matrix to reduce.

    Returns:
        tuple: The reduced matrix and the list of pivot columns.
    """
    work = matrix.copy()
    rows, cols = work.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        # Find a pivot.
        pivot = next((r for r in range(row, rows) if work[r, col]), None)
        if pivot is None:
            continue
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        # Normalise the pivot row.
        inv = work[row, col].inverse()
        work[row] = [value * inv for value in work[row]]
        # Clear the column.
        for r in range(rows):
            if r != row and work[r, col]:
                factor = work[r, col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    return work, pivots


def rank(matrix: np.ndarray) -> int:
    """Exact rank."""
    if matrix.size == 0:
        return 0
    return len(rref(matrix)[1])


def solve(a: np.ndarray, b: np.ndarray, m: int) -> Optional[np.ndarray]:
    """
    Solve a @ x = b exactly.

    Args:
        a (np.ndarray): An r x n coefficient matrix.
        b (np.ndarray): An r x k right-hand side.
        m (int): The cyclotomic order.

    Returns:
        np.ndarray or None: One solution (free variables zero), or None if
        the system is inconsistent.
    """
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ShapeMismatch(f"Right-hand side {b.shape} for matrix {a.shape}.")
    width = b.shape[1]
    if rows == 0:
        return zeros(cols, width, m)
    augmented = np.concatenate([a, b], axis=1) if cols else b.copy()
    reduced, pivots = rref(augmented)
    if any(p >= cols for p in pivots):
        return None
    solution = zeros(cols, width, m)
    for r, p in enumerate(pivots):
        solution[p] = reduced[r, cols:]
    return solution


def inverse(matrix: np.ndarray, m: int) -> Optional[np.ndarray]:
    """The exact inverse of a square matrix, or None if singular."""
    rows, cols = matrix.shape
    if rows != cols:
        return None
    if rows == 0:
        return zeros(0, 0, m)
    return solve(matrix, identity(rows, m), m)


def nullspace(matrix: np.ndarray, m: int) -> List[np.ndarray]:
    """A basis of the right kernel, as column vectors."""
    rows, cols = matrix.shape
    if rows == 0:
        basis = []
        for c in range(cols):
            vector = zeros(cols, 1, m)
            vector[c, 0] = one(m)
            basis.append(vector)
        return basis
    reduced, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vector = zeros(cols, 1, m)
        vector[f, 0] = one(m)
        for r, p in enumerate(pivots):
            vector[p, 0] = -reduced[r, f]
        basis.append(vector)
    return basis
