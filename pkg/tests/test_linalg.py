"""test_linalg.py - Test cases for exact linear algebra."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench import linalg
from enriched_workbench.errors import ShapeMismatch
from enriched_workbench.exact_scalars import root_of_unity

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def singular():
    """A rank-one 2x2 matrix over Q(ζ_4)."""
    return linalg.as_matrix([[1, 2], [2, 4]], 4)


@pytest.fixture
def rotation():
    """[[0, -i], [i, 0]] over Q(ζ_4)."""
    i = root_of_unity(4, 1)
    return linalg.as_matrix([[0, -i], [i, 0]], 4)


#####################################################################
# Test functions.
def test_rank(singular, rotation):
    """Exact ranks."""
    assert linalg.rank(singular) == 1
    assert linalg.rank(rotation) == 2
    assert linalg.rank(linalg.zeros(0, 3, 4)) == 0


def test_inverse(rotation, singular):
    """The rotation squares to the identity; singular input gives None."""
    inv = linalg.inverse(rotation, 4)
    assert linalg.equal(inv, rotation)
    assert linalg.equal(linalg.matmul(rotation, inv, 4),
                        linalg.identity(2, 4))
    assert linalg.inverse(singular, 4) is None


def test_solve(singular):
    """Consistent systems are solved, inconsistent ones return None."""
    b = linalg.as_matrix([[3], [6]], 4)
    x = linalg.solve(singular, b, 4)
    assert linalg.equal(linalg.matmul(singular, x, 4), b)
    assert linalg.solve(singular, linalg.as_matrix([[1], [0]], 4), 4) is None


def test_nullspace(singular):
    """The kernel of [[1,2],[2,4]] is spanned by (-2, 1)."""
    basis = linalg.nullspace(singular, 4)
    assert len(basis) == 1
    assert linalg.is_zero(linalg.matmul(singular, basis[0], 4))


def test_kron_ordering():
    """Row index i_a * rows(b) + i_b."""
    a = linalg.as_matrix([[1], [2]], 2)
    b = linalg.as_matrix([[1], [10]], 2)
    assert [v.to_fraction() for v in linalg.kron(a, b, 2).flat] == \
        [1, 10, 2, 20]


def test_empty_products():
    """Empty inner dimensions give zero matrices."""
    product = linalg.matmul(linalg.zeros(2, 0, 3), linalg.zeros(0, 3, 3), 3)
    assert product.shape == (2, 3)
    assert linalg.is_zero(product)


def test_shape_mismatch():
    """Incompatible shapes are refused."""
    with pytest.raises(ShapeMismatch):
        linalg.matmul(linalg.zeros(2, 2, 2), linalg.zeros(3, 1, 2), 2)


if __name__ == "__main__":
    pytest.main()
