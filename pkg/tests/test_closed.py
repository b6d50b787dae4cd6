"""test_closed.py - Test cases for duals and internal homs."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.closed import (
    DualityData, completion_internal_hom, frobenius_closed_structure,
    require_closed, self_enriched_duals, theta_is_invertible,
    trivial_closed_structure, verify_closed)
from enriched_workbench.completion import CompletionObject, window_from_pairs
from enriched_workbench.errors import ClosednessDataMissing
from enriched_workbench.vmonoidal import monoidal_complete, trivial_monoidal

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def duals(vhat_monoidal):
    """The duals of V inside V̂."""
    return self_enriched_duals(vhat_monoidal)


#####################################################################
# Test functions.
def test_self_enriched_duals(duals, vhat_monoidal):
    """coev and ev of V satisfy the zigzags in V̂^V."""
    assert duals.verify().passed
    for u in vhat_monoidal.objects:
        assert duals.dual[u] == u


def test_missing_duals(vhat_monoidal):
    """Every object needs a dual, coev and ev."""
    with pytest.raises(ClosednessDataMissing):
        DualityData(vhat_monoidal, {}, {}, {})


def test_frobenius_closed(duals):
    """[a, c] = a*c is a closed structure with invertible θ."""
    closed = frobenius_closed_structure(duals)
    assert verify_closed(closed).passed
    assert theta_is_invertible(closed).passed


def test_trivial_closed(triv):
    """[*, *] = * on triv."""
    closed = trivial_closed_structure(trivial_monoidal(triv))
    assert verify_closed(closed).passed


def test_require_closed():
    """Constructions refuse to run without closedness data."""
    with pytest.raises(ClosednessDataMissing):
        require_closed(None)


def test_completion_internal_hom(triv, svec):
    """[*◀Π, *◀1] = *◀Π in the completion of triv."""
    M = trivial_monoidal(triv)
    d0, d1 = svec.simples()
    Mbar = monoidal_complete(M, window_from_pairs([("*", d1)]))
    x, z = CompletionObject("*", d1), CompletionObject("*", d0)
    obj, bar, report = completion_internal_hom(
        Mbar, trivial_closed_structure(M), x, z)
    assert obj == CompletionObject("*", d1)
    assert report.passed
    assert theta_is_invertible(bar).passed


if __name__ == "__main__":
    pytest.main()
