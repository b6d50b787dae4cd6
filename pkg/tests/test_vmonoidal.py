"""test_vmonoidal.py - Test cases for V-monoidal categories, their
completions and monoidal functors."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.completion import window_from_pairs
from enriched_workbench.errors import CoverageGap, ShapeMismatch
from enriched_workbench.vmonoidal import (
    identity_monoidal_functor, monoidal_complete, monoidal_inclusion,
    monoidal_report, self_enriched_monoidal, swap_without_scalars,
    trivial_monoidal, verify_vmonoidal, verify_vmonoidal_functor)

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def triv_monoidal(triv):
    """triv with * as the unit."""
    return trivial_monoidal(triv)


@pytest.fixture
def triv_monoidal_bar(triv_monoidal, svec):
    """The monoidal completion of triv on *◀Π."""
    return monoidal_complete(triv_monoidal,
                             window_from_pairs([("*", svec.simples()[1])]))


#####################################################################
# Test functions.
def test_self_enriched_monoidal(vhat_monoidal):
    """V̂ with β^{-1} in its tensor is V-monoidal."""
    assert len(vhat_monoidal.objects) == 2
    assert monoidal_report(vhat_monoidal).passed


def test_sampled_check(vhat_monoidal):
    """A sample checks exactly that many 6-tuples."""
    report = verify_vmonoidal(vhat_monoidal, sample=5, seed=1)
    laws = [c.law for c in report.checks]
    assert laws.count("tensor_associativity") == 5
    assert laws.count("braided_interchange") == 5
    assert report.passed


def test_swap_without_signs_fails(vhat_monoidal, svec):
    """The plain swap breaks interchange because χ(Π, Π) = -1."""
    report = verify_vmonoidal(vhat_monoidal, braiding=lambda u, v:
                              swap_without_scalars(svec, u, v))
    failures = report.failures()
    assert failures
    assert {f.law for f in failures} == {"braided_interchange"}


def test_swap_agrees_on_even_objects(svec):
    """On 1⊗1 the swap and β coincide."""
    unit = svec.unit
    assert swap_without_scalars(svec, unit, unit) == svec.braiding(unit, unit)


def test_tensor_mutation_caught(vhat_monoidal, svec):
    """Doubling one tensor morphism breaks preservation of identities."""
    d1 = svec.simples()[1]
    key = (d1, d1, d1, d1)
    broken = vhat_monoidal.override(
        {key: vhat_monoidal.tensor_mor(*key).scaled(2)})
    report = verify_vmonoidal(broken)
    assert "identities" in {f.law for f in report.failures()}


def test_closure_cap(svec):
    """Closing 1+Π under ⊗ needs dimension 4."""
    with pytest.raises(CoverageGap):
        self_enriched_monoidal(svec, [svec.word([0, 1])], dim_cap=2)


def test_trivial_monoidal(triv_monoidal):
    """triv is V-monoidal with ** = *."""
    assert monoidal_report(triv_monoidal).passed


@pytest.mark.parametrize("name", ["vhat", "cliff"])
def test_trivial_monoidal_rejects(request, name):
    """Only one object with C(* -> *) = 1_V qualifies."""
    with pytest.raises(ShapeMismatch):
        trivial_monoidal(request.getfixturevalue(name))


def test_monoidal_completion(triv_monoidal_bar):
    """The completion contains *◀1 and is V-monoidal."""
    assert [str(x) for x in triv_monoidal_bar.objects] == ["*◀d0", "*◀d1"]
    assert monoidal_report(triv_monoidal_bar).passed


def test_monoidal_completion_products(triv_monoidal_bar):
    """(*◀Π)(*◀Π) = *◀1."""
    x, y = triv_monoidal_bar.objects
    assert triv_monoidal_bar.tensor_obj(y, y) == x
    assert triv_monoidal_bar.tensor_obj(x, y) == y


def test_monoidal_inclusion(triv_monoidal, triv_monoidal_bar):
    """I: C -> C̄ is V-monoidal with ν = j."""
    I = monoidal_inclusion(triv_monoidal, triv_monoidal_bar)
    assert verify_vmonoidal_functor(I).passed


def test_identity_monoidal_functor(vhat_monoidal):
    """1_V̂ with identity tensorators passes; a sign flip does not."""
    F = identity_monoidal_functor(vhat_monoidal)
    assert verify_vmonoidal_functor(F).passed
    d1 = vhat_monoidal.objects[1]
    broken = F.override({(d1, d1): F.nu(d1, d1).scaled(-1)})
    assert not verify_vmonoidal_functor(broken).passed


if __name__ == "__main__":
    pytest.main()
