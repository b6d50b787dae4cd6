"""test_completion.py - Test cases for the completion C̄ and the
conditions under which C is already complete."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.completion import (
    CompletionObject, complete, completion_report, double_completion_check,
    equivalence_conditions, inclusion_functor, lift_functor, rigidity_check,
    unit_window, verify_hom_formula, verify_inclusion, verify_lift,
    window_from_pairs)
from enriched_workbench.config import WorkbenchConfig, set_config
from enriched_workbench.enriched_core import (
    identity_functor, verify_vcategory)
from enriched_workbench.errors import CoverageGap
from enriched_workbench.module_correspondence import (
    canonical_tensoring, superalgebra_tensoring)

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def triv_bar(triv, svec):
    """The completion of triv on *◀1 and *◀Π."""
    return complete(triv, window_from_pairs(
        ("*", u) for u in svec.simples()))


#####################################################################
# Test functions.
def test_completion_objects(triv_bar, svec):
    """Objects are labelled a◀u and homs follow u*⊗C(a -> b)⊗v."""
    x, y = triv_bar.objects
    d0, d1 = svec.simples()
    assert [str(z) for z in triv_bar.objects] == ["*◀d0", "*◀d1"]
    assert triv_bar.hom(x, x) == d0
    assert triv_bar.hom(x, y) == d1
    assert triv_bar.hom(y, x) == d1
    assert triv_bar.hom(y, y) == d0


def test_completion_is_vcategory(triv_bar):
    """C̄ satisfies the V-category axioms and the hom formula."""
    assert verify_vcategory(triv_bar).passed
    assert verify_hom_formula(triv_bar).passed


def test_completion_of_superalgebra(cliff, svec):
    """C̄ of Cliff on *◀1, *◀Π and *◀(1+Π)."""
    window = window_from_pairs(
        ("*", u) for u in svec.simples() + [svec.word([0, 1])])
    Cbar = complete(cliff, window)
    assert len(Cbar.objects) == 3
    assert verify_vcategory(Cbar).passed


def test_window_closure_over_cap(triv, svec):
    """Closing under 1+Π never stops, so the cap is a coverage gap."""
    weight = svec.word([0, 1])
    with pytest.raises(CoverageGap) as error:
        complete(triv, unit_window(triv), [weight], dim_cap=4)
    assert [len(x.split("+")) for x in error.value.missing] == [8]


def test_window_closure_never_truncates(triv, svec):
    """A closure one step over the cap is rejected, not cut short."""
    with pytest.raises(CoverageGap) as error:
        complete(triv, unit_window(triv), [svec.word([0, 1])], dim_cap=1)
    assert error.value.missing == ["*◀d0+d1"]


def test_window_closure_uses_config(triv, svec):
    """Without an explicit cap the configured one applies."""
    set_config(WorkbenchConfig(dim_cap=2))
    with pytest.raises(CoverageGap):
        complete(triv, unit_window(triv), [svec.word([0, 1])])
    set_config(WorkbenchConfig(dim_cap=1))
    Cbar = complete(triv, unit_window(triv), [svec.simples()[1]])
    assert [x.weight.dim for x in Cbar.objects] == [1, 1]


def test_window_closure_simple_weights(triv, svec):
    """Closing under Π stops once Π⊗Π = 1 comes back."""
    Cbar = complete(triv, unit_window(triv), [svec.simples()[1]])
    assert [str(x) for x in Cbar.objects] == ["*◀d0", "*◀d1"]


def test_requested_weight_above_cap(triv, svec):
    """A requested object above the cap is a coverage gap."""
    window = [CompletionObject("*", svec.word([0, 1]))]
    with pytest.raises(CoverageGap):
        complete(triv, window, dim_cap=1)


def test_unknown_base_object(triv, svec):
    """Every a in a◀u must be an object of C."""
    with pytest.raises(CoverageGap):
        complete(triv, [CompletionObject("nowhere", svec.unit)])


def test_completion_object_validation(svec):
    """Weights are nonzero objects of V."""
    with pytest.raises(ValueError):
        CompletionObject("*", svec.zero_object)
    with pytest.raises(ValueError):
        CompletionObject("*", (0,))


def test_inclusion(triv_bar, triv):
    """I: C -> C̄ is a fully faithful V-functor."""
    assert verify_inclusion(inclusion_functor(triv, triv_bar)).passed


def test_inclusion_needs_unit_window(triv, svec):
    """Without *◀1 the inclusion is not defined."""
    Cbar = complete(triv, [CompletionObject("*", svec.simples()[1])])
    with pytest.raises(CoverageGap):
        inclusion_functor(triv, Cbar)


def test_completion_report(triv, triv_bar, svec):
    """The post-completion checks pass with the simple weights."""
    report = completion_report(triv, triv_bar, svec.simples())
    assert report.passed


def test_lift_of_identity(vhat, svec):
    """lift(1_V̂) is tensored with σ inverse to ρ."""
    T = canonical_tensoring(vhat, svec.simples())
    Cbar = complete(vhat, window_from_pairs(T.scope))
    Fbar, sigma = lift_functor(identity_functor(vhat), T, Cbar)
    assert verify_lift(Fbar, sigma, T, svec.simples()).passed


def test_vhat_is_complete(vhat, svec):
    """V̂ satisfies all four conditions."""
    report = equivalence_conditions(
        vhat, canonical_tensoring(vhat, svec.simples()))
    assert report.passed
    assert all(report.data["conditions"].values())


def test_clifford_is_complete(cliff):
    """*◁Π = * is a V-tensor when e is invertible."""
    report = equivalence_conditions(cliff, superalgebra_tensoring(cliff))
    assert report.passed
    assert set(report.data["conditions"].values()) == {True}


def test_exterior_is_not_complete(ext):
    """With e·e = 0 all four conditions fail together."""
    report = equivalence_conditions(ext, superalgebra_tensoring(ext))
    assert set(report.data["conditions"].values()) == {False}
    laws = {c.law: c.status for c in report.checks}
    assert laws["agreement"] == "pass"
    assert laws["complete"] == "fail"


@pytest.mark.parametrize("base_name", ["svec", "z4"])
def test_rigidity(request, base_name):
    """Duals rebuilt from laxitors agree with the base's own."""
    base = request.getfixturevalue(base_name)
    assert rigidity_check(base, base.simples()).passed


def test_rigidity_non_simple(svec):
    """The same holds for 1+Π."""
    assert rigidity_check(svec, [svec.word([0, 1])]).passed


def test_double_completion(triv):
    """C̄̄ is equivalent to C̄."""
    assert double_completion_check(triv, unit_window(triv)).passed


if __name__ == "__main__":
    pytest.main()
