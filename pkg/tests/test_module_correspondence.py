"""test_module_correspondence.py - Test cases for tensoring witnesses, the
induced modules, the reverse construction, laxitors and witness search."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.enriched_core import (
    identity_functor, self_enrichment, verify_vcategory, verify_vfunctor)
from enriched_workbench.errors import (
    CoverageGap, RepresentabilityFailure, ShapeMismatch)
from enriched_workbench.module_correspondence import (
    adjoint_data_from_vcat, canonical_tensoring, hom_adjunction_data,
    is_tensored_functor, laxitor_of_functor, lemma_unit_inverses,
    module_to_vcat, roundtrip_check, search_tensoring, strong_module_check,
    superalgebra_tensoring, tensor_functor, tensoring_from_tables,
    theta_kappa, unit_only_tensoring, vcat_to_module, verify_module)
from enriched_workbench.reports import PASS, UNDETERMINED

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def canonical(vhat, svec):
    """u◁v = u⊗v on the simples."""
    return canonical_tensoring(vhat, svec.simples())


@pytest.fixture
def broken(vhat, svec):
    """d0◁Π := d0 with the zero unit, which is not a tensor."""
    d0, d1 = svec.simples()
    eta = svec.zero_morphism(d1, vhat.hom(d0, d0))
    return tensoring_from_tables(vhat, [(d0, d1, d0, eta)], "broken")


#####################################################################
# Test functions.
def test_canonical_tensoring(canonical, vhat):
    """The canonical witnesses cover every pair and are representable."""
    assert len(canonical.scope) == len(vhat.objects) ** 2
    assert canonical.validate().passed


@pytest.mark.parametrize("name", ["triv", "vhat", "cliff", "ext"])
def test_unit_only_tensoring(request, name):
    """a◁1 = a is always a tensoring."""
    C = request.getfixturevalue(name)
    assert unit_only_tensoring(C).validate().passed


def test_broken_tensoring(broken, vhat, svec):
    """A zero unit fails representability and cannot be inverted."""
    d0, d1 = svec.simples()
    assert not broken.validate().passed
    with pytest.raises(RepresentabilityFailure):
        broken.phi_inverse(d0, d1, d0, svec.zero_morphism(
            d1, vhat.hom(d0, d0)))
    with pytest.raises(RepresentabilityFailure):
        vcat_to_module(vhat, broken)


def test_act_outside_scope(vhat, svec):
    """Acting outside the declared pairs is a coverage gap."""
    T = unit_only_tensoring(vhat)
    with pytest.raises(CoverageGap):
        T.act(vhat.objects[0], svec.simples()[1])


def test_module_of_another_category(cliff, canonical):
    """Witnesses must belong to the category they are used with."""
    with pytest.raises(ShapeMismatch):
        vcat_to_module(cliff, canonical)


@pytest.mark.parametrize("name", ["cliff", "ext"])
def test_superalgebra_module(request, svec, name):
    """Both superalgebras give oplax modules with *◁Π = *."""
    A = request.getfixturevalue(name)
    T = superalgebra_tensoring(A)
    assert T.validate().passed
    M = vcat_to_module(A, T)
    assert verify_module(M, svec.simples()).passed
    assert lemma_unit_inverses(M, svec.simples()).passed


def test_clifford_is_strong(cliff, svec):
    """e·e = 1 makes α_{*,Π,Π} invertible."""
    M = vcat_to_module(cliff, superalgebra_tensoring(cliff))
    assert strong_module_check(M, svec.simples()).passed


def test_exterior_is_only_oplax(ext, svec):
    """e·e = 0 leaves α_{*,Π,Π} singular and nothing else."""
    M = vcat_to_module(ext, superalgebra_tensoring(ext))
    report = strong_module_check(M, svec.simples())
    failures = report.failures()
    assert not report.passed
    assert [f.law for f in failures] == ["alpha_invertible"]
    assert failures[0].witness["tuple"] == ["*", "d1", "d1"]


def test_vhat_module_is_strong(canonical, vhat, svec):
    """V̂ acting on itself is a strong module."""
    M = vcat_to_module(vhat, canonical)
    assert verify_module(M, svec.simples()).passed
    assert strong_module_check(M, svec.simples()).passed


def test_strong_check_with_left_adjoints(canonical, vhat, svec):
    """μ^{L^a} inverts α wherever both are defined."""
    M = vcat_to_module(vhat, canonical)
    left = {a: tensor_functor(canonical, a, svec.simples(), vhat)
            for a in vhat.objects}
    report = strong_module_check(M, svec.simples(), left)
    assert report.passed
    assert any(c.law == "mu_is_alpha_inverse" for c in report.checks)


@pytest.mark.parametrize("name, tensoring", [
    ("vhat", canonical_tensoring),
    ("triv", None),
])
def test_roundtrip(request, svec, name, tensoring):
    """vcat -> module -> vcat recovers C up to inverse V-functors."""
    C = request.getfixturevalue(name)
    T = tensoring(C, svec.simples()) if tensoring else \
        unit_only_tensoring(C)
    assert roundtrip_check(C, T).passed


def test_reverse_construction(canonical, vhat):
    """The rebuilt category has the same hom objects and is a V-category."""
    M = vcat_to_module(vhat, canonical)
    data = adjoint_data_from_vcat(M)
    rebuilt = module_to_vcat(M, data, name="rebuilt")
    assert verify_vcategory(rebuilt).passed
    for a in vhat.objects:
        for b in vhat.objects:
            assert rebuilt.hom(a, b) == vhat.hom(a, b)


def test_roundtrip_needs_hom_weights(cliff):
    """Rebuilding needs a◁C(a -> b), which the odd tensoring lacks."""
    with pytest.raises(CoverageGap):
        roundtrip_check(cliff, superalgebra_tensoring(cliff))


def test_identity_laxitor(canonical, vhat, svec):
    """The laxitor of 1_V̂ is invertible and satisfies its laws."""
    I = identity_functor(vhat)
    lax = laxitor_of_functor(I, canonical, canonical)
    assert lax.verify(svec.simples()).passed
    assert is_tensored_functor(I, canonical, canonical).passed


def test_laxitor_coverage(canonical, vhat):
    """Source pairs whose image is not covered are listed."""
    I = identity_functor(vhat)
    with pytest.raises(CoverageGap):
        laxitor_of_functor(I, canonical, unit_only_tensoring(vhat))


def test_hom_adjunction(canonical, vhat, svec):
    """L^a -| R^a lifts to a V-adjunction with κ = θ^{-1}."""
    a = vhat.objects[0]
    L, R, unit, counit = hom_adjunction_data(canonical, a, svec.simples(),
                                             vhat)
    assert verify_vfunctor(L).passed
    report = theta_kappa(L, R, unit, counit)
    assert report.passed
    assert set(report.data["theta"]) == {
        (c, d) for c in L.source.objects for d in vhat.objects}
    assert len(report.data["theta"]) == 4


def test_search_vhat(vhat, svec):
    """Every simple weight has a witness in V̂."""
    T, report = search_tensoring(vhat, svec.simples())
    assert report.verdict == PASS
    assert report.data["found"] == 4
    assert T.validate().passed


@pytest.mark.parametrize("name", ["cliff", "ext"])
def test_search_superalgebra(request, svec, name):
    """The odd shift *◁Π = * is found in both superalgebras."""
    A = request.getfixturevalue(name)
    T, report = search_tensoring(A, svec.simples())
    assert report.data["found"] == 2
    assert T.covers("*", svec.simples()[1])


def test_search_is_seeded(cliff, svec):
    """The same seed finds the same witnesses."""
    first, _ = search_tensoring(cliff, svec.simples(), seed=3)
    second, _ = search_tensoring(cliff, svec.simples(), seed=3)
    for a, v in first.scope:
        assert first.eta(a, v) == second.eta(a, v)


def test_search_needs_combination(svec):
    """A unit that is no single basis element is still solved for."""
    unit, double = svec.unit, svec.word([0, 0])
    C = self_enrichment(svec, [unit, double], "Vhat11")
    units = svec.hom_basis(double, C.hom(unit, double))
    assert len(units) == 4
    for eta in units:
        single = tensoring_from_tables(C, [(unit, double, double, eta)])
        assert not single.is_bijective(unit, double, double)
    T, report = search_tensoring(C, [double])
    assert report.data["found"] == 1
    assert T.act(unit, double) == double
    assert T.eta(unit, double) not in units
    assert all(T.is_bijective(unit, double, b) for b in C.objects)


def test_search_small_budget(cliff, svec):
    """A budget too small for the grid still finds the odd shift."""
    T, _ = search_tensoring(cliff, svec.simples(), max_candidates=1)
    assert T.covers("*", svec.simples()[1])


def test_search_undetermined(triv, svec):
    """C(* -> *) = 1 has no object playing *◁Π."""
    T, report = search_tensoring(triv, [svec.simples()[1]])
    assert report.verdict == UNDETERMINED
    assert report.data["found"] == 0
    assert T.scope == []


if __name__ == "__main__":
    pytest.main()
