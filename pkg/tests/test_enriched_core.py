"""test_enriched_core.py - Test cases for V-categories, V-functors and
V-natural transformations."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.enriched_core import (
    LazyTable, VFunctor, VNatTransf, compose_functors, identity_functor,
    invert_morphism, is_invertible_nat, representable_vfunctor,
    self_enrichment, structure_tables, superalgebra_category, underlying,
    underlying_dimension_matches_base, verify_underlying_nat,
    verify_vadjunction, verify_vcategory, verify_vfunctor, verify_vnat)
from enriched_workbench.errors import CoverageGap, ShapeMismatch

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def identity_nat(vhat):
    """The identity transformation of 1_V̂."""
    I = identity_functor(vhat)
    return VNatTransf(I, I, vhat.ident, "id")


#####################################################################
# Test functions.
@pytest.mark.parametrize("name", ["triv", "vhat", "vhat_dim2", "vhat_z4",
                                  "cliff", "ext"])
def test_fixtures_are_vcategories(request, name):
    """Every fixture satisfies the V-category axioms."""
    report = verify_vcategory(request.getfixturevalue(name))
    assert report.passed, report.failures()[:1]


def test_composition_mutations_caught(vhat):
    """Scaling any single composition entry breaks a law."""
    tables = structure_tables(vhat)
    for key, comp in tables["comp"].items():
        broken = vhat.override(comp={key: comp.scaled(2)})
        assert not verify_vcategory(broken).passed, key


def test_identity_mutations_caught(vhat):
    """Flipping the sign of j_a breaks a unit law naming j_a."""
    d1 = vhat.objects[1]
    broken = vhat.override(ident={d1: vhat.ident(d1).scaled(-1)})
    report = verify_vcategory(broken)
    assert not report.passed
    assert {f.witness["identity"] for f in report.failures()} == {"j_d1"}


def test_functor_mutations_caught(vhat):
    """Scaling any component of 1_V̂ is detected."""
    I = identity_functor(vhat)
    assert verify_vfunctor(I).passed
    for a in vhat.objects:
        for b in vhat.objects:
            broken = I.override({(a, b): I.component(a, b).scaled(2)})
            assert not verify_vfunctor(broken).passed, (a, b)


def test_nat_mutations_caught(identity_nat, vhat):
    """Scaling any component of the identity transformation is detected."""
    assert verify_vnat(identity_nat).passed
    for a in vhat.objects:
        broken = identity_nat.override({a: vhat.ident(a).scaled(2)})
        assert not verify_vnat(broken).passed, a


def test_underlying_nat(identity_nat):
    """The identity transformation is plainly natural and invertible."""
    assert verify_underlying_nat(identity_nat).passed
    assert is_invertible_nat(identity_nat).passed


def test_composite_functor(vhat):
    """Composites of V-functors are V-functors."""
    I = identity_functor(vhat)
    assert verify_vfunctor(compose_functors(I, I)).passed


@pytest.mark.parametrize("name", ["vhat", "cliff", "ext"])
def test_representable_functor(request, name):
    """R^a = C(a -> −) is a V-functor into V̂."""
    C = request.getfixturevalue(name)
    for a in C.objects:
        assert verify_vfunctor(representable_vfunctor(C, a)).passed


def test_representable_needs_window(vhat, svec):
    """A target window missing some C(a -> b) is a coverage gap."""
    small = self_enrichment(svec, [svec.unit], "small")
    with pytest.raises(CoverageGap):
        representable_vfunctor(vhat, vhat.objects[0], small)


def test_identity_adjunction(vhat):
    """1 -| 1 with θ the identity of each hom object."""
    I = identity_functor(vhat)
    report = verify_vadjunction(
        I, I, lambda x, d: vhat.base.identity(vhat.hom(x, d)))
    assert report.passed


def test_broken_adjunction(vhat):
    """A non-invertible θ is reported, not raised."""
    I = identity_functor(vhat)
    base = vhat.base
    report = verify_vadjunction(
        I, I, lambda x, d: base.zero_morphism(vhat.hom(x, d),
                                              vhat.hom(x, d)))
    assert not report.passed
    assert report.failures()[0].law == "theta_invertible"


def test_underlying_category(cliff, ext):
    """C^V of a superalgebra is its even part."""
    for C in (cliff, ext):
        under = underlying(C)
        assert under.dim("*", "*") == 1
        assert under.check_laws().passed
        assert under.invert(C.ident("*"), "*", "*") == C.ident("*")


def test_underlying_dimensions(vhat):
    """dim V̂^V(u -> v) = dim V(u -> v)."""
    assert underlying_dimension_matches_base(vhat)


def test_superalgebra_needs_z2(z4):
    """Superalgebras live over Z/2-graded bases."""
    with pytest.raises(ShapeMismatch):
        superalgebra_category(z4, 1)


def test_invert_morphism(svec):
    """Blockwise inverses; non-invertible maps give None."""
    u = svec.word([0, 1])
    f = svec.identity(u).scaled(3)
    assert invert_morphism(svec, f).then(f) == svec.identity(u)
    assert invert_morphism(svec, svec.zero_morphism(u, u)) is None


def test_lazy_table():
    """Explicit tables raise CoverageGap outside their keys."""
    table = LazyTable({("a", "b"): 1}, "pairs")
    assert table.get("a", "b") == 1
    with pytest.raises(CoverageGap):
        table.get("b", "a")
    assert table.overridden({("b", "a"): 2}).get("b", "a") == 2


def test_functor_object_image_checked(vhat):
    """A functor sending an object outside the target is rejected."""
    F = VFunctor(vhat, vhat, lambda a: "nowhere",
                 lambda a, b: vhat.base.identity(vhat.hom(a, b)))
    report = verify_vfunctor(F)
    assert report.failures()[0].law == "object_image"


if __name__ == "__main__":
    pytest.main()
