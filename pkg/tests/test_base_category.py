"""test_base_category.py - Test cases for the graded base of enrichment."""

# Get packages.
import random
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.base_category import (
    BaseCategory, GradedObject, make_base, random_morphism,
    validate_bicharacter, verify_base_laws)
from enriched_workbench.errors import ParseError, ShapeMismatch
from enriched_workbench.exact_scalars import root_of_unity

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def rng():
    """A seeded generator."""
    return random.Random(7)


@pytest.fixture
def odd(svec):
    """Π = δ_1."""
    return svec.simple(1)


#####################################################################
# Test functions.
def test_tensor_objects(svec, z4, odd):
    """Words multiply lexicographically; the unit is neutral."""
    even_odd = svec.word([0, 1])
    square = svec.tensor_obj(even_odd, even_odd)
    assert square.word == ((0,), (1,), (1,), (0,))
    assert square.multiplicities == {(0,): 2, (1,): 2}
    assert svec.tensor_obj(odd, odd) == svec.unit
    assert z4.tensor_obj(z4.simple(1), z4.simple(3)) == z4.unit
    rng = random.Random(3)
    for _ in range(10):
        u = svec.word([rng.randint(0, 1) for _ in range(rng.randint(1, 3))])
        assert svec.tensor_obj(u, svec.unit) == u
        assert svec.tensor_obj(svec.unit, u) == u


def test_tensor_morphisms(svec, rng):
    """Identities tensor to identities and ⊗ is bifunctorial."""
    u, v = svec.word([0, 1]), svec.word([1, 1, 0])
    assert svec.tensor_mor(svec.identity(u), svec.identity(v)) == \
        svec.identity(svec.tensor_obj(u, v))
    objs = svec.objects_up_to(2, canonical=False)
    for _ in range(20):
        a, b, c, d, e, f = (rng.choice(objs) for _ in range(6))
        f1 = random_morphism(svec, a, b, rng)
        f2 = random_morphism(svec, b, c, rng)
        g1 = random_morphism(svec, d, e, rng)
        g2 = random_morphism(svec, e, f, rng)
        assert svec.tensor_mor(f1.then(f2), g1.then(g2)) == \
            svec.tensor_mor(f1, g1).then(svec.tensor_mor(f2, g2))
    f1 = random_morphism(svec, u, v, rng)
    assert svec.tensor_mor(f1, svec.identity(svec.unit)) == f1


def test_braiding_values(svec, z4, odd):
    """β_{Π,Π} = -1, β_{1,u} = 1_u and β_{δ1,δ1} = i over Z/4."""
    assert svec.braiding(odd, odd).block((0,))[0, 0] == -1
    u = svec.word([0, 1, 1])
    assert svec.braiding(svec.unit, u) == svec.identity(u)
    d1 = z4.simple(1)
    assert z4.braiding(d1, d1).block((2,))[0, 0] == root_of_unity(4, 1)


def test_braiding_inverse(z4):
    """β^{-1}_{u,v} inverts β_{v,u}."""
    u, v = z4.word([1, 2]), z4.word([3])
    assert z4.braiding(v, u).then(z4.braiding_inverse(u, v)) == \
        z4.identity(z4.tensor_obj(v, u))


def test_duals(svec, z4, odd):
    """Duals negate grades and reverse words."""
    assert svec.dual_obj(odd) == odd
    assert z4.dual_obj(z4.simple(1)) == z4.simple(3)
    assert z4.dual_obj(z4.word([1, 2])) == z4.word([2, 3])
    assert svec.internal_hom(odd, odd) == svec.unit
    u = svec.word([0, 1])
    assert svec.internal_hom(svec.unit, u) == u


def test_internal_hom_dimension_count(z4):
    """dim V̂(u -> v) counts the graded maps of every shift."""
    u, v = z4.word([0, 1, 1]), z4.word([1, 2, 3])
    hom = z4.internal_hom(u, v)
    for h in z4.group.elements():
        brute = sum(u.mult(g) * v.mult(z4.group.add(g, h))
                    for g in z4.group.elements())
        assert hom.mult(h) == brute


def test_mate_of_identity(svec, odd):
    """The mate of 1_Π, viewing Π = Π⊗1, is the unit scalar."""
    mate = svec.mate_forward(svec.identity(odd), odd, svec.unit)
    assert mate == svec.identity(svec.unit)


def test_mate_round_trip(z4, rng):
    """mate_backward inverts mate_forward on random data."""
    objs = z4.objects_up_to(2)
    for _ in range(25):
        u, w, v = (rng.choice(objs) for _ in range(3))
        f = random_morphism(z4, z4.tensor_obj(u, w), v, rng)
        assert z4.mate_backward(z4.mate_forward(f, u, w), u, v) == f


def test_mate_shape_checked(svec, odd):
    """A domain that is not u⊗w is refused."""
    f = svec.identity(svec.word([0, 1]))
    with pytest.raises(ShapeMismatch):
        svec.mate_forward(f, odd, odd)


def test_counit(svec):
    """The mate of the identity of V̂(u -> v) is ev_u ⊗ 1_v."""
    u, v = svec.word([0, 1]), svec.word([1])
    hom = svec.internal_hom(u, v)
    assert svec.mate_backward(svec.identity(hom), u, v) == \
        svec.counit(u, v)


def test_validate_bicharacter(svec, z4):
    """Both fixtures have valid exponent tables."""
    assert validate_bicharacter(svec).passed
    assert validate_bicharacter(z4).passed


def test_validate_bicharacter_failure():
    """e(1,1) = 1 with m = 3 on Z/2 is not biadditive."""
    bad = make_base([2], 3, [(0, 0, 1)])
    report = validate_bicharacter(bad)
    assert not report.passed
    failure = report.failures()[0]
    assert failure.law == "additive_left"
    assert failure.witness["tuple"] == ["1", "1"]


def test_base_laws(svec, z4):
    """Hexagons, zig-zags, naturality and mates hold exactly."""
    assert verify_base_laws(svec, svec.objects_up_to(3), samples=5).passed
    objs = z4.simples() + [z4.word([0, 1]), z4.word([1, 3])]
    assert verify_base_laws(z4, objs, samples=5).passed


def test_base_json(z4):
    """The base document reads back to the same category."""
    again = BaseCategory.from_json(z4.to_json())
    assert again.group == z4.group
    assert again.chi == z4.chi
    with pytest.raises(ParseError):
        BaseCategory.from_json({"group": [2]})


def test_parse_object(svec):
    """Words and multiplicity maps are both accepted."""
    assert svec.parse_object([0, 1]) == svec.word([0, 1])
    assert svec.parse_object({"1": 2, "0": 1}) == GradedObject(
        ((0,), (1,), (1,)))
    with pytest.raises(ParseError):
        svec.parse_object("Π")


def test_object_equality_is_word_equality(svec):
    """Objects compare as words, so reordered letters differ."""
    assert svec.word([0, 1]) != svec.word([1, 0])
    assert svec.parse_object({"0": 1, "1": 1}) == svec.word([0, 1])
    assert svec.parse_object({"1": 1, "0": 1}) != svec.word([1, 0])


if __name__ == "__main__":
    pytest.main()
