"""test_exact_scalars.py - Test cases for the cyclotomic field arithmetic."""

# Get packages.
from fractions import Fraction
import cmath
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.errors import MixedOrder, NotAMultiple, ParseError
from enriched_workbench.exact_scalars import (
    Cyclotomic, cyc_arith, cyc_embed, cyclotomic_coefficients, field_degree,
    format_rational, one, root_of_unity, zero)

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def zeta5():
    """A primitive fifth root of unity."""
    return root_of_unity(5, 1)


#####################################################################
# Test functions.
def test_cyclotomic_polynomials():
    """Φ_m coefficients and field degrees."""
    assert cyclotomic_coefficients(4) == (1, 0, 1)
    assert cyclotomic_coefficients(3) == (1, 1, 1)
    assert field_degree(12) == 4
    assert field_degree(2) == 1


def test_square_of_i_is_minus_one():
    """ζ_4^2 reduces to the rational -1."""
    i = root_of_unity(4, 1)
    assert i * i == -1
    assert root_of_unity(4, 2) == Cyclotomic.rational(4, -1)
    assert (i * i).is_rational()


def test_root_of_unity_order():
    """ζ_12 has order exactly 12."""
    z = root_of_unity(12, 1)
    assert z ** 12 == 1
    assert z ** 6 == -1
    assert z ** 4 != 1


def test_roots_sum_to_zero():
    """1 + ζ_3 + ζ_3^2 = 0."""
    z = root_of_unity(3, 1)
    assert (1 + z + z * z).is_zero()


def test_inverse_round_trip(zeta5):
    """x * x^{-1} = 1 for an irrational x."""
    x = 1 + 2 * zeta5 - Fraction(1, 3) * zeta5 ** 3
    assert x * x.inverse() == one(5)
    assert x / x == 1
    assert (x ** -2) * x * x == 1


def test_zero_division(zeta5):
    """Inverting zero names the field."""
    with pytest.raises(ZeroDivisionError, match="zeta_5"):
        zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        zeta5 / zero(5)


def test_mixed_orders_rejected():
    """Values of different orders cannot be combined."""
    with pytest.raises(MixedOrder):
        _ = root_of_unity(4, 1) + root_of_unity(3, 1)
    with pytest.raises(MixedOrder):
        cyc_arith(one(2), one(3), "mul")


def test_unknown_operation():
    """cyc_arith only knows add, sub and mul."""
    with pytest.raises(ValueError):
        cyc_arith(one(2), one(2), "div")


def test_embed():
    """ζ_4 embeds as ζ_8^2; non-multiples are refused."""
    assert cyc_embed(root_of_unity(4, 1), 8) == root_of_unity(8, 2)
    assert root_of_unity(2, 1).embed(4) == -1
    with pytest.raises(NotAMultiple):
        root_of_unity(4, 1).embed(6)


def test_to_complex(zeta5):
    """Floating evaluation agrees with exp(2πi/5)."""
    assert abs(zeta5.to_complex() - cmath.exp(2j * cmath.pi / 5)) < 1e-12


def test_json_format():
    """Scalars serialise as exponent -> "p/q"."""
    assert Cyclotomic.rational(2, -1).to_json() == \
        {"m": 2, "coeffs": {"0": "-1/1"}}
    assert root_of_unity(4, 1).to_json() == {"m": 4, "coeffs": {"1": "1/1"}}
    assert zero(3).to_json() == {"m": 3, "coeffs": {}}
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_json_parse_reduces():
    """Parsed values are reduced modulo Φ_m."""
    value = Cyclotomic.from_json({"m": 4, "coeffs": {"2": "1/1"}})
    assert value == -1
    half_i = Cyclotomic.from_json({"m": 4, "coeffs": {"1": "1/2"}})
    assert half_i * 2 == root_of_unity(4, 1)


@pytest.mark.parametrize("bad", [
    [1, 2], {"coeffs": {}}, {"m": 0, "coeffs": {}},
    {"m": 2, "coeffs": {"0": "x/y"}}, {"m": 2, "coeffs": [0]}])
def test_json_parse_errors(bad):
    """Malformed scalars raise ParseError."""
    with pytest.raises(ParseError):
        Cyclotomic.from_json(bad)


@pytest.mark.parametrize("key", ["-1", "-3"])
def test_json_negative_exponent(key):
    """Exponents below zero are rejected at the coeffs field."""
    with pytest.raises(ParseError) as error:
        Cyclotomic.from_json({"m": 4, "coeffs": {key: "1/1"}})
    assert error.value.path == "$.coeffs"


def test_immutable(zeta5):
    """Values cannot be mutated."""
    with pytest.raises(AttributeError):
        zeta5.m = 7


if __name__ == "__main__":
    pytest.main()
