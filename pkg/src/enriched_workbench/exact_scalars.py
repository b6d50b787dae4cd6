"""exact_scalars.py - Exact arithmetic in cyclotomic fields Q(ζ_m).

A value is stored in the power basis of Q[x]/Φ_m(x) as a tuple of Fractions,
lowest degree first, with trailing zeros removed. Reduction is canonical, so
two values are equal exactly when their coefficient tuples are equal.
"""

# Get packages.
import cmath
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple, Union
from sympy import Poly, QQ, Symbol, cyclotomic_poly

# User defined modules.
from enriched_workbench.errors import MixedOrder, NotAMultiple, ParseError

# Set up logging.
logger = logging.getLogger(__name__)

# Constants.
_X = Symbol("x")
Scalar = Union["Cyclotomic", int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> Tuple[int, ...]:
    """Coefficients of Φ_m, lowest degree first (monic, integral)."""
    if m < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {m}.")
    poly = cyclotomic_poly(m, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def field_degree(m: int) -> int:
    """Degree of Q(ζ_m) over Q."""
    return len(cyclotomic_coefficients(m)) - 1


def _trim(coeffs: list) -> Tuple[Fraction, ...]:
    """Drop trailing zeros."""
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _reduce(coeffs: list, m: int) -> Tuple[Fraction, ...]:
    """Reduce a coefficient list modulo the monic polynomial Φ_m."""
    phi = cyclotomic_coefficients(m)
    degree = len(phi) - 1
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, degree - 1, -1):
        lead = coeffs[top]
        if lead:
            shift = top - degree
            for j in range(degree):
                if phi[j]:
                    coeffs[shift + j] -= lead * phi[j]
            coeffs[top] = Fraction(0)
    return _trim(coeffs[:degree])


def parse_rational(text) -> Fraction:
    """Parse "p/q" (or an integer literal) into a Fraction."""
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError(f"Invalid rational {text!r}.") from error


def format_rational(value: Fraction) -> str:
    """Format a Fraction as "p/q"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class Cyclotomic:
    """An immutable element of Q(ζ_m).

    Attributes:
        m (int): The order of the cyclotomic field.
        coeffs (tuple): Fractions c_k with value Σ c_k ζ_m^k, reduced."""
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable = ()):
        if m < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {m}.")
        object.__setattr__(self, "m", int(m))
        object.__setattr__(
            self, "coeffs", _reduce([Fraction(c) for c in coeffs], m))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable.")

    @classmethod
    def _raw(cls, m: int, coeffs: Tuple[Fraction, ...]) -> "Cyclotomic":
        """Build from an already reduced tuple."""
        value = object.__new__(cls)
        object.__setattr__(value, "m", m)
        object.__setattr__(value, "coeffs", coeffs)
        return value

    @classmethod
    def rational(cls, m: int, value) -> "Cyclotomic":
        """Embed a rational number."""
        value = Fraction(value)
        return cls._raw(m, (value,) if value else ())

    # Coercion ----------------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise MixedOrder(self.m, other.m)
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.m, other)
        return NotImplemented

    # Queries -----------------------------------------------------------------
    @property
    def coefficients(self) -> Dict[int, Fraction]:
        """Nonzero coefficients keyed by exponent."""
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        """True for the zero element."""
        return not self.coeffs

    def is_rational(self) -> bool:
        """True when the value lies in Q."""
        return len(self.coeffs) <= 1

    def to_fraction(self) -> Fraction:
        """The rational value; raises ValueError if not rational."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational.")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_complex(self) -> complex:
        """Floating-point evaluation at ζ_m = exp(2πi/m)."""
        zeta = cmath.exp(2j * cmath.pi / self.m)
        return sum((float(c) * zeta ** k
                    for k, c in enumerate(self.coeffs)), 0j)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.m, self.coeffs))

    # Arithmetic --------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        left = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        right = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return Cyclotomic._raw(
            self.m, _trim([a + b for a, b in zip(left, right)]))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Cyclotomic._raw(self.m, ())
        # Rational fast path.
        if len(self.coeffs) == 1:
            scale = self.coeffs[0]
            return Cyclotomic._raw(
                self.m, tuple(scale * c for c in other.coeffs))
        if len(other.coeffs) == 1:
            scale = other.coeffs[0]
            return Cyclotomic._raw(
                self.m, tuple(c * scale for c in self.coeffs))
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return Cyclotomic._raw(self.m, _reduce(product, self.m))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended gcd with Φ_m.

        Raises:
            ZeroDivisionError: If the value is zero."""
        if not self.coeffs:
            raise ZeroDivisionError(
                f"Cannot invert zero in Q(zeta_{self.m}).")
        if len(self.coeffs) == 1:
            return Cyclotomic._raw(self.m, (1 / self.coeffs[0],))
        numerator = Poly(list(reversed(self.coeffs)), _X, domain=QQ)
        modulus = Poly(list(reversed(cyclotomic_coefficients(self.m))),
                       _X, domain=QQ)
        result = numerator.invert(modulus)
        coeffs = [Fraction(int(c.p), int(c.q))
                  for c in reversed(result.all_coeffs())]
        return Cyclotomic(self.m, coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError(
                f"Division of {self} by zero in Q(zeta_{self.m}).")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = Cyclotomic.rational(self.m, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Conversion --------------------------------------------------------------
    def embed(self, m_new: int) -> "Cyclotomic":
        """Express the same value in Q(ζ_{m_new}).

        ζ_m is sent to ζ_{m_new}^{m_new/m}.

        Raises:
            NotAMultiple: If m_new is not a multiple of m."""
        if m_new % self.m:
            raise NotAMultiple(self.m, m_new)
        step = m_new // self.m
        coeffs = [Fraction(0)] * (step * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return Cyclotomic(m_new, coeffs)

    def to_json(self) -> dict:
        """Serialize as {"m": m, "coeffs": {"k": "p/q"}}."""
        return {"m": self.m,
                "coeffs": {str(k): format_rational(c)
                           for k, c in self.coefficients.items()}}

    @classmethod
    def from_json(cls, data, path: str = "$") -> "Cyclotomic":
        """Parse the JSON form, reducing if necessary.

        Raises:
            ParseError: If the document is malformed."""
        if not isinstance(data, dict) or "m" not in data:
            raise ParseError("Expected an object with keys 'm' and 'coeffs'.",
                             path)
        try:
            m = int(data["m"])
            terms = data.get("coeffs", {})
            exponents = [int(k) for k in terms]
        except (TypeError, ValueError, AttributeError) as error:
            raise ParseError(str(error), path) from error
        if any(k < 0 for k in exponents):
            raise ParseError("Exponents must be non-negative.",
                             f"{path}.coeffs")
        try:
            coeffs = [Fraction(0)] * (max(exponents, default=-1) + 1)
            for k, c in zip(exponents, terms.values()):
                coeffs[k] += parse_rational(c)
        except (TypeError, ValueError, AttributeError) as error:
            raise ParseError(str(error), path) from error
        if m < 1:
            raise ParseError(f"Order must be positive, got {m}.", f"{path}.m")
        return cls(m, coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.m}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in self.coefficients.items():
            if k == 0:
                terms.append(str(c))
            else:
                power = f"z{self.m}" + (f"^{k}" if k > 1 else "")
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms)


def zero(m: int) -> Cyclotomic:
    """The zero of Q(ζ_m)."""
    return Cyclotomic._raw(m, ())


def one(m: int) -> Cyclotomic:
    """The one of Q(ζ_m)."""
    return Cyclotomic._raw(m, (Fraction(1),))


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    """Apply "add", "sub" or "mul" to two values of the same order.

    Raises:
        MixedOrder: If the orders differ."""
    if a.m != b.m:
        raise MixedOrder(a.m, b.m)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unknown operation {op!r}.")


def cyc_embed(a: Cyclotomic, m_new: int) -> Cyclotomic:
    """See Cyclotomic.embed."""
    return a.embed(m_new)


def root_of_unity(m: int, k: int) -> Cyclotomic:
    """ζ_m^{k mod m}, reduced."""
    k %= m
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return Cyclotomic(m, coeffs)
