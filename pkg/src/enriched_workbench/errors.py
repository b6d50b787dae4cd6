"""errors.py - Named errors raised by the workbench.

Law failures are never raised; they are recorded in a Report. The classes
here cover malformed input and requests outside the data that was supplied.
"""


class WorkbenchError(ValueError):
    """Base class for all workbench errors."""


class MixedOrder(WorkbenchError):
    """Two cyclotomic values of different orders were combined."""

    def __init__(self, left: int, right: int):
        super().__init__(
            f"Cannot combine values of order {left} and {right}; "
            "embed them into a common order first.")
        self.left = left
        self.right = right


class NotAMultiple(WorkbenchError):
    """A cyclotomic value was embedded into an order it does not divide."""

    def __init__(self, order: int, target: int):
        super().__init__(f"{target} is not a multiple of {order}.")
        self.order = order
        self.target = target


class ShapeMismatch(WorkbenchError):
    """Morphism domains, codomains or block shapes do not line up."""


class RepresentabilityFailure(WorkbenchError):
    """The unit η_{a,v} does not induce a bijection onto V(v → C(a→b))."""

    def __init__(self, a, v, b, detail: str = ""):
        message = f"Representability fails at (a={a}, v={v}, b={b})"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.a = a
        self.v = v
        self.b = b


class TriangleFailure(WorkbenchError):
    """Supplied counits do not satisfy the triangle identities."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CoverageGap(WorkbenchError):
    """An operation needed data outside the declared finite scope."""

    def __init__(self, missing, what: str = "pairs"):
        missing = list(missing)
        shown = ", ".join(str(item) for item in missing[:10])
        if len(missing) > 10:
            shown += f", ... ({len(missing)} in total)"
        super().__init__(f"Missing {what}: {shown}")
        self.missing = missing


class ClosednessDataMissing(WorkbenchError):
    """An internal hom [a, b] or its θ was required but not supplied."""


class AdjointMismatch(WorkbenchError):
    """Gradewise right adjoint counits fail to be bijective."""


class ParseError(WorkbenchError):
    """Input data could not be read; `path` locates the offending field."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
