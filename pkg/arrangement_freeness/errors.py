"""exceptions raised by the arrangement-freeness library"""
from __future__ import annotations

from typing import Any, Optional


class ArrangementError(Exception):
    """base for all arrangement errors"""

    code: str = "ArrangementError"

    def __init__(self, detail: str):
        """our basic exception"""
        super().__init__(detail)
        self.detail: str = detail

    def __str__(self) -> str:
        """return our details"""
        return self.detail

    def as_dict(self) -> dict[str, str]:
        """machine-readable form used by the command line"""
        return {"error": self.code, "detail": self.detail}


class ArrangementValueError(ValueError):
    """wrapper for issues with a value"""


class FieldMismatchError(ArrangementError):
    """operands live in different number fields"""

    code = "FieldMismatch"

    def __init__(self, left: Any, right: Any):
        """record both field labels"""
        self.left: str = str(left)
        self.right: str = str(right)
        super().__init__(detail=f"field mismatch, {self.left} vs {self.right}")


class FieldDivisionByZeroError(ArrangementError):
    """inversion of the zero element"""

    code = "DivisionByZero"


class ReducibleMinpolyError(ArrangementError):
    """a nonzero element shares a factor with the defining polynomial"""

    code = "ReducibleMinpoly"

    def __init__(self, **kwargs):
        """aggregate the field and the common factor"""
        self.label: str = kwargs.get("label", "?")
        self.gcd: str = kwargs.get("gcd", "?")
        super().__init__(detail=f"minimal polynomial of {self.label} is reducible, common factor {self.gcd}")


class InexactDivisionError(ArrangementError):
    """polynomial division left a remainder"""

    code = "InexactDivision"

    def __init__(self, **kwargs):
        """aggregate dividend, divisor and remainder"""
        self.remainder: str = kwargs.get("remainder", "?")
        super().__init__(detail=f"inexact division: {kwargs.get('dividend', '?')} / "
                                f"{kwargs.get('divisor', '?')} leaves remainder {self.remainder}")


class ProportionalInputsError(ArrangementError):
    """meet or join of projectively equal inputs"""

    code = "ProportionalInputs"


class UnsupportedNError(ArrangementError):
    """regular polygon size outside the supported set"""

    code = "UnsupportedN"

    def __init__(self, n: int, supported: tuple[int, ...]):
        """record the requested and supported sizes"""
        self.n: int = n
        super().__init__(detail=f"n={n} not supported, expected one of {list(supported)}")


class RepeatedComponentError(ArrangementError):
    """two components of a curve are proportional"""

    code = "RepeatedComponent"

    def __init__(self, index_a: int, index_b: int):
        """indices of the repeated components"""
        self.index_a: int = index_a
        self.index_b: int = index_b
        super().__init__(detail=f"components {index_a} and {index_b} are proportional")


class DegenerateInputError(ArrangementError):
    """well-formed input whose geometry the computation cannot use"""

    code = "DegenerateInput"

    def __init__(self, **kwargs):
        """aggregate what was degenerate and why"""
        self.what: str = kwargs.get("what", "?")
        self.reason: str = kwargs.get("reason", "?")
        super().__init__(detail=f"{self.what}: {self.reason}")


class NonOrdinarySingularityError(ArrangementError):
    """two branch tangents coincide at a singular point"""

    code = "NonOrdinarySingularity"

    def __init__(self, point: Any, components: Optional[tuple[int, int]] = None):
        """record the offending point"""
        self.point: str = str(point)
        self.components: Optional[tuple[int, int]] = components
        super().__init__(detail=f"non-ordinary singularity at {self.point}"
                                + (f", tangent branches {components}" if components else ""))


class NotARealizationError(ArrangementError):
    """a nonbasis determinant does not vanish"""

    code = "NotARealization"

    def __init__(self, triple: tuple[int, int, int]):
        """record the offending triple"""
        self.triple: tuple[int, int, int] = triple
        super().__init__(detail=f"nonbasis {triple} has nonzero determinant")


class NegativeMultiplicityError(ArrangementError):
    """a monodromy table yields a negative multiplicity"""

    code = "NegativeMultiplicity"

    def __init__(self, q: int, value: int):
        """record the offending row"""
        self.q: int = q
        super().__init__(detail=f"table row q={q} gives negative multiplicity {value}")


class NotAPencilError(ArrangementError):
    """the cubics through the points do not form a pencil"""

    code = "NotAPencil"

    def __init__(self, dim: int):
        """record the kernel dimension"""
        self.dim: int = dim
        super().__init__(detail=f"cubics through the points form a space of dimension {dim}, expected 2")


class NotInFieldError(ArrangementError):
    """an intersection point needs a field extension"""

    code = "NotInField"

    def __init__(self, **kwargs):
        """aggregate the pair of components and the irreducible factor"""
        self.pair: tuple[int, int] = kwargs.get("pair", (-1, -1))
        self.factor: str = kwargs.get("factor", "?")
        self.label: str = kwargs.get("label", "?")
        super().__init__(detail=f"intersection of components {self.pair} needs roots of "
                                f"{self.factor}, not split over {self.label}")


class FixtureIntegrityError(ArrangementError):
    """a shipped data file does not match its manifest hash"""

    code = "FixtureIntegrity"

    def __init__(self, name: str, expected: str, actual: str):
        """record both hashes"""
        self.name: str = name
        super().__init__(detail=f"fixture {name} hash {actual} does not match manifest {expected}")


class NoGoodPrimeError(ArrangementError):
    """no prime below the search floor reduces the field"""

    code = "NoGoodPrime"
