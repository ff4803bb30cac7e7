"""Custom exceptions."""
from pydantic import PydanticValueError


class ZeroParameterError(PydanticValueError):
    """Exception for a vanishing deformation parameter."""

    code = "parameter.zero"
    msg_template = "parameter {name} must be nonzero"

    def __init__(self, *, name: str) -> None:
        """Initialize exception.

        Args:
            name (str): Name of the offending parameter.
        """
        super().__init__(name=name)


class NonGenericParametersError(PydanticValueError):
    """Exception for parameters failing the bounded genericity check."""

    code = "parameter.generic"
    msg_template = "parameters q={q}, p={p} are not generic up to bound {bound}: {reason}"

    def __init__(self, *, q: str, p: str, bound: int, reason: str) -> None:
        """Initialize exception.

        Args:
            q (str): Serialized q.
            p (str): Serialized p.
            bound (int): Bound used by the check.
            reason (str): The relation that was found.
        """
        super().__init__(q=q, p=p, bound=bound, reason=reason)


class NvarsMismatchError(PydanticValueError):
    """Exception for combining polynomials in different numbers of variables."""

    code = "laurent.nvars"
    msg_template = "polynomials in {left} and {right} variables cannot be combined"

    def __init__(self, *, left: int, right: int) -> None:
        """Initialize exception.

        Args:
            left (int): Number of variables of the left operand.
            right (int): Number of variables of the right operand.
        """
        super().__init__(left=left, right=right)


class DimensionMismatchError(PydanticValueError):
    """Exception for combining vectors of different shapes."""

    code = "vector.dims"
    msg_template = "vectors with dims {left} and {right} cannot be combined"

    def __init__(self, *, left: object, right: object) -> None:
        """Initialize exception.

        Args:
            left (object): Dimensions of the left operand.
            right (object): Dimensions of the right operand.
        """
        super().__init__(left=left, right=right)


class IndexOutOfRangeError(PydanticValueError):
    """Exception for an operator index outside of its range."""

    code = "index.range"
    msg_template = "index {index} is outside of [{lower}, {upper}]"

    def __init__(self, *, index: int, lower: int, upper: int) -> None:
        """Initialize exception.

        Args:
            index (int): Offending index.
            lower (int): Smallest admissible index.
            upper (int): Largest admissible index.
        """
        super().__init__(index=index, lower=lower, upper=upper)


class LengthMismatchError(PydanticValueError):
    """Exception for sequences of unexpected length."""

    code = "list.length"
    msg_template = "wrong length {actual_length}, expected {expected_length}"

    def __init__(self, *, actual_length: int, expected_length: int) -> None:
        """Initialize exception.

        Args:
            actual_length (int): Length of the provided sequence.
            expected_length (int): Expected length of the sequence.
        """
        super().__init__(actual_length=actual_length, expected_length=expected_length)


class NotNondecreasingError(PydanticValueError):
    """Exception for a label that is not sorted."""

    code = "label.order"
    msg_template = "sequence {m} is not nondecreasing"

    def __init__(self, *, m: object) -> None:
        super().__init__(m=m)


class NotNStrictError(PydanticValueError):
    """Exception for a sequence with more than n equal entries."""

    code = "label.strict"
    msg_template = "sequence {m} repeats a value more than {n} times"

    def __init__(self, *, m: object, n: int) -> None:
        super().__init__(m=m, n=n)


class InadmissibleColorsError(PydanticValueError):
    """Exception for a color word that does not decrease inside blocks."""

    code = "label.colors"
    msg_template = "colors {e} are not admissible for {m}"

    def __init__(self, *, e: object, m: object) -> None:
        super().__init__(e=e, m=m)


class MixedDegreeError(PydanticValueError):
    """Exception for a vector whose terms have different degrees."""

    code = "fock.degree"
    msg_template = "vector mixes the degrees {degrees}"

    def __init__(self, *, degrees: object) -> None:
        super().__init__(degrees=degrees)


class VacuumBoundError(PydanticValueError):
    """Exception for a head wedge violating the bound set by the vacuum."""

    code = "fock.vacuum"
    msg_template = "wedge {ks} violates the vacuum bound of F_{M}"

    def __init__(self, *, ks: object, M: int) -> None:
        super().__init__(ks=ks, M=M)


class StabilizationError(PydanticValueError):
    """Exception for a semi-infinite wedge stored below its stable width."""

    code = "fock.stable"
    msg_template = "width parameter r={r} is below the degree k={k}"

    def __init__(self, *, r: int, k: int) -> None:
        super().__init__(r=r, k=k)


class InexactDivisionError(ArithmeticError):
    """Exception for a polynomial division that leaves a remainder."""

    msg = "Exact division failed; this signals an arithmetic bug."


class ParameterDegeneracyError(ArithmeticError):
    """Exception for a singular system at supposedly generic parameters."""

    def __init__(self, what: str):
        """Initialize exception.

        Args:
            what (str): Description of the degenerate computation.
        """
        super().__init__(f"Parameter degeneracy in {what}; q and p are not generic enough.")


class TriangularityError(ArithmeticError):
    """Exception for an operator leaving the dominance lower set."""

    def __init__(self, label: object, stray: object):
        """Initialize exception.

        Args:
            label (object): Composition whose lower set was left.
            stray (object): Monomial outside of the lower set.
        """
        super().__init__(f"Monomial {stray} is outside the lower set of {label}.")


class UsageError(ValueError):
    """Exception for invalid command line usage."""

    pass


class UnknownSuiteError(UsageError):
    """Exception for a verification suite that is not registered."""

    def __init__(self, name: str):
        super().__init__(f"Unknown verification suite {name}.")


class GeneratorParseError(UsageError):
    """Exception for an unparsable generator name."""

    def __init__(self, text: str):
        super().__init__(f"Cannot parse generator name {text!r}; expected E<i>, F<i>, K<i>, Kinv<i>, Kplus<i> or Kminus<i>.")


__all__ = (
    "DimensionMismatchError",
    "GeneratorParseError",
    "IndexOutOfRangeError",
    "InadmissibleColorsError",
    "InexactDivisionError",
    "LengthMismatchError",
    "MixedDegreeError",
    "NonGenericParametersError",
    "NotNondecreasingError",
    "NotNStrictError",
    "NvarsMismatchError",
    "ParameterDegeneracyError",
    "StabilizationError",
    "TriangularityError",
    "UnknownSuiteError",
    "UsageError",
    "VacuumBoundError",
    "ZeroParameterError",
)
