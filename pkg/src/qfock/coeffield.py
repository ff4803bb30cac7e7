"""Exact scalars and the deformation parameters q and p.

All spaces of the package are defined over the rational numbers with q and p
specialized to concrete generic rationals. Identities of rational functions in
(q, p) are therefore checked at a generic point in exact arithmetic.
"""
import logging
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import Optional
from typing import TypeAlias
from typing import Union

import regex
from pydantic import BaseModel
from pydantic import conint
from pydantic import Field
from pydantic import root_validator
from pydantic import validator

from .exceptions import NonGenericParametersError
from .exceptions import ZeroParameterError

logger = logging.getLogger(__name__)

Scalar: TypeAlias = Fraction

DEFAULT_Q = Fraction(4, 3)
DEFAULT_P = Fraction(5, 7)
DEFAULT_BOUND = 50

_SCALAR_REGEX = regex.compile(r"^\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>[+-]?\d+)\s*)?$")


def parse_scalar(value: Union[str, int, Fraction]) -> Fraction:
    """Parse an exact scalar.

    Args:
        value (str | int | Fraction): Either a scalar or a string "a/b" or "a".

    Raises:
        ValueError: The string does not describe a rational number.
        TypeError: The value has an unsupported type.

    Returns:
        Fraction: Canonical rational number.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise TypeError(f"cannot interpret {type(value).__name__} as a scalar")
    _match = _SCALAR_REGEX.fullmatch(value)
    if _match is None:
        raise ValueError(f"{value!r} is not a rational number of the form a/b")
    den = int(_match["den"]) if _match["den"] is not None else 1
    if den == 0:
        raise ValueError(f"{value!r} has a zero denominator")
    return Fraction(int(_match["num"]), den)


def format_scalar(value: Fraction) -> str:
    """Serialize a scalar in the canonical "numerator/denominator" form."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class ScalarField(Fraction):
    """Exact scalar as pydantic field, accepting fractions, integers and "a/b" strings."""

    @classmethod
    def __get_validators__(cls):
        """Return a generator of validation functions for use as pydantic field.

        Yields:
            (value: Any) -> Fraction: Validation function
        """
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema: Dict[str, Any]) -> None:
        field_schema.update(type="string", pattern=_SCALAR_REGEX.pattern, examples=["4/3", "-7/2"])

    @classmethod
    def validate(cls, value: Any) -> Fraction:
        return parse_scalar(value)


class Genericity(BaseModel):
    """Outcome of the bounded genericity check."""

    generic: bool
    q_is_one: bool = Field(default=False, description="q = 1 specialization, explicitly permitted")
    bound: int
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.generic


def check_genericity(q: Fraction, p: Fraction, bound: int) -> Genericity:
    """Check that q is not a root of unity and p avoids the powers q^(2a/b).

    Only exponents up to the bound are inspected, so the check is a finite
    approximation of genericity. It is monotone: passing at a bound implies
    passing at every smaller bound.

    Args:
        q (Fraction): Deformation parameter q.
        p (Fraction): Dilation parameter p.
        bound (int): Largest exponent inspected.

    Raises:
        ZeroParameterError: q or p vanishes.

    Returns:
        Genericity: Truthy when the parameters pass.
    """
    q, p = Fraction(q), Fraction(p)
    if q == 0:
        raise ZeroParameterError(name="q")
    if p == 0:
        raise ZeroParameterError(name="p")
    q_is_one = q == 1

    if not q_is_one:
        power = Fraction(1)
        for k in range(1, bound + 1):
            power *= q
            if power == 1:
                return Genericity(generic=False, q_is_one=False, bound=bound, reason=f"q^{k} = 1")

    even_powers: Dict[Fraction, int] = {}
    power, q_squared = Fraction(1), q * q
    for a in range(bound + 1):
        even_powers.setdefault(power, a)
        power *= q_squared

    power = Fraction(1)
    for b in range(1, bound + 1):
        power *= p
        if power in even_powers:
            return Genericity(
                generic=False,
                q_is_one=q_is_one,
                bound=bound,
                reason=f"p^{b} = q^{2 * even_powers[power]}",
            )
    return Genericity(generic=True, q_is_one=q_is_one, bound=bound)


class ParameterSet(BaseModel):
    """The deformation parameters q, p together with the genericity bound."""

    q: ScalarField = Field(default=DEFAULT_Q, description="Hecke parameter q")
    p: ScalarField = Field(default=DEFAULT_P, description="dilation parameter p")
    genericity_bound: conint(ge=1) = Field(default=DEFAULT_BOUND)  # type: ignore[valid-type]

    class Config:
        frozen = True
        json_encoders = {Fraction: format_scalar}

    @validator("q", "p")
    def _nonzero(cls, value: Fraction, field) -> Fraction:  # noqa: N805
        if value == 0:
            raise ZeroParameterError(name=field.name)
        return value

    @root_validator(skip_on_failure=True)
    def _generic(cls, values: Dict[str, Any]) -> Dict[str, Any]:  # noqa: N805
        q, p, bound = values["q"], values["p"], values["genericity_bound"]
        if q == 1:
            logger.debug("q = 1 specialization, skipping the genericity check")
            return values
        result = check_genericity(q, p, bound)
        if not result:
            raise NonGenericParametersError(
                q=format_scalar(q), p=format_scalar(p), bound=bound, reason=result.reason or ""
            )
        return values

    @classmethod
    def unchecked(cls, q: Fraction, p: Fraction, genericity_bound: int = DEFAULT_BOUND) -> "ParameterSet":
        """Build a parameter set without validation, for degenerate experiments."""
        return cls.construct(q=Fraction(q), p=Fraction(p), genericity_bound=genericity_bound)

    @property
    def q_inv(self) -> Fraction:
        return 1 / self.q

    @property
    def q_diff(self) -> Fraction:
        """The ubiquitous q - q^-1."""
        return self.q - 1 / self.q

    @property
    def q_is_one(self) -> bool:
        return self.q == 1


def q_number(k: int, q: Fraction) -> Fraction:
    """Quantum integer [k]_q = (q^k - q^-k)/(q - q^-1), equal to k at q = 1."""
    if q == 1 or q == -1:
        return Fraction(k) * q ** (k - 1)
    return (q**k - q ** (-k)) / (q - 1 / q)


def q_binomial(top: int, bottom: int, q: Fraction) -> Fraction:
    """Symmetric quantum binomial coefficient."""
    if bottom < 0 or bottom > top:
        return Fraction(0)
    result = Fraction(1)
    for k in range(1, bottom + 1):
        result *= q_number(top - bottom + k, q) / q_number(k, q)
    return result


__all__ = (
    "check_genericity",
    "DEFAULT_BOUND",
    "DEFAULT_P",
    "DEFAULT_Q",
    "format_scalar",
    "Genericity",
    "ParameterSet",
    "parse_scalar",
    "q_binomial",
    "q_number",
    "Scalar",
    "ScalarField",
)
