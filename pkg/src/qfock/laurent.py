"""Sparse multivariate Laurent polynomials in z_1, ..., z_N."""
import logging
from fractions import Fraction
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypeAlias
from typing import Union

from pydantic import BaseModel
from pydantic import conint
from pydantic import Field

from ._sparse import SparseVector
from ._sparse import Terms
from .coeffield import format_scalar
from .coeffield import ScalarField
from .exceptions import IndexOutOfRangeError
from .exceptions import LengthMismatchError
from .exceptions import NvarsMismatchError

logger = logging.getLogger(__name__)

Exps: TypeAlias = Tuple[int, ...]


def graded_lex_key(exps: Exps) -> Tuple[int, Exps]:
    """Deterministic term ordering: total degree first, then lexicographic."""
    return (sum(exps), exps)


class TermModel(BaseModel):
    exps: List[int]
    coeff: ScalarField


class LaurentPolyModel(BaseModel):
    """JSON shape of a Laurent polynomial."""

    nvars: conint(ge=0)  # type: ignore[valid-type]
    terms: List[TermModel] = Field(default_factory=list)

    class Config:
        json_encoders = {Fraction: format_scalar}


class LaurentPoly(SparseVector[Exps]):
    """Laurent polynomial with exact coefficients, stored as exponent vector -> coefficient."""

    __slots__ = ("_nvars",)

    def __init__(self, nvars: int, terms: Terms[Exps] = ()) -> None:
        super().__init__(terms)
        self._nvars = nvars
        for exps in self._terms:
            if len(exps) != nvars:
                raise LengthMismatchError(actual_length=len(exps), expected_length=nvars)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def dims(self) -> Tuple[int, ...]:
        return (self._nvars,)

    def _spawn(self, terms: Terms[Exps]) -> "LaurentPoly":
        return LaurentPoly(self._nvars, terms)

    def _check_compatible(self, other: SparseVector) -> None:
        if isinstance(other, LaurentPoly) and other.nvars != self.nvars:
            raise NvarsMismatchError(left=self.nvars, right=other.nvars)
        super()._check_compatible(other)

    # constructors -----------------------------------------------------------

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Union[Fraction, int] = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def constant(cls, nvars: int, c: Union[Fraction, int] = 1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> "LaurentPoly":
        """The polynomial z_i^power, with i counted from 1."""
        _check_index(i, nvars)
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def power_sum(cls, a: int, nvars: int) -> "LaurentPoly":
        """B_a = z_1^a + ... + z_N^a."""
        return cls(nvars, [(tuple(a if j == i else 0 for j in range(nvars)), 1) for i in range(nvars)])

    # ring structure ---------------------------------------------------------

    def __mul__(self, other: Union["LaurentPoly", Fraction, int]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compatible(other)
        acc: Dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(self._nvars, acc)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((exps, coeff),) = self._terms.items()
            return LaurentPoly(self._nvars, {tuple(e * k for e in exps): coeff**k})
        result = LaurentPoly.constant(self._nvars)
        for _ in range(k):
            result = result * self
        return result

    # variable operators ---------------------------------------------------

    def swap_vars(self, i: int, j: int) -> "LaurentPoly":
        """The permutation operator K_{i,j} exchanging z_i and z_j."""
        _check_index(i, self._nvars)
        _check_index(j, self._nvars)
        if i == j:
            raise ValueError("swap_vars needs two distinct indices")
        return self.apply(lambda exps: ((_swapped(exps, i - 1, j - 1), Fraction(1)),))

    def dilate(self, i: int, s: Fraction) -> "LaurentPoly":
        """The dilation s^{D_i}: z^λ picks up s^{λ_i}."""
        _check_index(i, self._nvars)
        if s == 0:
            raise ValueError("dilation by zero is not invertible")
        return self._spawn({exps: coeff * s ** exps[i - 1] for exps, coeff in self._terms.items()})

    # inspection -------------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exps, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]))

    def total_degrees(self) -> List[int]:
        return sorted({sum(exps) for exps in self._terms})

    def homogeneous_parts(self) -> Dict[int, "LaurentPoly"]:
        parts: Dict[int, Dict[Exps, Fraction]] = {}
        for exps, coeff in self._terms.items():
            parts.setdefault(sum(exps), {})[exps] = coeff
        return {d: LaurentPoly(self._nvars, t) for d, t in sorted(parts.items())}

    def to_model(self) -> LaurentPolyModel:
        return LaurentPolyModel(
            nvars=self._nvars,
            terms=[TermModel(exps=list(exps), coeff=coeff) for exps, coeff in self.sorted_terms()],
        )

    @classmethod
    def from_model(cls, model: LaurentPolyModel) -> "LaurentPoly":
        return cls(model.nvars, [(tuple(t.exps), t.coeff) for t in model.terms])

    def __repr__(self) -> str:
        return f"LaurentPoly({self._nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_format_term(exps, coeff) for exps, coeff in self.sorted_terms())


def degree_operator(f: LaurentPoly) -> LaurentPoly:
    """The Euler operator z_1 d/dz_1 + ... + z_N d/dz_N."""
    return LaurentPoly(f.nvars, {exps: coeff * sum(exps) for exps, coeff in f.items()})


def _format_term(exps: Exps, coeff: Fraction) -> str:
    factors = [f"z{i + 1}^{e}" if e != 1 else f"z{i + 1}" for i, e in enumerate(exps) if e]
    return "*".join([format_scalar(coeff), *factors])


def _swapped(exps: Exps, a: int, b: int) -> Exps:
    swapped = list(exps)
    swapped[a], swapped[b] = swapped[b], swapped[a]
    return tuple(swapped)


def _check_index(i: int, nvars: int) -> None:
    if not 1 <= i <= nvars:
        raise IndexOutOfRangeError(index=i, lower=1, upper=nvars)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def scale(c: Fraction, f: LaurentPoly) -> LaurentPoly:
    return f.scale(c)


def swap_vars(i: int, j: int, f: LaurentPoly) -> LaurentPoly:
    return f.swap_vars(i, j)


def dilate(i: int, s: Fraction, f: LaurentPoly) -> LaurentPoly:
    return f.dilate(i, s)


def polys_from_monomials(nvars: int, monomials: Iterable[Exps]) -> List[LaurentPoly]:
    return [LaurentPoly(nvars, {exps: 1}) for exps in monomials]


__all__ = (
    "add",
    "degree_operator",
    "dilate",
    "Exps",
    "graded_lex_key",
    "LaurentPoly",
    "LaurentPolyModel",
    "mul",
    "polys_from_monomials",
    "scale",
    "swap_vars",
    "TermModel",
)
