"""Sparse linear combinations with exact coefficients.

Shared kernel of polynomials, tensors and wedges: an immutable mapping from
hashable basis keys to nonzero rationals.
"""
import logging
from fractions import Fraction
from typing import Callable
from typing import Dict
from typing import Generic
from typing import Hashable
from typing import Iterable
from typing import Iterator
from typing import Mapping
from typing import Tuple
from typing import TYPE_CHECKING
from typing import TypeVar
from typing import Union

from .exceptions import DimensionMismatchError

if TYPE_CHECKING:
    from typing_extensions import Self

logger = logging.getLogger(__name__)

KeyT = TypeVar("KeyT", bound=Hashable)
Terms = Union[Mapping[KeyT, Union[Fraction, int]], Iterable[Tuple[KeyT, Union[Fraction, int]]]]


def accumulate(terms: "Terms[KeyT]") -> Dict[KeyT, Fraction]:
    """Sum duplicate keys and drop vanishing coefficients."""
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: Dict[KeyT, Fraction] = {}
    for key, coeff in items:
        if coeff:
            acc[key] = acc.get(key, 0) + coeff
    return {key: Fraction(coeff) for key, coeff in acc.items() if coeff}


class SparseVector(Generic[KeyT]):
    """Immutable sparse vector; subclasses fix the shape of the keys."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: "Terms[KeyT]" = ()) -> None:
        self._terms: Dict[KeyT, Fraction] = accumulate(terms)
        self._hash: int | None = None

    # shape ----------------------------------------------------------------

    @property
    def dims(self) -> Tuple[int, ...]:
        raise NotImplementedError

    def _spawn(self, terms: "Terms[KeyT]") -> "Self":
        """Create a vector of the same shape."""
        raise NotImplementedError

    def _check_compatible(self, other: "SparseVector[KeyT]") -> None:
        if type(self) is not type(other) or self.dims != other.dims:
            raise DimensionMismatchError(left=self.dims, right=other.dims)

    # mapping protocol -------------------------------------------------------

    @property
    def terms(self) -> Mapping[KeyT, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[KeyT, Fraction]]:
        return self._terms.items()

    def keys(self) -> Iterable[KeyT]:
        return self._terms.keys()

    def coeff(self, key: KeyT) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator[Tuple[KeyT, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            if other == 0:
                return not self._terms
            return NotImplemented
        return type(self) is type(other) and self.dims == other.dims and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.dims, frozenset(self._terms.items())))
        return self._hash

    # vector space -----------------------------------------------------------

    def __add__(self, other: "Self") -> "Self":
        self._check_compatible(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return self._spawn(acc)

    def __sub__(self, other: "Self") -> "Self":
        self._check_compatible(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) - coeff
        return self._spawn(acc)

    def __neg__(self) -> "Self":
        return self._spawn({key: -coeff for key, coeff in self._terms.items()})

    def scale(self, c: Union[Fraction, int]) -> "Self":
        if not c:
            return self._spawn(())
        return self._spawn({key: c * coeff for key, coeff in self._terms.items()})

    def __rmul__(self, c: Union[Fraction, int]) -> "Self":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def zero(self) -> "Self":
        return self._spawn(())

    def apply(self, op: Callable[[KeyT], Iterable[Tuple[KeyT, Fraction]]]) -> "Self":
        """Extend a map on basis keys linearly."""
        acc: Dict[KeyT, Fraction] = {}
        for key, coeff in self._terms.items():
            for image, c in op(key):
                acc[image] = acc.get(image, 0) + coeff * c
        return self._spawn(acc)


__all__ = (
    "accumulate",
    "KeyT",
    "SparseVector",
    "Terms",
)
