"""The q-wedge product: tensors, the operator S, normal ordering and the quotient map.

A pure tensor z^m ⊗ v_e is identified with the formal wedge of the indices
k_i = ε_i - n m_i. Wedges are straightened into the basis of normally ordered
(strictly decreasing) index sequences by the two rewrite rules on adjacent
factors, the other factors being passive spectators.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypeAlias

from pydantic import BaseModel
from pydantic import conint
from pydantic import Field
from pydantic import root_validator

from ._sparse import SparseVector
from ._sparse import Terms
from .coeffield import format_scalar
from .coeffield import ParameterSet
from .coeffield import ScalarField
from .exceptions import IndexOutOfRangeError
from .exceptions import LengthMismatchError
from .exceptions import MixedDegreeError
from .hecke import g_apply
from .hecke import HeckeContext
from .laurent import Exps
from .laurent import LaurentPoly
from .reports import Report
from .reports import run_check

logger = logging.getLogger(__name__)

ColorWord: TypeAlias = Tuple[int, ...]
TensorKey: TypeAlias = Tuple[Exps, ColorWord]
WedgeIndex: TypeAlias = Tuple[int, ...]


class Strategy(str, Enum):
    """Which disordered adjacent pair is rewritten first."""

    leftmost = "leftmost"
    rightmost = "rightmost"


# index coding -----------------------------------------------------------------


def encode_index(m: int, epsilon: int, n: int) -> int:
    """k = ε - n m."""
    if not 1 <= epsilon <= n:
        raise IndexOutOfRangeError(index=epsilon, lower=1, upper=n)
    return epsilon - n * m


def decode_index(k: int, n: int) -> Tuple[int, int]:
    """Invert k = ε - n m with ε in {1, ..., n}.

    Returns:
        Tuple[int, int]: The pair (m, ε).
    """
    epsilon = (k - 1) % n + 1
    return (epsilon - k) // n, epsilon


def is_normally_ordered(ks: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(ks, ks[1:]))


# vectors ----------------------------------------------------------------------


class TensorVector(SparseVector[TensorKey]):
    """Element of C[z^±1] ⊗ (C^n)^⊗N, stored as (exponents, colors) -> coefficient."""

    __slots__ = ("_N", "_n")

    def __init__(self, N: int, n: int, terms: Terms[TensorKey] = ()) -> None:
        super().__init__(terms)
        self._N, self._n = N, n
        for exps, colors in self._terms:
            if len(exps) != N or len(colors) != N:
                raise LengthMismatchError(actual_length=max(len(exps), len(colors)), expected_length=N)
            for c in colors:
                if not 1 <= c <= n:
                    raise IndexOutOfRangeError(index=c, lower=1, upper=n)

    @property
    def N(self) -> int:  # noqa: N802
        return self._N

    @property
    def n(self) -> int:
        return self._n

    @property
    def dims(self) -> Tuple[int, int]:
        return (self._N, self._n)

    def _spawn(self, terms: Terms[TensorKey]) -> "TensorVector":
        return TensorVector(self._N, self._n, terms)

    @classmethod
    def pure(cls, exps: Sequence[int], colors: Sequence[int], n: int, coeff: Fraction = Fraction(1)) -> "TensorVector":
        return cls(len(exps), n, {(tuple(exps), tuple(colors)): coeff})

    @classmethod
    def from_poly(cls, poly: LaurentPoly, colors: Sequence[int], n: int) -> "TensorVector":
        """f ⊗ v_e."""
        colors = tuple(colors)
        return cls(poly.nvars, n, [((exps, colors), c) for exps, c in poly.items()])

    def components(self) -> Dict[ColorWord, LaurentPoly]:
        """Split into color words with their polynomial coefficients."""
        parts: Dict[ColorWord, Dict[Exps, Fraction]] = {}
        for (exps, colors), coeff in self._terms.items():
            parts.setdefault(colors, {})[exps] = coeff
        return {colors: LaurentPoly(self._N, t) for colors, t in sorted(parts.items())}

    def map_poly(self, op: Callable[[LaurentPoly], LaurentPoly]) -> "TensorVector":
        """Apply a linear operator on C[z^±1] to the polynomial part."""
        acc: List[Tuple[TensorKey, Fraction]] = []
        for colors, poly in self.components().items():
            acc.extend(((exps, colors), c) for exps, c in op(poly).items())
        return self._spawn(acc)

    def __repr__(self) -> str:
        return f"TensorVector(N={self._N}, n={self._n}, {dict(sorted(self._terms.items()))})"


class WedgeTermModel(BaseModel):
    ks: List[int]
    coeff: ScalarField


class WedgeVectorModel(BaseModel):
    """JSON shape of a wedge vector."""

    N: conint(ge=0)  # type: ignore[valid-type]
    n: conint(ge=2)  # type: ignore[valid-type]
    terms: List[WedgeTermModel] = Field(default_factory=list)

    class Config:
        json_encoders = {Fraction: format_scalar}

    @root_validator(skip_on_failure=True)
    def _term_lengths(cls, values):  # noqa: N805
        for term in values["terms"]:
            if len(term.ks) != values["N"]:
                raise LengthMismatchError(actual_length=len(term.ks), expected_length=values["N"])
        return values


class WedgeVector(SparseVector[WedgeIndex]):
    """Combination of normally ordered wedges u_{k_1} ∧ ... ∧ u_{k_N}."""

    __slots__ = ("_N", "_n")

    def __init__(self, N: int, n: int, terms: Terms[WedgeIndex] = ()) -> None:
        super().__init__(terms)
        self._N, self._n = N, n
        for ks in self._terms:
            if len(ks) != N:
                raise LengthMismatchError(actual_length=len(ks), expected_length=N)
            if not is_normally_ordered(ks):
                raise ValueError(f"wedge {ks} is not normally ordered")

    @property
    def N(self) -> int:  # noqa: N802
        return self._N

    @property
    def n(self) -> int:
        return self._n

    @property
    def dims(self) -> Tuple[int, int]:
        return (self._N, self._n)

    def _spawn(self, terms: Terms[WedgeIndex]) -> "WedgeVector":
        return WedgeVector(self._N, self._n, terms)

    @classmethod
    def basis(cls, ks: Sequence[int], n: int) -> "WedgeVector":
        return cls(len(ks), n, {tuple(ks): 1})

    @classmethod
    def from_labels(cls, m: Sequence[int], e: Sequence[int], n: int) -> "WedgeVector":
        """w(m, e), which must be normally ordered."""
        return cls.basis([encode_index(mi, ei, n) for mi, ei in zip(m, e)], n)

    def sorted_terms(self) -> List[Tuple[WedgeIndex, Fraction]]:
        return sorted(self._terms.items())

    def to_model(self) -> WedgeVectorModel:
        return WedgeVectorModel(
            N=self._N,
            n=self._n,
            terms=[WedgeTermModel(ks=list(ks), coeff=c) for ks, c in self.sorted_terms()],
        )

    @classmethod
    def from_model(cls, model: WedgeVectorModel) -> "WedgeVector":
        return cls(model.N, model.n, [(tuple(t.ks), t.coeff) for t in model.terms])

    def __repr__(self) -> str:
        return f"WedgeVector(N={self._N}, n={self._n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{format_scalar(c)}*" + "^".join(f"u{k}" for k in ks) if ks else format_scalar(c)
            for ks, c in self.sorted_terms()
        )


def labels_of(ks: Sequence[int], n: int) -> Tuple[Tuple[int, ...], ColorWord]:
    """The sequences (m, e) of a wedge index sequence."""
    decoded = [decode_index(k, n) for k in ks]
    return tuple(m for m, _ in decoded), tuple(e for _, e in decoded)


def z_degree(w: WedgeVector) -> int:
    """Common value of Σ m_i over the terms of w.

    Raises:
        MixedDegreeError: The terms have different degrees.
    """
    degrees = sorted({sum(labels_of(ks, w.n)[0]) for ks in w.keys()})
    if len(degrees) > 1:
        raise MixedDegreeError(degrees=degrees)
    return degrees[0] if degrees else 0


def basis_wedges(N: int, n: int, entries: Sequence[int]) -> List[WedgeIndex]:
    """All normally ordered index sequences whose m-entries lie in the given range."""
    low, high = min(entries), max(entries)
    indices = range(n - n * low, -n * high, -1)
    return sorted(combinations(indices, N))


# the finite Hecke algebra on colors -------------------------------------------


def _s_pair(q: Fraction, a: int, b: int) -> Tuple[Tuple[Tuple[int, int], Fraction], ...]:
    if a == b:
        return (((a, a), -1 / q),)
    if a < b:
        return (((a, b), q - 1 / q), ((b, a), Fraction(-1)))
    return (((b, a), Fraction(-1)),)


def s_apply(params: ParameterSet, i: int, v: TensorVector, sign: int = 1) -> TensorVector:
    """Apply S_{i,i+1} (sign +1) or S^-1 = S - (q - q^-1) (sign -1) on the color factors.

    Raises:
        IndexOutOfRangeError: i is not in [1, N-1].
    """
    if not 1 <= i <= v.N - 1:
        raise IndexOutOfRangeError(index=i, lower=1, upper=v.N - 1)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    q = params.q

    def op(key: TensorKey) -> List[Tuple[TensorKey, Fraction]]:
        exps, colors = key
        out = []
        for (a, b), c in _s_pair(q, colors[i - 1], colors[i]):
            out.append(((exps, colors[: i - 1] + (a, b) + colors[i + 1 :]), c))
        if sign < 0:
            out.append((key, -(q - 1 / q)))
        return out

    return v.apply(op)


def g_tensor(ctx: HeckeContext, i: int, v: TensorVector, sign: int = 1) -> TensorVector:
    """g_{i,i+1}^{sign} on the polynomial part."""
    return v.map_poly(lambda f: g_apply(ctx, i, i + 1, f, sign=sign))


def swap_tensor(i: int, v: TensorVector) -> TensorVector:
    """K_{i,i+1} on the polynomial part."""
    return v.map_poly(lambda f: f.swap_vars(i, i + 1))


def kms_generator(ctx: HeckeContext, i: int, f: TensorVector) -> TensorVector:
    """T_i = q K_{i,i+1}(g_{i,i+1} + S^-1_{i,i+1}) - I, the Hecke generator of the other convention."""
    if not 1 <= i <= f.N - 1:
        raise IndexOutOfRangeError(index=i, lower=1, upper=f.N - 1)
    inner = g_tensor(ctx, i, f) + s_apply(ctx.params, i, f, sign=-1)
    return swap_tensor(i, inner).scale(ctx.q) - f


# normal ordering ----------------------------------------------------------------


def _rewrite_pair(l: int, m: int, n: int, q: Fraction) -> List[Tuple[Tuple[int, int], Fraction]]:
    """Express u_l ∧ u_m with l <= m through ordered pairs."""
    if l == m:
        return []
    if (m - l) % n == 0:
        return [((m, l), Fraction(-1))]
    i = (m - l) % n
    out: List[Tuple[Tuple[int, int], Fraction]] = [((m, l), -q)]
    t = 0
    while True:
        shift = (t // 2) * n + i if t % 2 == 0 else (t // 2 + 1) * n
        if m - shift <= l + shift:
            break
        out.append(((m - shift, l + shift), (q * q - 1) * (-q) ** t))
        t += 1
    return out


def _disordered_pair(ks: WedgeIndex, strategy: Strategy) -> int:
    positions = range(len(ks) - 1) if strategy is Strategy.leftmost else range(len(ks) - 2, -1, -1)
    return next((j for j in positions if ks[j] <= ks[j + 1]), -1)


@lru_cache(maxsize=None)
def _straighten(ks: WedgeIndex, n: int, q: Fraction, strategy: Strategy) -> Tuple[Tuple[WedgeIndex, Fraction], ...]:
    j = _disordered_pair(ks, strategy)
    if j < 0:
        return ((ks, Fraction(1)),)
    acc: Dict[WedgeIndex, Fraction] = {}
    for (a, b), c in _rewrite_pair(ks[j], ks[j + 1], n, q):
        for target, d in _straighten(ks[:j] + (a, b) + ks[j + 2 :], n, q, strategy):
            acc[target] = acc.get(target, 0) + c * d
    return tuple((key, c) for key, c in acc.items() if c)


def normal_order(
    ks: Sequence[int],
    n: int,
    params: ParameterSet,
    strategy: Strategy | str = Strategy.leftmost,
) -> WedgeVector:
    """Rewrite the formal wedge u_{k_1} ∧ ... ∧ u_{k_N} in the normally ordered basis."""
    ks = tuple(ks)
    return WedgeVector(len(ks), n, _straighten(ks, n, params.q, Strategy(strategy)))


def clear_cache() -> None:
    _straighten.cache_clear()


def lambda_map(v: TensorVector, params: ParameterSet) -> WedgeVector:
    """The quotient map Λ, extended linearly from pure tensors."""
    acc: Dict[WedgeIndex, Fraction] = {}
    for (exps, colors), coeff in v.items():
        ks = tuple(encode_index(m, e, v.n) for m, e in zip(exps, colors))
        for target, c in _straighten(ks, v.n, params.q, Strategy.leftmost):
            acc[target] = acc.get(target, 0) + coeff * c
    return WedgeVector(v.N, v.n, acc)


def canonical_lift(w: WedgeVector) -> TensorVector:
    """Section of Λ sending w(m, e) to the pure tensor z^m ⊗ v_e."""
    return TensorVector(w.N, w.n, [(labels_of(ks, w.n), c) for ks, c in w.items()])


def verify_wedge_relations(
    ctx: HeckeContext,
    n: int,
    tensors: Sequence[TensorVector],
    sequences: Sequence[Sequence[int]],
) -> Report:
    """Check the quotient, the straightening and the Hecke generator of the other convention.

    Args:
        ctx (HeckeContext): Number of factors and parameters.
        n (int): Number of colors.
        tensors (Sequence[TensorVector]): Test tensors.
        sequences (Sequence[Sequence[int]]): Test index sequences, not necessarily ordered.

    Returns:
        Report: One check per identity.
    """
    params, q, N = ctx.params, ctx.q, ctx.N
    report = Report(suite="wedge")

    def t(i: int, f: TensorVector) -> TensorVector:
        return kms_generator(ctx, i, f)

    for i in range(1, N):
        report.checks.append(
            run_check(
                f"Λ((g{i} - S{i}) f) = 0",
                tensors,
                lambda f, i=i: lambda_map(g_tensor(ctx, i, f) - s_apply(params, i, f), params).is_zero(),
            )
        )
        report.checks.append(
            run_check(f"S{i} S{i}^-1 = 1", tensors, lambda f, i=i: s_apply(params, i, s_apply(params, i, f, -1)) == f)
        )
        report.checks.append(
            run_check(
                f"(T{i} + 1)(T{i} - q^2) = 0",
                tensors,
                lambda f, i=i: (t(i, t(i, f)) - t(i, f).scale(q * q - 1) - f.scale(q * q)).is_zero(),
            )
        )
        report.checks.append(
            run_check(
                f"T{i} = -1 on (g{i} - S{i}) f",
                tensors,
                lambda f, i=i: t(i, g_tensor(ctx, i, f) - s_apply(params, i, f))
                == -(g_tensor(ctx, i, f) - s_apply(params, i, f)),
            )
        )
    for i in range(1, N - 1):
        report.checks.append(
            run_check(
                f"T{i} T{i + 1} T{i} = T{i + 1} T{i} T{i + 1}",
                tensors,
                lambda f, i=i: t(i, t(i + 1, t(i, f))) == t(i + 1, t(i, t(i + 1, f))),
            )
        )
    report.checks.append(
        run_check(
            "leftmost and rightmost straightening agree",
            sequences,
            lambda ks: normal_order(ks, n, params, Strategy.leftmost) == normal_order(ks, n, params, Strategy.rightmost),
        )
    )
    report.checks.append(
        run_check(
            "normal ordering is idempotent",
            sequences,
            lambda ks: all(
                normal_order(target, n, params) == WedgeVector.basis(target, n)
                for target in normal_order(ks, n, params).keys()
            ),
        )
    )
    report.checks.append(
        run_check(
            "Λ ∘ lift = id",
            sequences,
            lambda ks: lambda_map(canonical_lift(normal_order(ks, n, params)), params) == normal_order(ks, n, params),
        )
    )
    logger.info("wedge relations (N=%d, n=%d): %s", N, n, "pass" if report.passed else "FAIL")
    return report


__all__ = (
    "basis_wedges",
    "canonical_lift",
    "clear_cache",
    "ColorWord",
    "decode_index",
    "encode_index",
    "g_tensor",
    "is_normally_ordered",
    "kms_generator",
    "labels_of",
    "lambda_map",
    "normal_order",
    "s_apply",
    "Strategy",
    "swap_tensor",
    "TensorKey",
    "TensorVector",
    "verify_wedge_relations",
    "WedgeIndex",
    "WedgeVector",
    "WedgeVectorModel",
    "z_degree",
)
