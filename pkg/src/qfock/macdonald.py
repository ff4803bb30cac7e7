"""Nonsymmetric Macdonald polynomials as joint eigenfunctions of the Cherednik operators.

The polynomial Phi^λ is z^λ plus terms that are smaller in the dominance
order. Since every Y_i is lower triangular on monomials, Phi^λ is found by an
exact linear solve on the span of the dominance lower set of λ.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator

from ._linalg import nullspace
from .coeffield import format_scalar
from .coeffield import ParameterSet
from .coeffield import ScalarField
from .exceptions import IndexOutOfRangeError
from .exceptions import LengthMismatchError
from .exceptions import ParameterDegeneracyError
from .exceptions import TriangularityError
from .hecke import g_apply
from .hecke import HeckeContext
from .hecke import y_apply
from .laurent import Exps
from .laurent import LaurentPoly
from .laurent import LaurentPolyModel
from .reports import Report
from .reports import run_check

logger = logging.getLogger(__name__)


class Ordering(str, Enum):
    """Outcome of a dominance comparison."""

    less = "less"
    equal = "equal"
    greater = "greater"
    incomparable = "incomparable"


class Composition(BaseModel):
    """An integer vector λ together with its sorted partition and the permutation σ."""

    entries: Tuple[int, ...]

    class Config:
        frozen = True

    @validator("entries", pre=True)
    def _as_tuple(cls, value):  # noqa: N805
        return tuple(value)

    @classmethod
    def of(cls, value: Union["Composition", Sequence[int]]) -> "Composition":
        return value if isinstance(value, Composition) else cls(entries=tuple(value))

    @property
    def N(self) -> int:  # noqa: N802
        return len(self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    @property
    def partition(self) -> Tuple[int, ...]:
        """λ+, the entries sorted decreasingly."""
        return tuple(sorted(self.entries, reverse=True))

    @property
    def sigma(self) -> Tuple[int, ...]:
        """σ with λ+_{σ(i)} = λ_i, ties resolved by σ(i) < σ(j) for i < j (1-based)."""
        order = sorted(range(self.N), key=lambda k: -self.entries[k])
        sigma = [0] * self.N
        for position, k in enumerate(order, start=1):
            sigma[k] = position
        return tuple(sigma)

    def swapped(self, i: int) -> "Composition":
        """(i, i+1)λ."""
        entries = list(self.entries)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
        return Composition(entries=tuple(entries))

    def __str__(self) -> str:
        return str(self.entries)


CompositionLike = Union[Composition, Sequence[int]]


def _partial_sums(values: Sequence[int]) -> List[int]:
    sums, total = [], 0
    for v in values:
        total += v
        sums.append(total)
    return sums


def dominance_leq(lam: CompositionLike, mu: CompositionLike) -> Ordering:
    """Compare λ and μ in the dominance order.

    λ ≻ μ when λ+ dominates μ+ as partitions, or when λ+ = μ+ and the last
    nonzero entry of λ - μ is negative.

    Raises:
        LengthMismatchError: The compositions have different lengths.
    """
    lam, mu = Composition.of(lam), Composition.of(mu)
    if lam.N != mu.N:
        raise LengthMismatchError(actual_length=mu.N, expected_length=lam.N)
    if lam.entries == mu.entries:
        return Ordering.equal
    if lam.size != mu.size:
        return Ordering.incomparable
    if lam.partition != mu.partition:
        differences = [a - b for a, b in zip(_partial_sums(lam.partition), _partial_sums(mu.partition))]
        if all(d >= 0 for d in differences):
            return Ordering.greater
        if all(d <= 0 for d in differences):
            return Ordering.less
        return Ordering.incomparable
    last = next(a - b for a, b in zip(reversed(lam.entries), reversed(mu.entries)) if a != b)
    return Ordering.greater if last < 0 else Ordering.less


def dominance_sort_key(exps: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Sort key of a linear extension of the dominance order, smallest first."""
    return (tuple(sorted(exps, reverse=True)), tuple(-e for e in reversed(exps)))


def zeta(lam: CompositionLike, i: int, params: ParameterSet) -> Fraction:
    """Eigenvalue ζ_i(λ) = p^{λ_i} q^{2σ(i) - N - 1} of Y_i on Phi^λ."""
    lam = Composition.of(lam)
    if not 1 <= i <= lam.N:
        raise IndexOutOfRangeError(index=i, lower=1, upper=lam.N)
    return params.p ** lam.entries[i - 1] * params.q ** (2 * lam.sigma[i - 1] - lam.N - 1)


def eigenvalue_vector(lam: CompositionLike, params: ParameterSet) -> Tuple[Fraction, ...]:
    lam = Composition.of(lam)
    return tuple(zeta(lam, i, params) for i in range(1, lam.N + 1))


def hamiltonian_eigenvalue(lam: CompositionLike, a: int, params: ParameterSet) -> Fraction:
    """Σ_i (q^{1-N} ζ_i(λ))^a, the eigenvalue of h_a on Phi^λ."""
    lam = Composition.of(lam)
    norm = params.q ** (1 - lam.N)
    return sum(((norm * z) ** a for z in eigenvalue_vector(lam, params)), Fraction(0))


def lower_set(lam: CompositionLike) -> List[Composition]:
    """All μ ⪯ λ, sorted along a linear extension of the dominance order."""
    lam = Composition.of(lam)
    if lam.N == 0:
        return [lam]
    low, high = min(lam.entries), max(lam.entries)
    members = [
        exps
        for exps in product(range(low, high + 1), repeat=lam.N)
        if sum(exps) == lam.size and dominance_leq(exps, lam) in (Ordering.less, Ordering.equal)
    ]
    return [Composition(entries=exps) for exps in sorted(members, key=dominance_sort_key)]


class MacdonaldPolyModel(BaseModel):
    """JSON shape of a nonsymmetric Macdonald polynomial."""

    label: List[int]
    eigenvalues: List[ScalarField]
    poly: LaurentPolyModel

    class Config:
        json_encoders = {Fraction: format_scalar}


class MacdonaldPoly(BaseModel):
    """Phi^λ with its label."""

    label: Composition
    poly: LaurentPoly
    params: ParameterSet = Field(default_factory=ParameterSet)

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    def to_model(self) -> MacdonaldPolyModel:
        return MacdonaldPolyModel(
            label=list(self.label.entries),
            eigenvalues=list(eigenvalue_vector(self.label, self.params)),
            poly=self.poly.to_model(),
        )


@lru_cache(maxsize=None)
def _solve(N: int, entries: Tuple[int, ...], params: ParameterSet) -> Tuple[Tuple[Exps, Fraction], ...]:
    ctx = HeckeContext(N=N, params=params)
    basis = [mu.entries for mu in lower_set(entries)]
    index: Dict[Exps, int] = {mu: c for c, mu in enumerate(basis)}
    rows: List[List[Fraction]] = []
    for i in range(1, N + 1):
        eigenvalue = zeta(entries, i, params)
        block: Dict[Exps, List[Fraction]] = {}
        for c, mu in enumerate(basis):
            image = y_apply(ctx, i, 1, LaurentPoly(N, {mu: 1})) - LaurentPoly(N, {mu: eigenvalue})
            for nu, coeff in image.items():
                if nu not in index:
                    raise TriangularityError(entries, nu)
                block.setdefault(nu, [Fraction(0)] * len(basis))[c] = coeff
        rows.extend(block.values())
    logger.debug("macdonald solve for %s: %d unknowns, %d equations", entries, len(basis), len(rows))
    kernel = nullspace(rows, len(basis))
    if len(kernel) != 1:
        raise ParameterDegeneracyError(f"the eigenvalue system of {entries} (kernel dimension {len(kernel)})")
    vector = kernel[0]
    lead = vector[index[entries]]
    if lead == 0:
        raise ParameterDegeneracyError(f"the normalization of {entries}")
    return tuple((mu, c / lead) for mu, c in zip(basis, vector) if c)


def macdonald_poly(ctx: HeckeContext, lam: CompositionLike) -> MacdonaldPoly:
    """Compute Phi^λ, memoized per (N, λ, q, p).

    Raises:
        LengthMismatchError: λ does not have ctx.N entries.
        ParameterDegeneracyError: The eigenvalue system is singular.
    """
    lam = Composition.of(lam)
    if lam.N != ctx.N:
        raise LengthMismatchError(actual_length=lam.N, expected_length=ctx.N)
    terms = _solve(ctx.N, lam.entries, ctx.params)
    return MacdonaldPoly(label=lam, poly=LaurentPoly(ctx.N, terms), params=ctx.params)


def clear_cache() -> None:
    _solve.cache_clear()


def hecke_coeffs(lam: CompositionLike, i: int, params: ParameterSet) -> Tuple[Fraction, Fraction]:
    """Coefficients of g_{i,i+1} Phi^λ = A_i Phi^λ + B_i Phi^{(i,i+1)λ}.

    Raises:
        IndexOutOfRangeError: i is not in [1, N-1].
        ParameterDegeneracyError: x = ζ_{i+1}/ζ_i equals 1.
    """
    lam = Composition.of(lam)
    if not 1 <= i <= lam.N - 1:
        raise IndexOutOfRangeError(index=i, lower=1, upper=lam.N - 1)
    q = params.q
    left, right = lam.entries[i - 1], lam.entries[i]
    if left == right:
        return q, Fraction(0)
    x = zeta(lam, i + 1, params) / zeta(lam, i, params)
    if x == 1:
        raise ParameterDegeneracyError(f"the Hecke coefficients of {lam.entries} at i={i}")
    a_coeff = params.q_diff * x / (x - 1)
    if left < right:
        return a_coeff, 1 / q
    braces = (x - q**2) * (q**2 * x - 1) / (x - 1) ** 2
    return a_coeff, braces / q


def hecke_recursion_step(ctx: HeckeContext, lam: CompositionLike, i: int) -> MacdonaldPoly:
    """Obtain Phi^{(i,i+1)λ} from Phi^λ by solving the Hecke action formula.

    Raises:
        ValueError: λ_i = λ_{i+1}, so the formula does not reach another polynomial.
        ParameterDegeneracyError: B_i(λ) vanishes.
    """
    lam = Composition.of(lam)
    if lam.entries[i - 1] == lam.entries[i]:
        raise ValueError("the Hecke recursion needs λ_i != λ_{i+1}")
    a_coeff, b_coeff = hecke_coeffs(lam, i, ctx.params)
    if b_coeff == 0:
        raise ParameterDegeneracyError(f"the Hecke recursion from {lam.entries} at i={i}")
    phi = macdonald_poly(ctx, lam).poly
    image = (g_apply(ctx, i, i + 1, phi) - phi.scale(a_coeff)).scale(1 / b_coeff)
    return MacdonaldPoly(label=lam.swapped(i), poly=image, params=ctx.params)


def check_triangularity(ctx: HeckeContext, i: int, lam: CompositionLike) -> bool:
    """Y_i z^λ - ζ_i(λ) z^λ is supported strictly below λ."""
    lam = Composition.of(lam)
    image = y_apply(ctx, i, 1, LaurentPoly(ctx.N, {lam.entries: 1}))
    image = image - LaurentPoly(ctx.N, {lam.entries: zeta(lam, i, ctx.params)})
    return all(dominance_leq(mu, lam) is Ordering.less for mu in image.keys())


def is_unitriangular(phi: MacdonaldPoly) -> bool:
    lead = phi.label.entries
    return phi.poly.coeff(lead) == 1 and all(
        dominance_leq(mu, lead) is Ordering.less for mu in phi.poly.keys() if mu != lead
    )


def verify_macdonald(ctx: HeckeContext, low: int, high: int) -> Report:
    """Eigen-property, unitriangularity and the Hecke action formula for λ in [low, high]^N."""
    labels = [Composition(entries=exps) for exps in product(range(low, high + 1), repeat=ctx.N)]
    params = ctx.params
    report = Report(suite="macdonald")

    def phi(lam: Composition) -> LaurentPoly:
        return macdonald_poly(ctx, lam).poly

    for i in range(1, ctx.N + 1):
        report.checks.append(
            run_check(
                f"Y{i} Phi = ζ{i} Phi",
                labels,
                lambda lam, i=i: y_apply(ctx, i, 1, phi(lam)) == phi(lam).scale(zeta(lam, i, params)),
            )
        )
        report.checks.append(
            run_check(f"Y{i} is triangular on monomials", labels, lambda lam, i=i: check_triangularity(ctx, i, lam))
        )
    report.checks.append(run_check("Phi is unitriangular", labels, lambda lam: is_unitriangular(macdonald_poly(ctx, lam))))

    def hecke_identity(lam: Composition, i: int) -> bool:
        a_coeff, b_coeff = hecke_coeffs(lam, i, params)
        expected = phi(lam).scale(a_coeff)
        if b_coeff:
            expected = expected + phi(lam.swapped(i)).scale(b_coeff)
        return g_apply(ctx, i, i + 1, phi(lam)) == expected

    for i in range(1, ctx.N):
        report.checks.append(
            run_check(f"g{i} Phi = A{i} Phi + B{i} Phi^s", labels, lambda lam, i=i: hecke_identity(lam, i))
        )
        report.checks.append(
            run_check(
                f"Hecke recursion reproduces Phi at i={i}",
                [lam for lam in labels if lam.entries[i - 1] != lam.entries[i]],
                lambda lam, i=i: hecke_recursion_step(ctx, lam, i).poly == phi(lam.swapped(i)),
            )
        )
    spectra = {eigenvalue_vector(lam, params): lam for lam in labels}
    report.checks.append(
        run_check("eigenvalues separate compositions", [len(labels)], lambda count: len(spectra) == count)
    )
    logger.info("macdonald suite (N=%d, box %d..%d): %s", ctx.N, low, high, "pass" if report.passed else "FAIL")
    return report


__all__ = (
    "check_triangularity",
    "clear_cache",
    "Composition",
    "dominance_leq",
    "dominance_sort_key",
    "eigenvalue_vector",
    "hamiltonian_eigenvalue",
    "hecke_coeffs",
    "hecke_recursion_step",
    "is_unitriangular",
    "lower_set",
    "macdonald_poly",
    "MacdonaldPoly",
    "MacdonaldPolyModel",
    "Ordering",
    "verify_macdonald",
    "zeta",
)
