"""The affine Hecke algebra acting on Laurent polynomials.

Two representations are provided. In both, T_i acts by the Demazure-Lusztig
type operator g_{i,i+1}; the commuting elements y_i act either by z_i^-1
(polynomial representation) or by q^{1-N} Y_i, where Y_i are the Cherednik
difference operators built from the xi_{i,j} = K_{i,j} g_{i,j} and p^{D_i}
(difference representation).
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

import sympy
from pydantic import BaseModel
from pydantic import conint
from pydantic import Field

from ._linalg import from_sympy
from .coeffield import ParameterSet
from .exceptions import IndexOutOfRangeError
from .exceptions import InexactDivisionError
from .laurent import Exps
from .laurent import LaurentPoly
from .reports import Report
from .reports import run_check

logger = logging.getLogger(__name__)

MonomialImage = Tuple[Tuple[Exps, Fraction], ...]


class HeckeContext(BaseModel):
    """Number of variables and parameters shared by all Hecke operators."""

    N: conint(ge=1)  # type: ignore[valid-type]
    params: ParameterSet = Field(default_factory=ParameterSet)

    class Config:
        frozen = True

    @property
    def q(self) -> Fraction:
        return self.params.q

    @property
    def p(self) -> Fraction:
        return self.params.p


class Representation(str, Enum):
    """The two affine Hecke algebra representations."""

    polynomial = "polynomial"
    difference = "difference"


# monomial kernels -----------------------------------------------------------


def _replace(exps: Exps, i: int, j: int, a: int, b: int) -> Exps:
    out = list(exps)
    out[i - 1], out[j - 1] = a, b
    return tuple(out)


@lru_cache(maxsize=None)
def _xi_monomial(q: Fraction, i: int, j: int, sign: int, exps: Exps) -> MonomialImage:
    """Closed form of xi_{i,j}^{sign} on a monomial, n_i = exps[i], n_j = exps[j]."""
    a, b = exps[i - 1], exps[j - 1]
    diff = q - 1 / q
    if a == b:
        return ((exps, q**sign),)
    if a < b:
        return ((exps, q ** (-sign)),) + tuple(
            (_replace(exps, i, j, a + t, b - t), -sign * diff) for t in range(1, b - a)
        )
    return ((exps, q**sign), (_replace(exps, i, j, b, a), sign * diff)) + tuple(
        (_replace(exps, i, j, b + t, a - t), sign * diff) for t in range(1, a - b)
    )


@lru_cache(maxsize=None)
def _g_monomial(q: Fraction, i: int, j: int, sign: int, exps: Exps) -> MonomialImage:
    """g_{i,j} = K_{i,j} xi_{i,j}, and g^-1 = g - (q - q^-1)."""
    image = {
        _replace(e, i, j, e[j - 1], e[i - 1]): c for e, c in _xi_monomial(q, i, j, 1, exps)
    }
    if sign < 0:
        image[exps] = image.get(exps, 0) - (q - 1 / q)
    return tuple((e, c) for e, c in image.items() if c)


@lru_cache(maxsize=None)
def _y_monomial(q: Fraction, p: Fraction, N: int, i: int, sign: int, exps: Exps) -> MonomialImage:
    """Y_i^{sign} on a monomial; the displayed product acts right to left."""
    f = LaurentPoly(N, {exps: 1})

    def xi(a: int, b: int, s: int) -> Callable[[Exps], MonomialImage]:
        return lambda e: _xi_monomial(q, a, b, s, e)

    if sign > 0:
        for j in range(i - 1, 0, -1):
            f = f.apply(xi(j, i, 1))
        f = f.dilate(i, p)
        for j in range(N, i, -1):
            f = f.apply(xi(i, j, -1))
    else:
        for j in range(i + 1, N + 1):
            f = f.apply(xi(i, j, 1))
        f = f.dilate(i, 1 / p)
        for j in range(1, i):
            f = f.apply(xi(j, i, -1))
    return tuple(f.items())


def clear_caches() -> None:
    """Drop all memoized monomial images."""
    for cached in (_xi_monomial, _g_monomial, _y_monomial):
        cached.cache_clear()


def _check_pair(ctx: HeckeContext, i: int, j: int) -> None:
    for index in (i, j):
        if not 1 <= index <= ctx.N:
            raise IndexOutOfRangeError(index=index, lower=1, upper=ctx.N)
    if i == j:
        raise ValueError("the operator needs two distinct indices")


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


# operators ------------------------------------------------------------------


def g_apply(ctx: HeckeContext, i: int, j: int, f: LaurentPoly, sign: int = 1) -> LaurentPoly:
    """Apply g_{i,j} (or its inverse) through the closed forms."""
    _check_pair(ctx, i, j)
    _check_sign(sign)
    return f.apply(lambda e: _g_monomial(ctx.q, i, j, sign, e))


def xi_apply(ctx: HeckeContext, i: int, j: int, sign: int, f: LaurentPoly) -> LaurentPoly:
    """Apply xi_{i,j} = K_{i,j} g_{i,j} (sign +1) or xi_{i,j}^-1 = g^-1_{i,j} K_{i,j} (sign -1)."""
    _check_pair(ctx, i, j)
    _check_sign(sign)
    return f.apply(lambda e: _xi_monomial(ctx.q, i, j, sign, e))


def y_apply(ctx: HeckeContext, i: int, sign: int, f: LaurentPoly) -> LaurentPoly:
    """Apply the Cherednik operator Y_i (sign +1) or its inverse (sign -1)."""
    if not 1 <= i <= ctx.N:
        raise IndexOutOfRangeError(index=i, lower=1, upper=ctx.N)
    _check_sign(sign)
    return f.apply(lambda e: _y_monomial(ctx.q, ctx.p, ctx.N, i, sign, e))


def y_power(ctx: HeckeContext, i: int, a: int, f: LaurentPoly) -> LaurentPoly:
    """Apply Y_i^a for any integer a."""
    sign = 1 if a > 0 else -1
    for _ in range(abs(a)):
        f = y_apply(ctx, i, sign, f)
    return f


def leading_coefficient(ctx: HeckeContext, i: int, exps: Exps) -> Fraction:
    """Diagonal coefficient of Y_i on z^exps."""
    return dict(_y_monomial(ctx.q, ctx.p, ctx.N, i, 1, tuple(exps))).get(tuple(exps), Fraction(0))


def g_apply_reference(ctx: HeckeContext, i: int, j: int, f: LaurentPoly) -> LaurentPoly:
    """Slow g_{i,j} through exact division by z_i - z_j, kept to validate the closed forms.

    Raises:
        InexactDivisionError: The division leaves a remainder.
    """
    _check_pair(ctx, i, j)
    N, q = f.nvars, ctx.q
    difference = f.swap_vars(i, j) - f
    if difference.is_zero():
        return f.scale(q)
    shift = [min(0, *(e[k] for e in difference.keys())) for k in range(N)]
    z = sympy.symbols(f"z1:{N + 1}")
    numerator = sympy.Poly.from_dict(
        {
            tuple(e[k] - shift[k] for k in range(N)): sympy.Rational(c.numerator, c.denominator)
            for e, c in difference.items()
        },
        *z,
        domain=sympy.QQ,
    )
    quotient, remainder = numerator.div(sympy.Poly(z[i - 1] - z[j - 1], *z, domain=sympy.QQ))
    if not remainder.is_zero:
        raise InexactDivisionError(InexactDivisionError.msg)
    prefactor = sympy.Poly(
        sympy.Rational(q.denominator, q.numerator) * z[i - 1] - sympy.Rational(q.numerator, q.denominator) * z[j - 1],
        *z,
        domain=sympy.QQ,
    )
    image = LaurentPoly(
        N,
        [
            (tuple(e[k] + shift[k] for k in range(N)), from_sympy(c))
            for e, c in (quotient * prefactor).terms()
        ],
    )
    return image + f.scale(q)


# the two representations ----------------------------------------------------


class HeckeOperators:
    """Generators T_i, y_i of the affine Hecke algebra in one representation.

    Subclasses may override single generators to build negative controls.
    """

    def __init__(self, ctx: HeckeContext, representation: Representation | str) -> None:
        self.ctx = ctx
        self.representation = Representation(representation)
        self._norm = ctx.q ** (1 - ctx.N)

    def t(self, i: int, f: LaurentPoly) -> LaurentPoly:
        return g_apply(self.ctx, i, i + 1, f)

    def t_inv(self, i: int, f: LaurentPoly) -> LaurentPoly:
        return g_apply(self.ctx, i, i + 1, f, sign=-1)

    def y(self, i: int, f: LaurentPoly) -> LaurentPoly:
        if self.representation is Representation.polynomial:
            return f * LaurentPoly.variable(i, self.ctx.N, -1)
        return y_apply(self.ctx, i, 1, f).scale(self._norm)

    def y_inv(self, i: int, f: LaurentPoly) -> LaurentPoly:
        if self.representation is Representation.polynomial:
            return f * LaurentPoly.variable(i, self.ctx.N, 1)
        return y_apply(self.ctx, i, -1, f).scale(1 / self._norm)


def monomial_box(N: int, low: int, high: int) -> List[LaurentPoly]:
    """All monomials z^λ with λ in [low, high]^N."""
    return [LaurentPoly(N, {exps: 1}) for exps in product(range(low, high + 1), repeat=N)]


def verify_hecke_relations(
    ctx: HeckeContext,
    representation: Representation | str,
    corpus: Iterable[LaurentPoly],
    operators: Optional[HeckeOperators] = None,
) -> Report:
    """Check the defining relations of the affine Hecke algebra on a corpus.

    Args:
        ctx (HeckeContext): Number of variables and parameters.
        representation (Representation | str): polynomial (y_i = z_i^-1) or difference (y_i = q^{1-N} Y_i).
        corpus (Iterable[LaurentPoly]): Test polynomials.
        operators (HeckeOperators, optional): Replacement generators, for negative controls.

    Returns:
        Report: One check per relation and index combination.
    """
    ops = operators or HeckeOperators(ctx, representation)
    corpus = list(corpus)
    N, diff = ctx.N, ctx.params.q_diff
    report = Report(suite=f"hecke-{Representation(representation).value}")

    def add(name: str, holds: Callable[[LaurentPoly], bool]) -> None:
        report.checks.append(run_check(name, corpus, holds))

    for i in range(1, N):
        add(
            f"T_{i}^2 = (q-q^-1)T_{i} + 1",
            lambda f, i=i: ops.t(i, ops.t(i, f)) == ops.t(i, f).scale(diff) + f,
        )
        add(f"T_{i} T_{i}^-1 = 1", lambda f, i=i: ops.t(i, ops.t_inv(i, f)) == f)
    for i in range(1, N - 1):
        add(
            f"T_{i} T_{i + 1} T_{i} = T_{i + 1} T_{i} T_{i + 1}",
            lambda f, i=i: ops.t(i, ops.t(i + 1, ops.t(i, f))) == ops.t(i + 1, ops.t(i, ops.t(i + 1, f))),
        )
    for i in range(1, N):
        for j in range(i + 2, N):
            add(f"T_{i} T_{j} = T_{j} T_{i}", lambda f, i=i, j=j: ops.t(i, ops.t(j, f)) == ops.t(j, ops.t(i, f)))
    for i in range(1, N + 1):
        add(f"y_{i} y_{i}^-1 = 1", lambda f, i=i: ops.y(i, ops.y_inv(i, f)) == f)
        for j in range(i + 1, N + 1):
            add(f"y_{i} y_{j} = y_{j} y_{i}", lambda f, i=i, j=j: ops.y(i, ops.y(j, f)) == ops.y(j, ops.y(i, f)))
    for i in range(1, N + 1):
        for j in range(1, N):
            if i in (j, j + 1):
                continue
            add(f"y_{i} T_{j} = T_{j} y_{i}", lambda f, i=i, j=j: ops.y(i, ops.t(j, f)) == ops.t(j, ops.y(i, f)))
    for i in range(1, N):
        add(
            f"T_{i} y_{i} = y_{i + 1} T_{i}^-1",
            lambda f, i=i: ops.t(i, ops.y(i, f)) == ops.y(i + 1, ops.t_inv(i, f)),
        )
    logger.info("hecke relations (%s, N=%d): %s", report.suite, N, "pass" if report.passed else "FAIL")
    return report


__all__ = (
    "clear_caches",
    "g_apply",
    "g_apply_reference",
    "HeckeContext",
    "HeckeOperators",
    "leading_coefficient",
    "monomial_box",
    "Representation",
    "verify_hecke_relations",
    "xi_apply",
    "y_apply",
    "y_power",
)
