"""Exact linear algebra over the rationals, delegated to sympy's DomainMatrix."""
import logging
from fractions import Fraction
from typing import List
from typing import Sequence

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Row = Sequence[Fraction]


def to_qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """Convert a sympy Rational (or Integer) into a Fraction."""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def domain_matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    return DomainMatrix([[to_qq(c) for c in row] for row in rows], (len(rows), ncols), QQ)


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of the right kernel of the matrix with the given rows.

    Args:
        rows (Sequence[Row]): Matrix rows, each of length ncols.
        ncols (int): Number of unknowns.

    Returns:
        List[List[Fraction]]: Basis vectors, one per free column of the reduced echelon form.
    """
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = domain_matrix(rows, ncols).rref()
    dense = reduced.to_Matrix()
    logger.debug("nullspace of a %dx%d system, rank %d", len(rows), ncols, len(pivots))
    basis: List[List[Fraction]] = []
    for free in (c for c in range(ncols) if c not in pivots):
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for r, pivot in enumerate(pivots):
            vector[pivot] = -from_sympy(dense[r, free])
        basis.append(vector)
    return basis


def rank(rows: Sequence[Row], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return int(domain_matrix(rows, ncols).rank())


def determinant(rows: Sequence[Row]) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(1)
    return from_sympy(QQ.to_sympy(domain_matrix(rows, size).det()))


__all__ = (
    "determinant",
    "domain_matrix",
    "from_sympy",
    "nullspace",
    "rank",
    "to_qq",
)
