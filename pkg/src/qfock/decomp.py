"""Decomposition of the finite wedge product into the blocks E^m.

The basis φ(m, e) = Λ(Φ^m ⊗ v_e) splits the wedge product into the blocks
E^m spanned by φ(m, e) for admissible colors e. Each block is isomorphic to
the evaluation module W^m, a tensor product of fundamental modules V[a, j],
whose Drinfeld polynomials are computed here and cross-checked.
"""
import logging
from fractions import Fraction
from itertools import combinations
from itertools import combinations_with_replacement
from itertools import product
from math import comb
from math import prod
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import sympy
from pydantic import BaseModel
from pydantic import conint
from pydantic import Field
from pydantic import root_validator
from pydantic import validator

from ._linalg import determinant
from ._linalg import rank
from ._sparse import SparseVector
from ._sparse import Terms
from .coeffield import format_scalar
from .coeffield import ParameterSet
from .coeffield import ScalarField
from .exceptions import InadmissibleColorsError
from .exceptions import IndexOutOfRangeError
from .exceptions import NotNondecreasingError
from .exceptions import NotNStrictError
from .exceptions import ParameterDegeneracyError
from .hecke import HeckeContext
from .macdonald import dominance_leq
from .macdonald import dominance_sort_key
from .macdonald import macdonald_poly
from .macdonald import Ordering
from .macdonald import zeta
from .qaffine import all_generators
from .qaffine import color
from .qaffine import Flavor
from .qaffine import GeneratorKind
from .qaffine import GeneratorName
from .qaffine import LevelZeroAction
from .reports import RelationCheck
from .reports import Report
from .reports import run_check
from .wedge import basis_wedges
from .wedge import ColorWord
from .wedge import labels_of
from .wedge import lambda_map
from .wedge import TensorVector
from .wedge import WedgeVector
from .wedge import z_degree

logger = logging.getLogger(__name__)

HAMILTONIAN_POWERS = (-2, -1, 1, 2)


# labels ---------------------------------------------------------------------------


class ModuleLabel(BaseModel):
    """A nondecreasing n-strict sequence m with its block structure."""

    m: Tuple[int, ...]
    n: conint(ge=2)  # type: ignore[valid-type]

    class Config:
        frozen = True

    @validator("m", pre=True)
    def _as_tuple(cls, value):  # noqa: N805
        return tuple(value)

    @root_validator(skip_on_failure=True)
    def _check_sequence(cls, values):  # noqa: N805
        m, n = values["m"], values["n"]
        if any(a > b for a, b in zip(m, m[1:])):
            raise NotNondecreasingError(m=m)
        if any(m.count(value) > n for value in set(m)):
            raise NotNStrictError(m=m, n=n)
        return values

    @property
    def N(self) -> int:  # noqa: N802
        return len(self.m)

    @property
    def splits(self) -> Tuple[int, ...]:
        """r_0 = 0 < r_1 < ... < r_{J+1} = N, the ends of the constant runs."""
        ends = [i + 1 for i in range(self.N - 1) if self.m[i] != self.m[i + 1]]
        return (0, *ends, self.N) if self.N else (0,)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        r = self.splits
        return tuple(b - a for a, b in zip(r, r[1:]))

    @property
    def dim(self) -> int:
        """Π_k binomial(n, r_k - r_{k-1})."""
        return prod(comb(self.n, size) for size in self.block_sizes)

    @property
    def degree(self) -> int:
        return sum(self.m)

    def check_colors(self, e: Sequence[int]) -> ColorWord:
        """Validate e ∈ E(m): strict decrease inside blocks.

        Raises:
            InadmissibleColorsError: e is not admissible.
        """
        e = tuple(e)
        if len(e) != self.N or any(not 1 <= c <= self.n for c in e):
            raise InadmissibleColorsError(e=e, m=self.m)
        if any(self.m[i] == self.m[i + 1] and e[i] <= e[i + 1] for i in range(self.N - 1)):
            raise InadmissibleColorsError(e=e, m=self.m)
        return e

    def __str__(self) -> str:
        return str(self.m)


class LabelWindow(BaseModel):
    """Finite window of labels: entries in [low, high], optionally a set of degrees Σ m_i."""

    low: int
    high: int
    degrees: Optional[Tuple[int, ...]] = Field(default=None, description="admitted values of Σ m_i, all when unset")

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def _ordered(cls, values):  # noqa: N805
        if values["low"] > values["high"]:
            raise ValueError(f"empty window {values['low']}..{values['high']}")
        return values

    def admits(self, degree: int) -> bool:
        return self.degrees is None or degree in self.degrees


def enumerate_labels(N: int, n: int, window: LabelWindow) -> List[ModuleLabel]:
    """All m ∈ M_N^n with entries and degree in the window, sorted lexicographically."""
    labels = [
        ModuleLabel(m=m, n=n)
        for m in combinations_with_replacement(range(window.low, window.high + 1), N)
        if window.admits(sum(m)) and all(m.count(v) <= n for v in set(m))
    ]
    if not labels:
        logger.warning("no labels with N=%d, n=%d in %s", N, n, window)
    return sorted(labels, key=lambda label: label.m)


def enumerate_colors(label: ModuleLabel) -> List[ColorWord]:
    """E(m): colors strictly decreasing inside every block."""
    per_block = [
        [tuple(reversed(c)) for c in combinations(range(1, label.n + 1), size)] for size in label.block_sizes
    ]
    return sorted(tuple(c for part in parts for c in part) for parts in product(*per_block))


# the φ basis ------------------------------------------------------------------------


def phi_vector(label: ModuleLabel, e: Sequence[int], params: ParameterSet) -> WedgeVector:
    """φ(m, e) = Λ(Φ^m ⊗ v_e).

    Raises:
        InadmissibleColorsError: e is not in E(m).
        ParameterDegeneracyError: Φ^m cannot be computed at these parameters.
    """
    e = label.check_colors(e)
    if label.N == 0:
        return WedgeVector(0, label.n, {(): 1})
    phi = macdonald_poly(HeckeContext(N=label.N, params=params), label.m).poly
    return lambda_map(TensorVector.from_poly(phi, e, label.n), params)


def h_eigenvalue(m: Sequence[int], a: int, params: ParameterSet) -> Fraction:
    """h_a(m) = Σ_i p^{a m_i} q^{2a(1-i)}."""
    return sum(
        (params.p ** (a * mi) * params.q ** (2 * a * (1 - i)) for i, mi in enumerate(m, start=1)),
        Fraction(0),
    )


class BasisChangeReport(BaseModel):
    """The φ basis written in the basis of normally ordered wedges."""

    rows: List[Tuple[List[int], List[int]]] = Field(description="labels (m, e) of the φ vectors")
    columns: List[List[int]] = Field(description="index sequences of the normally ordered wedges")
    matrix: List[List[ScalarField]]
    square: bool
    closed: bool = Field(description="every φ is supported inside the window")
    unitriangular: bool
    determinant: ScalarField

    class Config:
        json_encoders = {Fraction: format_scalar}

    @property
    def invertible(self) -> bool:
        return self.square and self.closed and self.determinant != 0


def basis_change_matrix(N: int, n: int, window: LabelWindow, params: ParameterSet) -> BasisChangeReport:
    """Express every φ(m, e) of the window in the normally ordered wedges of the window.

    Raises:
        ParameterDegeneracyError: The matrix is singular.
    """
    labels = enumerate_labels(N, n, window)
    rows = [(label, e) for label in labels for e in enumerate_colors(label)]
    rows.sort(key=lambda row: (dominance_sort_key(row[0].m), row[1]))
    columns = [
        ks for ks in basis_wedges(N, n, range(window.low, window.high + 1)) if window.admits(sum(labels_of(ks, n)[0]))
    ]
    index = {ks: c for c, ks in enumerate(columns)}
    matrix: List[List[Fraction]] = []
    closed, unitriangular = True, True
    for label, e in rows:
        phi = phi_vector(label, e, params)
        row = [Fraction(0)] * len(columns)
        lead = WedgeVector.from_labels(label.m, e, n)
        (lead_ks,) = lead.keys()
        for ks, c in phi.items():
            if ks not in index:
                closed = False
                continue
            row[index[ks]] = c
            m_other = labels_of(ks, n)[0]
            if ks == lead_ks:
                unitriangular &= c == 1
            elif dominance_leq(m_other, label.m) is not Ordering.less:
                unitriangular = False
        unitriangular &= phi.coeff(lead_ks) == 1
        matrix.append(row)
    square = len(rows) == len(columns)
    det = determinant(matrix) if square else Fraction(0)
    logger.debug("basis change matrix %dx%d, det %s", len(rows), len(columns), det)
    if square and closed and det == 0:
        raise ParameterDegeneracyError(f"the basis change matrix of N={N}, n={n}")
    return BasisChangeReport(
        rows=[(list(label.m), list(e)) for label, e in rows],
        columns=[list(ks) for ks in columns],
        matrix=matrix,
        square=square,
        closed=closed,
        unitriangular=unitriangular,
        determinant=det,
    )


class EmBlock(BaseModel):
    """The block E^m: its φ basis, dimension and Hamiltonian eigenvalues."""

    label: ModuleLabel
    colors: List[ColorWord]
    basis: List[WedgeVector]
    h_eigenvalues: Dict[int, ScalarField]

    class Config:
        arbitrary_types_allowed = True

    @property
    def dim(self) -> int:
        return len(self.basis)


def em_block(label: ModuleLabel, params: ParameterSet, powers: Sequence[int] = HAMILTONIAN_POWERS) -> EmBlock:
    colors = enumerate_colors(label)
    return EmBlock(
        label=label,
        colors=colors,
        basis=[phi_vector(label, e, params) for e in colors],
        h_eigenvalues={a: h_eigenvalue(label.m, a, params) for a in powers},
    )


# evaluation modules ----------------------------------------------------------------


class ColorVector(SparseVector[ColorWord]):
    """Element of (C^n)^⊗N, keyed by color words."""

    __slots__ = ("_N", "_n")

    def __init__(self, N: int, n: int, terms: Terms[ColorWord] = ()) -> None:
        super().__init__(terms)
        self._N, self._n = N, n

    @property
    def dims(self) -> Tuple[int, int]:
        return (self._N, self._n)

    def _spawn(self, terms: Terms[ColorWord]) -> "ColorVector":
        return ColorVector(self._N, self._n, terms)

    def __repr__(self) -> str:
        return f"ColorVector({dict(sorted(self._terms.items()))})"


class EvaluationModule:
    """A tensor product of evaluation representations, quotiented inside blocks.

    Inside every block the relations v_k ⊗ v_l ≡ -q v_l ⊗ v_k (k < l) and
    v_k ⊗ v_k ≡ 0 hold, so normal forms are words decreasing inside blocks.
    """

    def __init__(
        self, n: int, points: Sequence[Fraction], block_sizes: Sequence[int], params: ParameterSet
    ) -> None:
        if sum(block_sizes) != len(points):
            raise ValueError("block sizes must add up to the number of evaluation points")
        self.n = n
        self.points = tuple(Fraction(a) for a in points)
        self.block_sizes = tuple(block_sizes)
        self.params = params
        ends = [0]
        for size in self.block_sizes:
            ends.append(ends[-1] + size)
        self._blocks = list(zip(ends, ends[1:]))

    @property
    def N(self) -> int:  # noqa: N802
        return len(self.points)

    @classmethod
    def for_label(cls, label: ModuleLabel, params: ParameterSet) -> "EvaluationModule":
        """W^m with points a_i = q^{N-1} ζ_i(m)^-1."""
        N = label.N
        points = [params.q ** (N - 1) / zeta(label.m, i, params) for i in range(1, N + 1)]
        return cls(label.n, points, label.block_sizes, params)

    @classmethod
    def fundamental(cls, a: Fraction, j: int, n: int, params: ParameterSet) -> "EvaluationModule":
        """V[a, j] with points a, q^-2 a, ..., q^{2-2j} a on a single block."""
        if not 1 <= j <= n - 1:
            raise IndexOutOfRangeError(index=j, lower=1, upper=n - 1)
        return cls(n, [a * params.q ** (-2 * t) for t in range(j)], (j,), params)

    def vector(self, terms: Terms[ColorWord]) -> ColorVector:
        return ColorVector(self.N, self.n, terms)

    def normal_form(self, word: ColorWord) -> List[Tuple[ColorWord, Fraction]]:
        """Sort every block decreasingly, with -q per ascending pair; repeats give 0."""
        q = self.params.q
        out: List[int] = []
        coeff = Fraction(1)
        for start, end in self._blocks:
            block = word[start:end]
            if len(set(block)) < len(block):
                return []
            ascending = sum(1 for x in range(len(block)) for y in range(x + 1, len(block)) if block[x] < block[y])
            coeff *= (-q) ** ascending
            out.extend(sorted(block, reverse=True))
        return [(tuple(out), coeff)]

    def normalize(self, v: ColorVector) -> ColorVector:
        return v.apply(self.normal_form)

    def basis(self) -> List[ColorWord]:
        per_block = [
            [tuple(reversed(c)) for c in combinations(range(1, self.n + 1), size)] for size in self.block_sizes
        ]
        return sorted(tuple(c for part in parts for c in part) for parts in product(*per_block))

    def _weight(self, epsilon: int, colors: Sequence[int]) -> int:
        first, second = color(epsilon, self.n), color(epsilon + 1, self.n)
        return sum(int(c == first) - int(c == second) for c in colors)

    def act(self, gen: GeneratorName | str, v: ColorVector) -> ColorVector:
        """The evaluation action π, followed by the normal form."""
        gen = GeneratorName.parse(gen) if isinstance(gen, str) else gen
        q, eps = self.params.q, gen.index
        delta = int(eps == 0)
        acc: List[Tuple[ColorWord, Fraction]] = []
        for colors, c in v.items():
            if gen.kind in (GeneratorKind.K, GeneratorKind.Kinv):
                sign = 1 if gen.kind is GeneratorKind.K else -1
                acc.append((colors, c * q ** (sign * self._weight(eps, colors))))
                continue
            for i in range(1, self.N + 1):
                if gen.kind is GeneratorKind.E:
                    if colors[i - 1] != color(eps + 1, self.n):
                        continue
                    factor = self.points[i - 1] ** delta * q ** self._weight(eps, colors[i:])
                    target = color(eps, self.n)
                else:
                    if colors[i - 1] != color(eps, self.n):
                        continue
                    factor = self.points[i - 1] ** (-delta) * q ** (-self._weight(eps, colors[: i - 1]))
                    target = color(eps + 1, self.n)
                acc.append((colors[: i - 1] + (target,) + colors[i:], c * factor))
        return self.normalize(self.vector(acc))


def wm_factors(label: ModuleLabel, params: ParameterSet) -> List[Tuple[Fraction, int]]:
    """Factors V[p^{-m_{r_k}} q^{2(r_k - 1)}, r_k - r_{k-1}] of W^m, one per block of size below n."""
    r = label.splits
    return [
        (params.p ** (-label.m[r[k] - 1]) * params.q ** (2 * (r[k] - 1)), r[k] - r[k - 1])
        for k in range(1, len(r))
        if r[k] - r[k - 1] < label.n
    ]


def beta_isomorphism_check(
    label: ModuleLabel,
    params: ParameterSet,
    gens: Optional[Sequence[GeneratorName]] = None,
    module: Optional[EvaluationModule] = None,
) -> Report:
    """Check x.Λ(Φ^m ⊗ v_e) = Λ(Φ^m ⊗ π(m)(x) v_e) for every generator and admissible e.

    Args:
        label (ModuleLabel): The block.
        params (ParameterSet): Parameters.
        gens (Sequence[GeneratorName], optional): Generators, all by default.
        module (EvaluationModule, optional): Replacement for W^m, for negative controls.
    """
    module = module or EvaluationModule.for_label(label, params)
    action = LevelZeroAction(HeckeContext(N=label.N, params=params), label.n, Flavor.U0)
    colors = enumerate_colors(label)
    phis = {e: phi_vector(label, e, params) for e in colors}
    report = Report(suite="beta")

    def transported(x: GeneratorName, e: ColorWord) -> WedgeVector:
        total = WedgeVector(label.N, label.n)
        for e_prime, c in module.act(x, module.vector({e: 1})).items():
            total = total + phis[e_prime].scale(c)
        return total

    for x in gens or all_generators(label.n):
        report.checks.append(
            run_check(
                f"{x} φ{label.m} = φ(π {x})",
                colors,
                lambda e, x=x: action.act_wedge(x, phis[e]) == transported(x, e),
            )
        )
    return report


# Drinfeld polynomials ------------------------------------------------------------------


class DrinfeldData(BaseModel):
    """The n-1 monic Drinfeld polynomials, stored through their roots."""

    n: conint(ge=2)  # type: ignore[valid-type]
    roots: List[List[ScalarField]] = Field(description="roots of P_1, ..., P_{n-1}, sorted")

    class Config:
        json_encoders = {Fraction: format_scalar}

    @validator("roots")
    def _sorted(cls, value):  # noqa: N805
        return [sorted(r) for r in value]

    @classmethod
    def trivial(cls, n: int) -> "DrinfeldData":
        return cls(n=n, roots=[[] for _ in range(n - 1)])

    def polys(self) -> List[sympy.Poly]:
        u = sympy.Symbol("u")
        return [
            sympy.Poly(
                sympy.Mul(*(u - sympy.Rational(r.numerator, r.denominator) for r in roots)),
                u,
                domain=sympy.QQ,
            )
            for roots in self.roots
        ]

    def coefficients(self) -> List[List[Fraction]]:
        """Coefficients of every P_i, leading first."""
        return [[Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()] for poly in self.polys()]

    def __mul__(self, other: "DrinfeldData") -> "DrinfeldData":
        return DrinfeldData(n=self.n, roots=[a + b for a, b in zip(self.roots, other.roots)])


def fundamental_drinfeld(a: Fraction, j: int, n: int, params: ParameterSet) -> DrinfeldData:
    """Drinfeld data of V[a, j]: P_j(u) = u - q^{j-2} a^-1, all others trivial."""
    roots: List[List[Fraction]] = [[] for _ in range(n - 1)]
    roots[j - 1].append(params.q ** (j - 2) / Fraction(a))
    return DrinfeldData(n=n, roots=roots)


def drinfeld_polys(label: ModuleLabel, params: ParameterSet) -> DrinfeldData:
    """P_i(u) = Π over blocks of size i of (u - p^{m_{r_k}} q^{-r_k - r_{k-1}})."""
    r = label.splits
    roots: List[List[Fraction]] = [[] for _ in range(label.n - 1)]
    for k in range(1, len(r)):
        size = r[k] - r[k - 1]
        if size < label.n:
            roots[size - 1].append(params.p ** label.m[r[k] - 1] * params.q ** (-r[k] - r[k - 1]))
    return DrinfeldData(n=label.n, roots=roots)


def drinfeld_multiplicativity_check(label: ModuleLabel, params: ParameterSet) -> RelationCheck:
    """The Drinfeld data of W^m equals the product over its tensor factors."""
    product_data = DrinfeldData.trivial(label.n)
    for a, j in wm_factors(label, params):
        product_data = product_data * fundamental_drinfeld(a, j, label.n, params)
    return run_check(
        f"P(W{label.m}) = Π P(V[a, j])",
        [label],
        lambda _: product_data.polys() == drinfeld_polys(label, params).polys(),
    )


def extract_atilde(a: Fraction, j: int, n: int, params: ParameterSet) -> Fraction:
    """Solve E_0 v = (-1)^{j-1} q^-1 ã^-1 F_{n-1} ... F_{j+1} F_1 ... F_j v for ã in V[a, j].

    Raises:
        ValueError: The two vectors are not proportional.
    """
    module = EvaluationModule.fundamental(a, j, n, params)
    hw = module.normalize(module.vector({tuple(range(1, j + 1)): 1}))
    e0v = module.act(GeneratorName(kind=GeneratorKind.E, index=0), hw)
    fv = hw
    for index in [*range(j, 0, -1), *range(j + 1, n)]:
        fv = module.act(GeneratorName(kind=GeneratorKind.F, index=index), fv)
    if fv.is_zero() or set(fv.keys()) != set(e0v.keys()):
        raise ValueError(f"E0 v and the F-chain image are not proportional in V[{a}, {j}]")
    ratios = {e0v.coeff(key) / fv.coeff(key) for key in fv.keys()}
    if len(ratios) != 1:
        raise ValueError(f"E0 v and the F-chain image are not proportional in V[{a}, {j}]")
    (ratio,) = ratios
    return (-1) ** (j - 1) / (params.q * ratio)


def drinfeld_atilde_check(a: Fraction, j: int, n: int, params: ParameterSet) -> Report:
    """Check ã = q^{j-2} a^-1 for the highest weight vector of V[a, j]."""
    report = Report(suite="drinfeld")
    expected = params.q ** (j - 2) / Fraction(a)
    try:
        atilde = extract_atilde(a, j, n, params)
    except ValueError as error:
        report.checks.append(RelationCheck(relation=f"ã of V[{a}, {j}]", status="fail", checked=1, witness=str(error)))
        return report
    status = "pass" if atilde == expected else "fail"
    report.checks.append(
        RelationCheck(
            relation=f"ã = q^{j - 2} a^-1 for V[{format_scalar(a)}, {j}]",
            status=status,
            checked=1,
            witness=None if status == "pass" else f"ã = {format_scalar(atilde)}, expected {format_scalar(expected)}",
        )
    )
    return report


# irreducibility evidence -----------------------------------------------------------------


def _orbit_rank(
    start: SparseVector,
    act: Callable[[GeneratorName, SparseVector], SparseVector],
    gens: Sequence[GeneratorName],
    limit: Optional[int] = None,
) -> int:
    """Dimension of the span of the orbit of start, stopping once it exceeds limit."""
    spanning = [start]
    frontier = list(spanning)
    current = 1
    while frontier:
        fresh = []
        for v in frontier:
            for x in gens:
                image = act(x, v)
                if image.is_zero():
                    continue
                candidate = (*spanning, image)
                columns = list(dict.fromkeys(key for w in candidate for key in w.keys()))
                grown = rank([[w.coeff(key) for key in columns] for w in candidate], len(columns))
                if grown > current:
                    spanning.append(image)
                    fresh.append(image)
                    current = grown
                if limit is not None and current > limit:
                    return current
        frontier = fresh
    return current


def cyclicity_check(label: ModuleLabel, params: ParameterSet) -> Report:
    """Every φ(m, e) generates E^m under U_0, and every basis vector of W^m generates W^m.

    The orbit of φ(m, e) is spanned in the coordinates of normally ordered wedges.
    """
    gens = all_generators(label.n)
    action = LevelZeroAction(HeckeContext(N=label.N, params=params), label.n, Flavor.U0)
    block = em_block(label, params)
    module = EvaluationModule.for_label(label, params)
    report = Report(suite="cyclicity")
    report.checks.append(
        run_check(
            f"E{label.m} is generated by each φ(m, e) under U_0",
            list(zip(block.colors, block.basis)),
            lambda pair: _orbit_rank(pair[1], action.act_wedge, gens, label.dim) == label.dim,
            describe=lambda pair: f"e = {pair[0]}",
        )
    )
    report.checks.append(
        run_check(
            f"W{label.m} is cyclic from every basis vector",
            module.basis(),
            lambda e: _orbit_rank(module.vector({e: 1}), module.act, gens, label.dim) == label.dim,
        )
    )
    return report


# summaries and the decomposition suite -------------------------------------------------


class BlockSummary(BaseModel):
    """JSON record of one block E^m."""

    m: List[int]
    dim: int
    drinfeld: List[List[ScalarField]] = Field(description="coefficients of P_1, ..., P_{n-1}, leading first")
    h_eigenvalues: Dict[str, ScalarField]

    class Config:
        json_encoders = {Fraction: format_scalar}


def block_summary(label: ModuleLabel, params: ParameterSet, powers: Sequence[int] = HAMILTONIAN_POWERS) -> BlockSummary:
    return BlockSummary(
        m=list(label.m),
        dim=label.dim,
        drinfeld=drinfeld_polys(label, params).coefficients(),
        h_eigenvalues={str(a): h_eigenvalue(label.m, a, params) for a in powers},
    )


def verify_decomposition(N: int, n: int, window: LabelWindow, params: ParameterSet) -> Report:
    """Dimension count, eigenvector property, degree and direct sum bookkeeping on a window."""
    labels = enumerate_labels(N, n, window)
    action = LevelZeroAction(HeckeContext(N=N, params=params), n, Flavor.U0)
    report = Report(suite="decomp")
    report.checks.append(
        run_check("dim E^m = |E(m)|", labels, lambda label: label.dim == len(enumerate_colors(label)))
    )

    def eigen(label: ModuleLabel) -> bool:
        block = em_block(label, params)
        return all(
            action.hamiltonian_wedge(a, phi) == phi.scale(block.h_eigenvalues[a])
            for phi in block.basis
            for a in HAMILTONIAN_POWERS
        )

    report.checks.append(run_check("h_a φ(m, e) = h_a(m) φ(m, e)", labels, eigen))
    report.checks.append(
        run_check(
            "z-degree of φ(m, e) = |m|",
            labels,
            lambda label: all(z_degree(phi) == label.degree for phi in em_block(label, params).basis),
        )
    )
    wedges = [
        ks for ks in basis_wedges(N, n, range(window.low, window.high + 1)) if window.admits(sum(labels_of(ks, n)[0]))
    ]
    report.checks.append(
        run_check(
            "Σ dim E^m = number of normally ordered wedges",
            [window],
            lambda _: sum(label.dim for label in labels) == len(wedges),
        )
    )
    report.checks.append(
        run_check("basis change matrix is invertible", [window], lambda w: basis_change_matrix(N, n, w, params).invertible)
    )
    report.checks.append(
        run_check("Drinfeld data is multiplicative", labels, lambda label: drinfeld_multiplicativity_check(label, params).passed)
    )
    logger.info("decomposition N=%d, n=%d: %s", N, n, "pass" if report.passed else "FAIL")
    return report


__all__ = (
    "basis_change_matrix",
    "BasisChangeReport",
    "beta_isomorphism_check",
    "block_summary",
    "BlockSummary",
    "ColorVector",
    "cyclicity_check",
    "drinfeld_atilde_check",
    "drinfeld_multiplicativity_check",
    "drinfeld_polys",
    "DrinfeldData",
    "em_block",
    "EmBlock",
    "enumerate_colors",
    "enumerate_labels",
    "EvaluationModule",
    "extract_atilde",
    "fundamental_drinfeld",
    "h_eigenvalue",
    "HAMILTONIAN_POWERS",
    "LabelWindow",
    "ModuleLabel",
    "phi_vector",
    "verify_decomposition",
    "wm_factors",
)
