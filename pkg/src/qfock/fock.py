"""The Fock space F_M of semi-infinite wedges and its level-0 action.

A semi-infinite wedge of degree k is stored through a head of width s + n r,
r >= k, followed by the vacuum tail |M - s - n r>. The projection ρ drops a
trailing vacuum block; it is bijective in degree k once r >= k, so the
level-0 action and the Hamiltonians g_l on F_M are computed on the head at
width s + n k.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

from pydantic import BaseModel
from pydantic import conint
from pydantic import Field
from pydantic import root_validator

from .coeffield import format_scalar
from .coeffield import ParameterSet
from .coeffield import ScalarField
from .decomp import drinfeld_polys
from .decomp import enumerate_colors
from .decomp import HAMILTONIAN_POWERS
from .decomp import h_eigenvalue
from .decomp import ModuleLabel
from .decomp import phi_vector
from .exceptions import LengthMismatchError
from .exceptions import MixedDegreeError
from .exceptions import StabilizationError
from .exceptions import VacuumBoundError
from .hecke import HeckeContext
from .qaffine import all_generators
from .qaffine import Flavor
from .qaffine import GeneratorKind
from .qaffine import GeneratorName
from .qaffine import LevelZeroAction
from .reports import Report
from .reports import run_check
from .wedge import encode_index
from .wedge import labels_of
from .wedge import WedgeIndex
from .wedge import WedgeVector

logger = logging.getLogger(__name__)


class FockLabel(BaseModel):
    """The charge M of F_M together with n; s = M mod n and m^0 = (s - M)/n."""

    M: int
    n: conint(ge=2)  # type: ignore[valid-type]

    class Config:
        frozen = True

    @property
    def s(self) -> int:
        return self.M % self.n

    @property
    def m_base(self) -> int:
        return (self.s - self.M) // self.n

    def width(self, r: int) -> int:
        return self.s + self.n * r

    def r_of_width(self, width: int) -> int:
        r, rest = divmod(width - self.s, self.n)
        if rest or r < 0:
            raise LengthMismatchError(actual_length=width, expected_length=self.width(max(r, 0)))
        return r

    def vacuum_m(self, r: int) -> Tuple[int, ...]:
        """m^0 = (m^0 × s, (m^0 + 1) × n, ..., (m^0 + r) × n)."""
        head = (self.m_base,) * self.s
        return head + tuple(self.m_base + t for t in range(1, r + 1) for _ in range(self.n))

    def vacuum_e(self, r: int) -> Tuple[int, ...]:
        return tuple(range(self.s, 0, -1)) + tuple(range(self.n, 0, -1)) * r

    def vacuum_ks(self, r: int) -> WedgeIndex:
        return tuple(range(self.M, self.M - self.width(r), -1))

    def vacuum_m_at(self, i: int) -> int:
        """m^0_i of the semi-infinite vacuum sequence, i counted from 1."""
        if i <= self.s:
            return self.m_base
        return self.m_base + (i - self.s - 1) // self.n + 1


def vacuum_wedge(M: int, n: int, r: int) -> WedgeVector:
    """u_M ∧ u_{M-1} ∧ ... ∧ u_{M-(s+nr)+1}."""
    label = FockLabel(M=M, n=n)
    return WedgeVector.basis(label.vacuum_ks(r), n)


def in_vm(label: FockLabel, ks: Sequence[int]) -> bool:
    """m_N <= m^0_N for the head of width N."""
    if not ks:
        return True
    return labels_of(ks, label.n)[0][-1] <= label.vacuum_m_at(len(ks))


def wedge_degree(label: FockLabel, ks: Sequence[int]) -> int:
    """|w(m, e)| = Σ_i m^0_i - m_i."""
    m, _ = labels_of(ks, label.n)
    return sum(label.vacuum_m_at(i) - mi for i, mi in enumerate(m, start=1))


def degree(w: WedgeVector, M: int) -> int:
    """Common degree of the terms of w, a head of width s + n r.

    Raises:
        VacuumBoundError: A term violates m_N <= m^0_N.
        MixedDegreeError: The terms have different degrees.
    """
    label = FockLabel(M=M, n=w.n)
    label.r_of_width(w.N)
    for ks in w.keys():
        if not in_vm(label, ks):
            raise VacuumBoundError(ks=ks, M=M)
    degrees = sorted({wedge_degree(label, ks) for ks in w.keys()})
    if len(degrees) > 1:
        raise MixedDegreeError(degrees=degrees)
    return degrees[0] if degrees else 0


# graded bases ------------------------------------------------------------------------------


def _lowerings(N: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All d in Z_{>=0}^N with Σ d = k."""
    if N == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in _lowerings(N - 1, k - first):
            yield (first, *rest)


def graded_labels(M: int, n: int, r: int, k: int) -> List[ModuleLabel]:
    """m ∈ M_{s+nr}^n with m_N <= m^0_N and degree k, obtained by lowering the vacuum sequence."""
    label = FockLabel(M=M, n=n)
    m0 = label.vacuum_m(r)
    found = set()
    for d in _lowerings(len(m0), k):
        m = tuple(a - b for a, b in zip(m0, d))
        if all(a <= b for a, b in zip(m, m[1:])) and all(m.count(v) <= n for v in set(m)):
            found.add(m)
    return [ModuleLabel(m=m, n=n) for m in sorted(found)]


def graded_basis(M: int, n: int, r: int, k: int) -> List[WedgeIndex]:
    """Normally ordered wedges spanning V_M^{s+nr,k}, sorted lexicographically."""
    return sorted(
        tuple(encode_index(mi, ei, n) for mi, ei in zip(label.m, e))
        for label in graded_labels(M, n, r, k)
        for e in enumerate_colors(label)
    )


# change of width -------------------------------------------------------------------------------


def rho_project(M: int, r: int, w: WedgeVector) -> WedgeVector:
    """ρ^M_{r+1,r}: keep the terms whose last n entries form the vacuum block, dropping it."""
    label = FockLabel(M=M, n=w.n)
    if w.N != label.width(r + 1):
        raise LengthMismatchError(actual_length=w.N, expected_length=label.width(r + 1))
    n, block = w.n, label.vacuum_m(r + 1)[-w.n :]

    def op(ks: WedgeIndex) -> List[Tuple[WedgeIndex, Fraction]]:
        if labels_of(ks[-n:], n)[0] == block:
            return [(ks[:-n], Fraction(1))]
        return []

    return WedgeVector(label.width(r), n, [(target, c * d) for ks, c in w.items() for target, d in op(ks)])


def widen(M: int, r: int, w: WedgeVector) -> WedgeVector:
    """f_{r+1} = f_r ∧ u_{M-s-nr} ∧ ... ∧ u_{M-s-nr-n+1}."""
    label = FockLabel(M=M, n=w.n)
    if w.N != label.width(r):
        raise LengthMismatchError(actual_length=w.N, expected_length=label.width(r))
    block = tuple(range(M - label.width(r), M - label.width(r + 1), -1))
    return WedgeVector(label.width(r + 1), w.n, [(ks + block, c) for ks, c in w.items()])


def narrow(M: int, r: int, w: WedgeVector) -> WedgeVector:
    """Inverse of widen; every term must end with the vacuum block.

    Raises:
        StabilizationError: A term would be lost by the projection.
    """
    projected = rho_project(M, r - 1, w)
    if len(projected) != len(w):
        raise StabilizationError(r=r - 1, k=degree(w, M))
    return projected


class SemiInfiniteWedge(BaseModel):
    """f_r ∧ |M - s - n r> with a head f_r of homogeneous degree k <= r."""

    label: FockLabel
    r: conint(ge=0)  # type: ignore[valid-type]
    k: conint(ge=0)  # type: ignore[valid-type]
    head: WedgeVector

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @root_validator(skip_on_failure=True)
    def _stabilized(cls, values):  # noqa: N805
        label, r, k, head = values["label"], values["r"], values["k"], values["head"]
        if head.N != label.width(r):
            raise LengthMismatchError(actual_length=head.N, expected_length=label.width(r))
        if r < k:
            raise StabilizationError(r=r, k=k)
        for ks in head.keys():
            if not in_vm(label, ks):
                raise VacuumBoundError(ks=ks, M=label.M)
        degrees = sorted({wedge_degree(label, ks) for ks in head.keys()} - {k})
        if degrees:
            raise MixedDegreeError(degrees=[k, *degrees])
        return values

    @classmethod
    def vacuum(cls, M: int, n: int) -> "SemiInfiniteWedge":
        return cls(label=FockLabel(M=M, n=n), r=0, k=0, head=vacuum_wedge(M, n, 0))

    @classmethod
    def from_head(cls, M: int, head: WedgeVector, k: int | None = None) -> "SemiInfiniteWedge":
        label = FockLabel(M=M, n=head.n)
        k = degree(head, M) if k is None else k
        return cls(label=label, r=label.r_of_width(head.N), k=k, head=head)

    @property
    def tail_from(self) -> int:
        """The tail is |M - s - n r>."""
        return self.label.M - self.label.width(self.r)

    def at_width(self, r: int) -> "SemiInfiniteWedge":
        if r < self.k:
            raise StabilizationError(r=r, k=self.k)
        head = self.head
        for t in range(self.r, r):
            head = widen(self.label.M, t, head)
        for t in range(self.r, r, -1):
            head = narrow(self.label.M, t, head)
        return SemiInfiniteWedge(label=self.label, r=r, k=self.k, head=head)

    def minimal(self) -> "SemiInfiniteWedge":
        return self.at_width(self.k)

    def equivalent(self, other: "SemiInfiniteWedge") -> bool:
        """Equality as elements of F_M, comparing at a common width."""
        if self.label != other.label:
            return False
        if self.head.is_zero() or other.head.is_zero():
            return self.head.is_zero() and other.head.is_zero()
        if self.k != other.k:
            return False
        r = max(self.r, other.r)
        return self.at_width(r).head == other.at_width(r).head


def level_zero_action(M: int, n: int, r: int, params: ParameterSet) -> LevelZeroAction:
    """U_0^{(s+nr)}; the width must be positive."""
    return LevelZeroAction(HeckeContext(N=FockLabel(M=M, n=n).width(r), params=params), n, Flavor.U0)


def head_act(gen: GeneratorName | str, M: int, r: int, w: WedgeVector, params: ParameterSet) -> WedgeVector:
    """x^{(s+nr)} on a head, including the empty wedge of width 0."""
    gen = GeneratorName.parse(gen) if isinstance(gen, str) else gen
    if w.N == 0:
        return w if gen.kind in (GeneratorKind.K, GeneratorKind.Kinv) else w.zero()
    return level_zero_action(M, w.n, r, params).act_wedge(gen, w)


def head_g(l: int, M: int, r: int, w: WedgeVector, params: ParameterSet) -> WedgeVector:
    """g_l^{(s+nr)} = h_l^{(s+nr)} - h_l^{(s+nr)}(m^0)."""
    if w.N == 0:
        return w.zero()
    label = FockLabel(M=M, n=w.n)
    shift = h_eigenvalue(label.vacuum_m(r), l, params)
    return level_zero_action(M, w.n, r, params).hamiltonian_wedge(l, w) - w.scale(shift)


def fock_act(gen: GeneratorName | str, w: SemiInfiniteWedge, params: ParameterSet) -> SemiInfiniteWedge:
    """x.w = (x^{(s+nk)} f_k) ∧ |M - s - nk>.

    Raises:
        VacuumBoundError: The image left V_M, which would contradict degree preservation.
    """
    base = w.minimal()
    image = head_act(gen, base.label.M, base.r, base.head, params)
    return SemiInfiniteWedge(label=base.label, r=base.r, k=base.k, head=image)


def g_act(l: int, w: SemiInfiniteWedge, params: ParameterSet) -> SemiInfiniteWedge:
    """The renormalized Hamiltonian g_l on F_M."""
    if l == 0:
        raise ValueError("g_l is defined for nonzero l")
    base = w.minimal()
    image = head_g(l, base.label.M, base.r, base.head, params)
    return SemiInfiniteWedge(label=base.label, r=base.r, k=base.k, head=image)


def fock_g_eigenvalue(m_head: Sequence[int], M: int, n: int, l: int, params: ParameterSet) -> Fraction:
    """Σ_i (p^{l m_i} - p^{l m^0_i}) q^{2l(1-i)}; beyond the head m agrees with m^0."""
    label = FockLabel(M=M, n=n)
    p, q = params.p, params.q
    return sum(
        ((p ** (l * mi) - p ** (l * label.vacuum_m_at(i))) * q ** (2 * l * (1 - i)) for i, mi in enumerate(m_head, 1)),
        Fraction(0),
    )


# decomposition -------------------------------------------------------------------------------


class FockBlock(BaseModel):
    """The block F_M^m = E^{m^{(s+nk)}} ∧ |M - s - nk>."""

    label: ModuleLabel
    norm: int
    basis: List[SemiInfiniteWedge]
    drinfeld_roots: List[List[ScalarField]]
    g_eigenvalues: Dict[int, ScalarField]

    class Config:
        arbitrary_types_allowed = True

    @property
    def dim(self) -> int:
        return len(self.basis)


class FockBlockSummary(BaseModel):
    """JSON record of one Fock block."""

    m_head: List[int]
    norm: int
    dim: int
    drinfeld: List[List[ScalarField]] = Field(description="roots of P_1, ..., P_{n-1}")
    g: Dict[str, ScalarField]

    class Config:
        json_encoders = {Fraction: format_scalar}


def fock_decompose(
    M: int, n: int, k: int, params: ParameterSet, powers: Sequence[int] = HAMILTONIAN_POWERS
) -> List[FockBlock]:
    """The blocks F_M^m with ||m|| = k, sorted lexicographically by their heads.

    Raises:
        ParameterDegeneracyError: A Macdonald polynomial cannot be computed.
    """
    label = FockLabel(M=M, n=n)
    blocks = []
    for module_label in graded_labels(M, n, k, k):
        basis = [
            SemiInfiniteWedge(label=label, r=k, k=k, head=phi_vector(module_label, e, params))
            for e in enumerate_colors(module_label)
        ]
        blocks.append(
            FockBlock(
                label=module_label,
                norm=k,
                basis=basis,
                drinfeld_roots=drinfeld_polys(module_label, params).roots,
                g_eigenvalues={l: fock_g_eigenvalue(module_label.m, M, n, l, params) for l in powers},
            )
        )
    total = sum(block.dim for block in blocks)
    expected = len(graded_basis(M, n, k, k))
    if total != expected:
        raise ValueError(f"block dimensions add up to {total}, expected {expected}")
    logger.debug("F_%d^%d (n=%d): %d blocks, dimension %d", M, k, n, len(blocks), total)
    return blocks


def block_summary(block: FockBlock) -> FockBlockSummary:
    return FockBlockSummary(
        m_head=list(block.label.m),
        norm=block.norm,
        dim=block.dim,
        drinfeld=block.drinfeld_roots,
        g={str(l): value for l, value in block.g_eigenvalues.items()},
    )


def semi_infinite_heads(M: int, n: int, k: int) -> List[WedgeIndex]:
    """Independent enumeration of the normally ordered semi-infinite wedges of degree k.

    Every such wedge agrees with the vacuum beyond position s + nk, so it is
    determined by its head at width L = s + n(k + 1), which lies in (M - L, M + n(k + 1)].
    """
    label = FockLabel(M=M, n=n)
    L = label.width(k + 1)
    m0 = label.vacuum_m(k + 1)
    window = range(M + n * (k + 1), M - L, -1)
    # k_i = ε_i - n m_i with ε_i in {1, ..., n} gives m_i = -floor((k_i - 1) / n)
    return [ks for ks in combinations(window, L) if sum(m0) + sum((k_i - 1) // n for k_i in ks) == k]


def brute_force_dimension(M: int, n: int, k: int) -> int:
    return len(semi_infinite_heads(M, n, k))


# checks ----------------------------------------------------------------------------------------


def stabilization_check(M: int, n: int, k: int, r: int) -> Report:
    """ρ^{M,k}_{r+1,r} is surjective, and injective exactly when k <= r."""
    source = graded_basis(M, n, r + 1, k)
    target = graded_basis(M, n, r, k)
    images = [rho_project(M, r, WedgeVector.basis(ks, n)) for ks in source]
    hit = {key for image in images for key in image.keys()}
    injective = all(len(image) == 1 for image in images) and len(hit) == len(source)
    report = Report(suite="fock-stabilize")
    report.checks.append(run_check(f"ρ onto V_{M}^({r},{k})", target, lambda ks: ks in hit))
    report.checks.append(
        run_check(f"ρ injective in degree {k} at r={r} iff k <= r", [(k, r)], lambda _: injective == (k <= r))
    )
    return report


def _generator_corpus(n: int) -> List[GeneratorName]:
    return all_generators(n)


def intertwining_check(M: int, n: int, k: int, r: int, params: ParameterSet, powers: Sequence[int] = (-1, 1)) -> Report:
    """ρ x^{(s+nr+n)} = x^{(s+nr)} ρ and ρ g_l^{(s+nr+n)} = g_l^{(s+nr)} ρ on the graded basis."""
    corpus = [WedgeVector.basis(ks, n) for ks in graded_basis(M, n, r + 1, k)]
    report = Report(suite="fock-intertwine")
    for gen in _generator_corpus(n):
        report.checks.append(
            run_check(
                f"ρ {gen} = {gen} ρ (r={r}, k={k})",
                corpus,
                lambda w, gen=gen: rho_project(M, r, head_act(gen, M, r + 1, w, params))
                == head_act(gen, M, r, rho_project(M, r, w), params),
            )
        )
    for l in powers:
        report.checks.append(
            run_check(
                f"ρ g{l} = g{l} ρ (r={r}, k={k})",
                corpus,
                lambda w, l=l: rho_project(M, r, head_g(l, M, r + 1, w, params))
                == head_g(l, M, r, rho_project(M, r, w), params),
            )
        )
    return report


def kernel_stability_check(M: int, n: int, k: int, r: int, params: ParameterSet) -> Report:
    """The generators map Ker ρ into Ker ρ."""
    kernel = [
        WedgeVector.basis(ks, n)
        for ks in graded_basis(M, n, r + 1, k)
        if rho_project(M, r, WedgeVector.basis(ks, n)).is_zero()
    ]
    report = Report(suite="fock-kernel")
    for gen in _generator_corpus(n):
        report.checks.append(
            run_check(
                f"{gen} Ker ρ ⊂ Ker ρ (r={r}, k={k})",
                kernel,
                lambda w, gen=gen: rho_project(M, r, head_act(gen, M, r + 1, w, params)).is_zero(),
            )
        )
    return report


def isomorphism_check(M: int, n: int, k: int, r: int) -> Report:
    """f ↦ f ∧ |M - s - nr> maps the degree-k basis at width s + nr bijectively onto F_M^k, r >= k."""
    if r < k:
        raise StabilizationError(r=r, k=k)
    top = max(r, k + 1)
    lifted = []
    for ks in graded_basis(M, n, r, k):
        head = WedgeVector.basis(ks, n)
        for t in range(r, top):
            head = widen(M, t, head)
        (key,) = head.keys()
        lifted.append(key)
    reference = []
    for ks in semi_infinite_heads(M, n, k):
        head = WedgeVector.basis(ks, n)
        for t in range(k + 1, top):
            head = widen(M, t, head)
        (key,) = head.keys()
        reference.append(key)
    report = Report(suite="fock-isomorphism")
    report.checks.append(
        run_check(
            f"V_{M}^({r},{k}) ∧ |M-s-nr> = F_{M}^{k}",
            [(k, r)],
            lambda _: len(set(lifted)) == len(lifted) and sorted(lifted) == sorted(reference),
        )
    )
    return report


def tail_coherence_check(M: int, n: int, k: int, r: int) -> Report:
    """For r >= k the preimage under ρ of f_r is f_r ∧ (next vacuum block)."""
    corpus = graded_basis(M, n, r + 1, k)

    def coherent(ks: WedgeIndex) -> bool:
        w = WedgeVector.basis(ks, n)
        projected = rho_project(M, r, w)
        return not projected.is_zero() and widen(M, r, projected) == w

    report = Report(suite="fock-tail")
    report.checks.append(run_check(f"f_(r+1) = f_r ∧ vacuum block (r={r}, k={k})", corpus, coherent))
    return report


def spectrum_check(M: int, n: int, k: int, params: ParameterSet, powers: Sequence[int] = (-1, 1)) -> Report:
    """g_l acts on every block by its eigenvalue, commutes with U_0 and kills the vacuum."""
    report = Report(suite="fock-spectrum")
    blocks = fock_decompose(M, n, k, params, powers)
    for l in powers:
        report.checks.append(
            run_check(
                f"g{l} on F_{M}^m = eigenvalue (k={k})",
                blocks,
                lambda block, l=l: all(
                    g_act(l, v, params).equivalent(
                        SemiInfiniteWedge(label=v.label, r=v.r, k=v.k, head=v.head.scale(block.g_eigenvalues[l]))
                    )
                    for v in block.basis
                ),
                describe=lambda block: str(block.label.m),
            )
        )
        report.checks.append(
            run_check(
                f"g{l} |{M}> = 0",
                [SemiInfiniteWedge.vacuum(M, n)],
                lambda v, l=l: g_act(l, v, params).head.is_zero(),
            )
        )
        corpus = [SemiInfiniteWedge.from_head(M, WedgeVector.basis(ks, n), k) for ks in graded_basis(M, n, k, k)]
        for gen in _generator_corpus(n):
            report.checks.append(
                run_check(
                    f"[g{l}, {gen}] = 0 on F_{M}^{k}",
                    corpus,
                    lambda v, l=l, gen=gen: g_act(l, fock_act(gen, v, params), params).equivalent(
                        fock_act(gen, g_act(l, v, params), params)
                    ),
                    describe=lambda v: str(sorted(v.head.keys())),
                )
            )
    return report


def r_independence_check(M: int, n: int, k: int, params: ParameterSet) -> Report:
    """Acting at width s + nk and at s + n(k+1) followed by ρ agree."""
    corpus = [WedgeVector.basis(ks, n) for ks in graded_basis(M, n, k, k)]
    report = Report(suite="fock-r-independence")
    for gen in _generator_corpus(n):
        report.checks.append(
            run_check(
                f"{gen} independent of the width (k={k})",
                corpus,
                lambda w, gen=gen: rho_project(M, k, head_act(gen, M, k + 1, widen(M, k, w), params))
                == head_act(gen, M, k, w, params),
            )
        )
    return report


def completeness_check(M: int, n: int, k: int) -> Report:
    """Σ_{||m|| = k} dim F_M^m = dim F_M^k, the latter counted independently.

    Block dimensions come from the labels alone; no φ vector is built.
    """
    total = sum(label.dim for label in graded_labels(M, n, k, k))
    expected = brute_force_dimension(M, n, k)
    report = Report(suite="fock-complete")
    report.checks.append(
        run_check(
            f"Σ dim F_{M}^m = dim F_{M}^{k}",
            [k],
            lambda _: total == expected,
            describe=lambda _: f"{total} != {expected}",
        )
    )
    return report


__all__ = (
    "block_summary",
    "brute_force_dimension",
    "completeness_check",
    "degree",
    "fock_act",
    "fock_decompose",
    "fock_g_eigenvalue",
    "FockBlock",
    "FockBlockSummary",
    "FockLabel",
    "g_act",
    "graded_basis",
    "graded_labels",
    "head_act",
    "head_g",
    "in_vm",
    "intertwining_check",
    "isomorphism_check",
    "kernel_stability_check",
    "narrow",
    "r_independence_check",
    "rho_project",
    "semi_infinite_heads",
    "SemiInfiniteWedge",
    "spectrum_check",
    "stabilization_check",
    "tail_coherence_check",
    "vacuum_wedge",
    "wedge_degree",
    "widen",
)
