"""Registry of the named verification suites run by `qfock verify`."""
import logging
import random
from fractions import Fraction
from typing import Callable
from typing import Dict
from typing import List
from typing import Tuple

from pydantic import BaseModel
from pydantic import conint
from pydantic import Field

from ..coeffield import ParameterSet
from ..decomp import beta_isomorphism_check
from ..decomp import cyclicity_check
from ..decomp import drinfeld_atilde_check
from ..decomp import drinfeld_multiplicativity_check
from ..decomp import enumerate_colors
from ..decomp import enumerate_labels
from ..decomp import h_eigenvalue
from ..decomp import HAMILTONIAN_POWERS
from ..decomp import LabelWindow
from ..decomp import phi_vector
from ..decomp import verify_decomposition
from ..exceptions import UnknownSuiteError
from ..fock import completeness_check
from ..fock import intertwining_check
from ..fock import isomorphism_check
from ..fock import kernel_stability_check
from ..fock import r_independence_check
from ..fock import spectrum_check
from ..fock import stabilization_check
from ..fock import tail_coherence_check
from ..hecke import HeckeContext
from ..hecke import monomial_box
from ..hecke import Representation
from ..hecke import verify_hecke_relations
from ..macdonald import verify_macdonald
from ..qaffine import Flavor
from ..qaffine import LevelZeroAction
from ..qaffine import omega_preservation_check
from ..qaffine import verify_hamiltonian_commutation
from ..qaffine import verify_quantum_group_relations
from ..reports import Report
from ..reports import run_check
from ..wedge import basis_wedges
from ..wedge import TensorVector
from ..wedge import verify_wedge_relations
from ..wedge import WedgeVector

logger = logging.getLogger(__name__)

DRINFELD_POINTS = (Fraction(2), Fraction(-3, 5), Fraction(7, 4))


class SuiteRequest(BaseModel):
    """Sizes and parameters of one suite run."""

    params: ParameterSet = Field(default_factory=ParameterSet)
    N: conint(ge=1) = 2  # type: ignore[valid-type]
    n: conint(ge=2) = 2  # type: ignore[valid-type]
    M: int = 0
    k: conint(ge=0) = 1  # type: ignore[valid-type]
    flavor: Flavor = Flavor.U0
    low: int = -1
    high: int = 1
    degrees: Tuple[int, ...] | None = None
    samples: conint(ge=1) = 200  # type: ignore[valid-type]
    seed: int = 0

    class Config:
        frozen = True

    @property
    def ctx(self) -> HeckeContext:
        return HeckeContext(N=self.N, params=self.params)

    @property
    def window(self) -> LabelWindow:
        return LabelWindow(low=self.low, high=self.high, degrees=self.degrees)

    def wedge_corpus(self) -> List[WedgeVector]:
        return [WedgeVector.basis(ks, self.n) for ks in basis_wedges(self.N, self.n, range(self.low, self.high + 1))]


SuiteRunner = Callable[[SuiteRequest], Report]

_SUITES: Dict[str, SuiteRunner] = {}


def register_suite(name: str) -> Callable[[SuiteRunner], SuiteRunner]:
    """Register a suite runner under a name.

    Args:
        name (str): Name used with `verify --suite`.
    """

    def decorator(runner: SuiteRunner) -> SuiteRunner:
        if name in _SUITES:
            logger.warning("Overriding suite %s", name)
        _SUITES[name] = runner
        return runner

    return decorator


def lookup_suite(name: str) -> SuiteRunner:
    """Lookup a suite runner.

    Raises:
        UnknownSuiteError: No suite of that name is registered.
    """
    if name in _SUITES:
        return _SUITES[name]
    raise UnknownSuiteError(name)


def suite_names() -> List[str]:
    return sorted(_SUITES)


def run_suite(name: str, request: SuiteRequest) -> Report:
    report = lookup_suite(name)(request)
    logger.info("suite %s: %s", name, "pass" if report.passed else "FAIL")
    return report


def _merge(suite: str, reports: List[Report]) -> Report:
    merged = Report(suite=suite)
    for report in reports:
        merged = merged.merge(report)
    return merged


def random_tensors(request: SuiteRequest) -> List[TensorVector]:
    """Sums of up to three pure tensors with small integer coefficients."""
    rng = random.Random(request.seed)
    tensors = []
    for _ in range(request.samples):
        terms = [
            (
                (
                    tuple(rng.randint(request.low, request.high) for _ in range(request.N)),
                    tuple(rng.randint(1, request.n) for _ in range(request.N)),
                ),
                Fraction(rng.choice((-2, -1, 1, 2, 3))),
            )
            for _ in range(rng.randint(1, 3))
        ]
        tensors.append(TensorVector(request.N, request.n, terms))
    return tensors


def random_sequences(request: SuiteRequest) -> List[Tuple[int, ...]]:
    """Index sequences of length N, repetitions allowed."""
    rng = random.Random(request.seed + 1)
    span = request.n * (request.high - request.low + 1)
    return [tuple(rng.randint(-span, span) for _ in range(request.N)) for _ in range(request.samples)]


@register_suite("hecke")
def _hecke(request: SuiteRequest) -> Report:
    corpus = monomial_box(request.N, request.low, request.high)
    return _merge(
        "hecke",
        [verify_hecke_relations(request.ctx, representation, corpus) for representation in Representation],
    )


@register_suite("macdonald")
def _macdonald(request: SuiteRequest) -> Report:
    return verify_macdonald(request.ctx, request.low, request.high)


@register_suite("wedge")
def _wedge(request: SuiteRequest) -> Report:
    return verify_wedge_relations(request.ctx, request.n, random_tensors(request), random_sequences(request))


@register_suite("uq")
def _uq(request: SuiteRequest) -> Report:
    action = LevelZeroAction(request.ctx, request.n, request.flavor)
    return _merge(
        "uq",
        [
            verify_quantum_group_relations(action, request.wedge_corpus()),
            omega_preservation_check(action, random_tensors(request.copy(update={"samples": 20}))),
        ],
    )


@register_suite("hamiltonian")
def _hamiltonian(request: SuiteRequest) -> Report:
    report = verify_hamiltonian_commutation(
        LevelZeroAction(request.ctx, request.n, request.flavor), HAMILTONIAN_POWERS, request.wedge_corpus()
    )
    # φ(m, e) diagonalizes the U0 Hamiltonians whatever flavor was requested
    action = LevelZeroAction(request.ctx, request.n, Flavor.U0)
    pairs = [
        (label, e) for label in enumerate_labels(request.N, request.n, request.window) for e in enumerate_colors(label)
    ]
    for a in HAMILTONIAN_POWERS:
        report.checks.append(
            run_check(
                f"h{a} φ(m, e) = Σ p^(a m_i) q^(2a(1-i)) φ(m, e)",
                pairs,
                lambda pair, a=a: action.hamiltonian_wedge(a, phi_vector(pair[0], pair[1], request.params))
                == phi_vector(pair[0], pair[1], request.params).scale(h_eigenvalue(pair[0].m, a, request.params)),
                describe=lambda pair: f"m={pair[0].m}, e={pair[1]}",
            )
        )
    return report


@register_suite("decomp")
def _decomp(request: SuiteRequest) -> Report:
    return verify_decomposition(request.N, request.n, request.window, request.params)


@register_suite("beta")
def _beta(request: SuiteRequest) -> Report:
    labels = enumerate_labels(request.N, request.n, request.window)
    return _merge("beta", [beta_isomorphism_check(label, request.params) for label in labels])


@register_suite("drinfeld")
def _drinfeld(request: SuiteRequest) -> Report:
    reports = [
        drinfeld_atilde_check(a, j, request.n, request.params) for j in range(1, request.n) for a in DRINFELD_POINTS
    ]
    merged = _merge("drinfeld", reports)
    merged.checks.extend(
        drinfeld_multiplicativity_check(label, request.params)
        for label in enumerate_labels(request.N, request.n, request.window)
    )
    return merged


@register_suite("cyclicity")
def _cyclicity(request: SuiteRequest) -> Report:
    labels = enumerate_labels(request.N, request.n, request.window)
    return _merge("cyclicity", [cyclicity_check(label, request.params) for label in labels])


@register_suite("fock-stabilize")
def _fock_stabilize(request: SuiteRequest) -> Report:
    M, n, k = request.M, request.n, request.k
    reports = [stabilization_check(M, n, k, r) for r in range(0, k + 2)]
    reports.extend(isomorphism_check(M, n, k, r) for r in range(k, k + 2))
    reports.extend(tail_coherence_check(M, n, k, r) for r in range(k, k + 2))
    return _merge("fock-stabilize", reports)


@register_suite("fock-intertwine")
def _fock_intertwine(request: SuiteRequest) -> Report:
    M, n, k, params = request.M, request.n, request.k, request.params
    reports = [intertwining_check(M, n, k, r, params) for r in range(k, k + 2)]
    reports.append(kernel_stability_check(M, n, k, max(k - 1, 0), params))
    reports.append(r_independence_check(M, n, k, params))
    return _merge("fock-intertwine", reports)


@register_suite("fock-spectrum")
def _fock_spectrum(request: SuiteRequest) -> Report:
    return spectrum_check(request.M, request.n, request.k, request.params)


@register_suite("fock-complete")
def _fock_complete(request: SuiteRequest) -> Report:
    return _merge(
        "fock-complete",
        [completeness_check(request.M, request.n, degree) for degree in range(request.k + 1)],
    )


__all__ = (
    "lookup_suite",
    "random_sequences",
    "random_tensors",
    "register_suite",
    "run_suite",
    "suite_names",
    "SuiteRequest",
    "SuiteRunner",
)
