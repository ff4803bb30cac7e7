"""The sub-commands of the command line: compute, serialize, verify."""
import logging
from argparse import Namespace
from fractions import Fraction
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional

from pydantic import BaseModel
from pydantic import Field

from ..coeffield import format_scalar
from ..coeffield import ParameterSet
from ..coeffield import ScalarField
from ..decomp import block_summary as em_block_summary
from ..decomp import BlockSummary
from ..decomp import enumerate_labels
from ..decomp import h_eigenvalue
from ..decomp import ModuleLabel
from ..decomp import phi_vector
from ..exceptions import UsageError
from ..fock import block_summary as fock_block_summary
from ..fock import fock_decompose
from ..fock import FockBlockSummary
from ..hecke import HeckeContext
from ..macdonald import macdonald_poly
from ..qaffine import LevelZeroAction
from ..reports import Report
from ..wedge import normal_order
from ..wedge import WedgeVector
from ..wedge import WedgeVectorModel
from ._tokens import parse_generators
from ._tokens import parse_int_list
from ._tokens import parse_range
from ._tokens import parse_window
from .config import OutputFormat
from .config import RunConfig
from .suites import run_suite
from .suites import SuiteRequest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_DEGENERATE = 2
EXIT_USAGE = 3


class ActionResult(BaseModel):
    """Generators applied to a wedge, the rightmost first."""

    generators: List[str]
    source: WedgeVectorModel
    image: WedgeVectorModel

    class Config:
        json_encoders = {Fraction: format_scalar}


class HamiltonianResult(BaseModel):
    """h_a applied to φ(m, e), with the predicted eigenvalue."""

    m: List[int]
    e: List[int]
    power: int
    eigenvalue: ScalarField
    phi: WedgeVectorModel
    image: WedgeVectorModel
    eigenvector: bool

    class Config:
        json_encoders = {Fraction: format_scalar}


class DecompositionResult(BaseModel):
    """The blocks E^m of a window, labels sorted lexicographically."""

    N: int
    n: int
    blocks: List[BlockSummary]

    class Config:
        json_encoders = {Fraction: format_scalar}


class FockBasisEntry(BaseModel):
    m_head: List[int]
    heads: List[WedgeVectorModel] = Field(description="heads at width s + nk of the basis vectors")

    class Config:
        json_encoders = {Fraction: format_scalar}


class FockResult(BaseModel):
    """Degree-k piece of the Fock space F_M."""

    M: int
    n: int
    degree: int
    dim: int
    blocks: List[FockBlockSummary] = Field(default_factory=list)
    basis: List[FockBasisEntry] = Field(default_factory=list)

    class Config:
        json_encoders = {Fraction: format_scalar}


def _emit(cfg: RunConfig, result: BaseModel, text: str) -> None:
    if cfg.format is OutputFormat.json:
        print(result.json())
    else:
        print(text)


def cmd_macdonald(cfg: RunConfig, args: Namespace) -> int:
    lam = parse_int_list(args.lam)
    ctx = HeckeContext(N=args.nvars, params=cfg.params())
    phi = macdonald_poly(ctx, lam)
    _emit(cfg, phi.to_model(), f"Phi{phi.label} = {phi.poly}")
    return EXIT_OK


def read_wedge(text: str, n: Optional[int], params: ParameterSet) -> WedgeVector:
    """A wedge given as WedgeVector JSON; terms that are not normally ordered are straightened.

    Raises:
        ValidationError: The text is not WedgeVector JSON.
        UsageError: --n disagrees with the JSON.
    """
    model = WedgeVectorModel.parse_raw(text)
    if n is not None and n != model.n:
        raise UsageError(f"--n {n} disagrees with n = {model.n} of the wedge")
    wedge = WedgeVector(model.N, model.n)
    for term in model.terms:
        wedge = wedge + normal_order(term.ks, model.n, params).scale(term.coeff)
    return wedge


def cmd_act(cfg: RunConfig, args: Namespace) -> int:
    params = cfg.params()
    source = read_wedge(args.wedge, args.n, params)
    gens = parse_generators(args.gen)
    action = LevelZeroAction(HeckeContext(N=source.N, params=params), source.n, args.flavor)
    image = action.word(gens, source)
    result = ActionResult(
        generators=[str(gen) for gen in gens], source=source.to_model(), image=image.to_model()
    )
    _emit(cfg, result, f"{' '.join(result.generators)} ({source}) = {image}")
    return EXIT_OK


def cmd_hamiltonian(cfg: RunConfig, args: Namespace) -> int:
    params = cfg.params()
    label = ModuleLabel(m=parse_int_list(args.m), n=args.n)
    e = label.check_colors(parse_int_list(args.e))
    phi = phi_vector(label, e, params)
    action = LevelZeroAction(HeckeContext(N=label.N, params=params), label.n, "u0")
    image = action.hamiltonian_wedge(args.power, phi)
    eigenvalue = h_eigenvalue(label.m, args.power, params)
    result = HamiltonianResult(
        m=list(label.m),
        e=list(e),
        power=args.power,
        eigenvalue=eigenvalue,
        phi=phi.to_model(),
        image=image.to_model(),
        eigenvector=image == phi.scale(eigenvalue),
    )
    _emit(cfg, result, f"h{args.power} φ({label.m}, {e}) = {format_scalar(eigenvalue)} φ: {result.eigenvector}")
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, args: Namespace) -> int:
    params = cfg.params()
    window = parse_window(args.window, args.degrees)
    labels = enumerate_labels(args.N, args.n, window)
    if not labels:
        logger.warning("window %s admits no labels", window)
    result = DecompositionResult(N=args.N, n=args.n, blocks=[em_block_summary(label, params) for label in labels])
    lines = [f"E{block.m}: dim {block.dim}" for block in result.blocks]
    _emit(cfg, result, "\n".join(lines))
    return EXIT_OK


def cmd_fock(cfg: RunConfig, args: Namespace) -> int:
    params = cfg.params()
    blocks = fock_decompose(args.M, args.n, args.degree, params)
    result = FockResult(M=args.M, n=args.n, degree=args.degree, dim=sum(block.dim for block in blocks))
    if args.emit == "basis":
        result.basis = [
            FockBasisEntry(m_head=list(block.label.m), heads=[v.head.to_model() for v in block.basis])
            for block in blocks
        ]
        lines = [f"F{entry.m_head}: {len(entry.heads)} vectors" for entry in result.basis]
    else:
        summaries = [fock_block_summary(block) for block in blocks]
        if args.emit == "drinfeld":
            summaries = [summary.copy(update={"g": {}}) for summary in summaries]
        elif args.emit == "spectrum":
            summaries = [summary.copy(update={"drinfeld": []}) for summary in summaries]
        result.blocks = summaries
        lines = [_fock_line(summary, args.emit) for summary in summaries]
    _emit(cfg, result, "\n".join([f"F_{args.M}^{args.degree} (n={args.n}): dim {result.dim}", *lines]))
    return EXIT_OK


def _fock_line(summary: FockBlockSummary, emit: str) -> str:
    line = f"F{summary.m_head}: dim {summary.dim}"
    if emit in ("blocks", "drinfeld"):
        roots = "; ".join(",".join(format_scalar(a) for a in part) for part in summary.drinfeld)
        line += f", roots [{roots}]"
    if emit in ("blocks", "spectrum"):
        values = ", ".join(f"g{l}={format_scalar(value)}" for l, value in summary.g.items())
        line += f", {values}"
    return line


def cmd_verify(cfg: RunConfig, args: Namespace) -> int:
    low, high = parse_range(args.entries)
    degrees = None
    if args.degrees is not None:
        first, last = parse_range(args.degrees)
        degrees = tuple(range(first, last + 1))
    request = SuiteRequest(
        params=cfg.params(),
        N=args.N,
        n=args.n,
        M=args.M,
        k=args.k,
        flavor=args.flavor,
        low=low,
        high=high,
        degrees=degrees,
        samples=args.samples,
        seed=args.seed,
    )
    report = run_suite(args.suite, request)
    _emit(cfg, report, _report_text(report))
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _report_text(report: Report) -> str:
    lines = [f"{report.suite}: {'pass' if report.passed else 'FAIL'}"]
    for check in report.checks:
        witness = f" (witness {check.witness})" if check.witness else ""
        lines.append(f"  [{check.status}] {check.relation}: {check.checked} checked{witness}")
    return "\n".join(lines)


COMMANDS: Dict[str, Callable[[RunConfig, Namespace], int]] = {
    "macdonald": cmd_macdonald,
    "act": cmd_act,
    "hamiltonian": cmd_hamiltonian,
    "decompose": cmd_decompose,
    "fock": cmd_fock,
    "verify": cmd_verify,
}


__all__ = (
    "ActionResult",
    "cmd_act",
    "cmd_decompose",
    "cmd_fock",
    "cmd_hamiltonian",
    "cmd_macdonald",
    "cmd_verify",
    "COMMANDS",
    "DecompositionResult",
    "EXIT_DEGENERATE",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION_FAILED",
    "FockBasisEntry",
    "FockResult",
    "HamiltonianResult",
    "read_wedge",
)
