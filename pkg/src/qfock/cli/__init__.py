"""Command line front end of qfock.

Exit codes: 0 success, 1 verification failure, 2 degenerate parameters, 3 usage error.
"""
import argparse
import logging
from typing import Any
from typing import NoReturn
from typing import Optional
from typing import Sequence

import regex
from pydantic import PydanticValueError
from pydantic import ValidationError

from ..exceptions import ParameterDegeneracyError
from ..exceptions import UsageError
from ..qaffine import Flavor
from .commands import COMMANDS
from .commands import EXIT_DEGENERATE
from .commands import EXIT_USAGE
from .config import OutputFormat
from .config import RunConfig
from .suites import suite_names

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)8s] %(message)s (%(filename)s:%(lineno)s)"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
NEGATIVE_VALUE_REGEX = regex.compile(r"^-\d[\d.,+\-/\s]*$")


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising UsageError instead of exiting.

    Values like "-1..1" or "-1,0" are read as arguments, not as unknown flags.
    """

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_VALUE_REGEX

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the sub-command from being reset by the sub-parser
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--q", default=argparse.SUPPRESS, help="Hecke parameter, e.g. 4/3 (env QFOCK_Q)")
    parent.add_argument("--p", default=argparse.SUPPRESS, help="dilation parameter, e.g. 5/7 (env QFOCK_P)")
    parent.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="genericity bound (env QFOCK_BOUND)")
    parent.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS, help="output format"
    )
    parent.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging")
    return parent


def build_parser() -> ArgumentParser:
    common = _global_flags()
    parser = ArgumentParser(prog="qfock", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    macdonald = sub.add_parser("macdonald", parents=[common], help="nonsymmetric Macdonald polynomial Phi^λ")
    macdonald.add_argument("--nvars", type=int, required=True)
    macdonald.add_argument("--lambda", dest="lam", required=True, help='composition, e.g. "1,0"')

    act = sub.add_parser("act", parents=[common], help="apply generators of the level-0 action to a wedge")
    act.add_argument("--n", type=int, default=None, help="checked against n of the wedge when given")
    act.add_argument(
        "--wedge", required=True, help='WedgeVector JSON, e.g. {"N": 2, "n": 2, "terms": [{"ks": [0, 1], "coeff": "1"}]}'
    )
    act.add_argument("--gen", required=True, help='generators, rightmost applied first, e.g. "E0,F1"')
    act.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.U0.value)

    hamiltonian = sub.add_parser("hamiltonian", parents=[common], help="h_a on the vector φ(m, e)")
    hamiltonian.add_argument("--n", type=int, required=True)
    hamiltonian.add_argument("--m", required=True, help='nondecreasing n-strict sequence, e.g. "0,1"')
    hamiltonian.add_argument("--e", required=True, help='colors, e.g. "1,2"')
    hamiltonian.add_argument("--power", type=int, default=1)

    decompose = sub.add_parser("decompose", parents=[common], help="blocks E^m of a label window")
    decompose.add_argument("--n", type=int, required=True)
    decompose.add_argument("--N", type=int, required=True)
    decompose.add_argument("--window", required=True, help='entry range, e.g. "0..1"')
    decompose.add_argument("--degrees", default=None, help='range of Σ m_i, e.g. "-1..2"')

    fock = sub.add_parser("fock", parents=[common], help="blocks of the degree-k piece of F_M")
    fock.add_argument("--M", type=int, required=True)
    fock.add_argument("--n", type=int, required=True)
    fock.add_argument("--degree", type=int, required=True)
    fock.add_argument("--emit", choices=["blocks", "basis", "drinfeld", "spectrum"], default="blocks")

    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", required=True, help=f"one of {', '.join(suite_names())}")
    verify.add_argument("--N", type=int, default=2)
    verify.add_argument("--n", type=int, default=2)
    verify.add_argument("--M", type=int, default=0)
    verify.add_argument("--k", type=int, default=1)
    verify.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.U0.value)
    verify.add_argument("--entries", default="-1..1", help="entry range of the corpus")
    verify.add_argument("--degrees", default=None, help="range of admitted label degrees")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig.from_overrides(
            {key: getattr(args, key, None) for key in ("q", "p", "bound", "format", "verbose")}
        )
        _configure_logging(cfg.verbose)
        logger.debug("running %s with %s", args.command, cfg)
        return COMMANDS[args.command](cfg, args)
    except ParameterDegeneracyError as error:
        logger.error("degenerate parameters: %s", error)
        return EXIT_DEGENERATE
    except (UsageError, ValidationError, PydanticValueError) as error:
        logger.error("usage error: %s", error)
        return EXIT_USAGE


__all__ = (
    "build_parser",
    "main",
)
