"""Exact level-0 action of U_q'(sl_n^) on q-wedge products and on the q-Fock space.

The package builds the chain
Laurent polynomials -> affine Hecke algebra -> Cherednik operators and
nonsymmetric Macdonald polynomials -> q-wedge product -> level-0 action of
U_q'(sl_n^) -> decomposition into evaluation modules -> semi-infinite wedges,
all over the rationals at concrete generic parameters q and p.
"""
import logging

from .coeffield import ParameterSet
from .decomp import em_block
from .decomp import ModuleLabel
from .fock import fock_decompose
from .hecke import HeckeContext
from .laurent import LaurentPoly
from .macdonald import macdonald_poly
from .qaffine import Flavor
from .qaffine import LevelZeroAction
from .reports import Report
from .wedge import normal_order
from .wedge import WedgeVector

logger = logging.getLogger(__name__)

try:
    import hypothesis  # noqa: ignore[F401]

    from .hypothesis_strategies import _hypothesis_setup_hook

    _hypothesis_setup_hook()
except ImportError:
    logger.debug("There is no hypothesis support on this system.")

__all__ = (
    "em_block",
    "Flavor",
    "fock_decompose",
    "HeckeContext",
    "LaurentPoly",
    "LevelZeroAction",
    "macdonald_poly",
    "ModuleLabel",
    "normal_order",
    "ParameterSet",
    "Report",
    "WedgeVector",
)
