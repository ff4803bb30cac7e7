"""Run configuration: parameters from flags, environment and defaults."""
import logging
from enum import Enum
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import Optional

from pydantic import BaseSettings
from pydantic import conint
from pydantic import Field

from ..coeffield import DEFAULT_BOUND
from ..coeffield import DEFAULT_P
from ..coeffield import DEFAULT_Q
from ..coeffield import format_scalar
from ..coeffield import ParameterSet
from ..coeffield import ScalarField

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


class RunConfig(BaseSettings):
    """Global settings of a run.

    Values given on the command line win over QFOCK_Q, QFOCK_P and QFOCK_BOUND,
    which win over the defaults.
    """

    q: ScalarField = Field(default=DEFAULT_Q, description="Hecke parameter q")
    p: ScalarField = Field(default=DEFAULT_P, description="dilation parameter p")
    bound: conint(ge=1) = Field(default=DEFAULT_BOUND, description="genericity bound")  # type: ignore[valid-type]
    format: OutputFormat = OutputFormat.json
    verbose: bool = False

    class Config:
        env_prefix = "QFOCK_"
        frozen = True
        json_encoders = {Fraction: format_scalar}

    @classmethod
    def from_overrides(cls, overrides: Dict[str, Optional[Any]]) -> "RunConfig":
        """Build a configuration where only the flags actually given override the environment."""
        return cls(**{key: value for key, value in overrides.items() if value is not None})

    def params(self) -> ParameterSet:
        """The validated parameter set.

        Raises:
            pydantic.ValidationError: q or p vanishes or the parameters are not generic.
        """
        return ParameterSet(q=self.q, p=self.p, genericity_bound=self.bound)


__all__ = (
    "OutputFormat",
    "RunConfig",
)
