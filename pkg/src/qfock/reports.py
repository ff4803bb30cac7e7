"""Pass/fail reports returned by the verification operations."""
import logging
from typing import Callable
from typing import Iterable
from typing import List
from typing import Literal
from typing import Optional
from typing import TypeVar

from pydantic import BaseModel
from pydantic import Field

logger = logging.getLogger(__name__)

_ItemType = TypeVar("_ItemType")


class RelationCheck(BaseModel):
    """Result of one identity checked over a corpus."""

    relation: str
    status: Literal["pass", "fail"] = "pass"
    checked: int = 0
    witness: Optional[str] = Field(default=None, description="first corpus element violating the identity")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class Report(BaseModel):
    """Collection of relation checks for one suite."""

    suite: str
    checks: List[RelationCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.passed]

    def merge(self, other: "Report") -> "Report":
        return Report(suite=self.suite, checks=[*self.checks, *other.checks])


def run_check(
    relation: str,
    corpus: Iterable[_ItemType],
    holds: Callable[[_ItemType], bool],
    describe: Callable[[_ItemType], str] = str,
) -> RelationCheck:
    """Evaluate an identity on every corpus element, stopping at the first witness.

    Args:
        relation (str): Name of the identity.
        corpus (Iterable[_ItemType]): Elements to check.
        holds ((item) -> bool): Predicate deciding the identity on one element.
        describe ((item) -> str): Rendering of a witness.

    Returns:
        RelationCheck: pass with the number of checked elements, or fail with the witness.
    """
    checked = 0
    for item in corpus:
        checked += 1
        if not holds(item):
            logger.debug("relation %s fails on %s", relation, describe(item))
            return RelationCheck(relation=relation, status="fail", checked=checked, witness=describe(item))
    logger.debug("relation %s holds on %d elements", relation, checked)
    return RelationCheck(relation=relation, status="pass", checked=checked)


__all__ = (
    "RelationCheck",
    "Report",
    "run_check",
)
