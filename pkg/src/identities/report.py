"""Check reports returned by every law and identity checker."""

import logging
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

logger = logging.getLogger(__name__)


class Counterexample(BaseModel):
    """Arguments that violate a law, with the disagreeing values."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    arguments: Tuple[Any, ...]
    values: Dict[str, Any]
    index: Optional[int] = None

    def argument(self, label: str) -> Any:
        return self.arguments[self.labels.index(label)]


class CheckReport(BaseModel):
    """Outcome of one law check.

    ``verdict == "fails"`` always comes with a counterexample; in exhaustive
    mode it is the first violation in enumeration order.
    """

    model_config = ConfigDict(frozen=True)

    check: str
    lattice: str
    verdict: Literal["holds", "fails"]
    mode: Literal["exhaustive", "sampled"]
    seed: Optional[int] = None
    evaluations: int
    counterexample: Optional[Counterexample] = None

    @model_validator(mode="after")
    def validate_counterexample(self) -> "CheckReport":
        if self.verdict == "fails" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")
        if self.verdict == "holds" and self.counterexample is not None:
            raise ValueError("a passing report carries no counterexample")
        return self

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    @property
    def mode_label(self) -> str:
        if self.mode == "sampled":
            return f"sampled(seed={self.seed}, count={self.evaluations})"
        return "exhaustive"


def combine_reports(check: str, lattice: str, reports: List[CheckReport]) -> CheckReport:
    """Fold several reports into one; the first failure wins."""
    evaluations = sum(r.evaluations for r in reports)
    mode = "sampled" if any(r.mode == "sampled" for r in reports) else "exhaustive"
    seed = next((r.seed for r in reports if r.seed is not None), None)
    for r in reports:
        if not r.holds:
            return CheckReport(
                check=check,
                lattice=lattice,
                verdict="fails",
                mode=mode,
                seed=seed,
                evaluations=evaluations,
                counterexample=r.counterexample,
            )
    return CheckReport(
        check=check,
        lattice=lattice,
        verdict="holds",
        mode=mode,
        seed=seed,
        evaluations=evaluations,
    )


def point_report(
    check: str,
    lattice: str,
    labels: Sequence[str],
    arguments: Sequence[Any],
    differing: Optional[Dict[str, Any]],
    evaluations: int,
) -> CheckReport:
    """Report for a check evaluated at one fixed point."""
    if differing is None:
        return CheckReport(
            check=check,
            lattice=lattice,
            verdict="holds",
            mode="exhaustive",
            evaluations=evaluations,
        )
    logger.warning(f"{check} fails on {lattice} at {tuple(arguments)}: {differing}")
    return CheckReport(
        check=check,
        lattice=lattice,
        verdict="fails",
        mode="exhaustive",
        evaluations=evaluations,
        counterexample=Counterexample(
            labels=tuple(labels), arguments=tuple(arguments), values=differing
        ),
    )
