"""Schemas of the property suite reports."""
from pydantic import BaseModel, Field

from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


class SuiteFailure(BaseModel):
    """A failed trial with everything needed to reproduce it."""

    trial: int
    inputs: dict[str, MatrixDocument]
    observed: str
    expected: str
    defect: float | None = None


class Candidate(BaseModel):
    """An input flagged for human inspection, not a failure."""

    trial: int
    label: str
    inputs: dict[str, MatrixDocument]
    note: str


class SuiteReport(BaseModel):
    """
    The outcome of one seeded property suite run.

    Apart from `wall_time`, two runs with the same suite, seed, trials and
    n serialize to the same bytes.
    """

    suite: str
    seed: int
    trials: int
    n: int | None = None
    failures: list[SuiteFailure] = Field(default_factory=list)
    max_defect: float = 0.0
    wall_time: float = 0.0
    tallies: dict[str, int] = Field(default_factory=dict)
    candidates: list[Candidate] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures
