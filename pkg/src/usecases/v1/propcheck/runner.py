"""
This module defines the use case behind `siegel propcheck`.

Trial i of a run draws from `numpy.random.default_rng([seed, i])`, so trials
are independent of each other and of the worker that executes them. Results
are merged by trial index, which makes the report of a sharded run identical
to the single-threaded one apart from `wall_time`.
"""
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from src.domain.exceptions import DomainError
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.exceptions import UnsupportedDimensionError
from src.usecases.ports.report_writer_interface import IReportWriter
from src.usecases.ports.usecase_interface import IUsecase
from src.usecases.v1.propcheck.registry import (
    PropertySuite,
    SuiteRegistry,
    TrialContext,
    TrialOutcome,
)
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument
from src.usecases.v1.schemas.base.suite_report import (
    Candidate,
    SuiteFailure,
    SuiteReport,
)


class SuiteRequest(BaseModel):
    """Input: which suite to run and how."""

    suite: str
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=1000, ge=1)
    n: int | None = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
    json_path: Path | None = None


@dataclass(frozen=True)
class _Trial:
    index: int
    outcome: TrialOutcome
    inputs: dict[str, MatrixDocument]


class RunPropertySuite(IUsecase[SuiteRequest, SuiteReport]):
    """Use Case: run a registered suite and build its report."""

    def __init__(
        self,
        registry: SuiteRegistry,
        tol: Tolerance,
        writer: IReportWriter,
        samples_per_map: int,
        path_steps: int,
    ):
        """
        Args:
            registry: The suites that can be run.
            tol: Numerical slack handed to every trial.
            writer: Destination of the report when a path is given.
            samples_per_map: Points sampled per matrix by action suites.
            path_steps: Steps of the discretized paths.
        """
        self.registry = registry
        self.tol = tol
        self.writer = writer
        self.samples_per_map = samples_per_map
        self.path_steps = path_steps

    def _run_trial(
        self, suite: PropertySuite, request: SuiteRequest, index: int
    ) -> _Trial:
        ctx = TrialContext(
            index=index,
            n=request.n or suite.dimension_for(index),
            rng=np.random.default_rng([request.seed, index]),
            tol=self.tol,
            samples_per_map=self.samples_per_map,
            path_steps=self.path_steps,
        )
        try:
            outcome = suite.trial(ctx)
        except (DomainError, np.linalg.LinAlgError) as e:
            outcome = TrialOutcome(
                passed=False,
                defect=None,
                observed=f"{type(e).__name__}: {e}",
                expected="no domain or linear algebra error",
                tallies=("error",),
            )
        logger.debug(
            f"Trial {index} (n={ctx.n}): "
            f"{'pass' if outcome.passed else 'FAIL'} {outcome.observed}"
        )
        return _Trial(index=index, outcome=outcome, inputs=ctx.inputs)

    def _run_all(
        self, suite: PropertySuite, request: SuiteRequest
    ) -> list[_Trial]:
        indices = range(request.trials)
        if request.workers == 1:
            return [self._run_trial(suite, request, i) for i in indices]
        with ThreadPoolExecutor(max_workers=request.workers) as pool:
            # One context copy per task keeps the `run` log field visible
            futures = [
                pool.submit(
                    copy_context().run, self._run_trial, suite, request, i
                )
                for i in indices
            ]
            trials = [future.result() for future in futures]
        return sorted(trials, key=lambda trial: trial.index)

    def execute(self, input_data: SuiteRequest) -> SuiteReport:
        """
        Executes the suite and writes the report if `json_path` is set.

        Raises:
            UnknownSuiteError: If the suite is not registered.
            UnsupportedDimensionError: If `n` is not one of the suite's
                dimensions.
        """
        suite = self.registry.get(input_data.suite)
        if input_data.n is not None and input_data.n not in suite.dims:
            raise UnsupportedDimensionError(
                suite.name, input_data.n, suite.dims
            )
        with logger.contextualize(run=f"{suite.name}:{input_data.seed}"):
            logger.info(
                f"Running {input_data.trials} trials "
                f"on {input_data.workers} worker(s)."
            )
            started = time.perf_counter()
            trials = self._run_all(suite, input_data)
            report = self._report(input_data, trials)
            report.wall_time = time.perf_counter() - started
            logger.info(
                f"{len(report.failures)} failure(s), "
                f"max defect {report.max_defect:.3e}, "
                f"{len(report.candidates)} candidate(s)."
            )
            if input_data.json_path is not None:
                self.writer.write(report, input_data.json_path)
        return report

    def _report(
        self, request: SuiteRequest, trials: list[_Trial]
    ) -> SuiteReport:
        tallies: Counter[str] = Counter()
        failures: list[SuiteFailure] = []
        candidates: list[Candidate] = []
        max_defect = 0.0
        for trial in trials:
            outcome = trial.outcome
            tallies.update(outcome.tallies)
            if outcome.defect is not None and np.isfinite(outcome.defect):
                max_defect = max(max_defect, outcome.defect)
            if not outcome.passed:
                logger.warning(
                    f"Trial {trial.index} failed: {outcome.observed} "
                    f"(expected {outcome.expected})."
                )
                failures.append(
                    SuiteFailure(
                        trial=trial.index,
                        inputs=trial.inputs,
                        observed=outcome.observed,
                        expected=outcome.expected,
                        defect=(
                            outcome.defect
                            if outcome.defect is not None
                            and np.isfinite(outcome.defect)
                            else None
                        ),
                    )
                )
            for label, note in outcome.candidates:
                logger.warning(f"Trial {trial.index} candidate {label}.")
                candidates.append(
                    Candidate(
                        trial=trial.index,
                        label=label,
                        inputs=trial.inputs,
                        note=note,
                    )
                )
        return SuiteReport(
            suite=request.suite,
            seed=request.seed,
            trials=request.trials,
            n=request.n,
            failures=failures,
            max_defect=max_defect,
            tallies=dict(sorted(tallies.items())),
            candidates=candidates,
        )
