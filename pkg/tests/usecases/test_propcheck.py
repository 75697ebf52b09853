from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from src.domain.exceptions import NotSymmetricError
from src.domain.services.sampling import random_real_symplectic
from src.usecases.exceptions import (
    UnknownSuiteError,
    UnsupportedDimensionError,
)
from src.usecases.v1.propcheck.registry import (
    SuiteRegistry,
    TrialContext,
    TrialOutcome,
)
from src.usecases.v1.propcheck.runner import RunPropertySuite, SuiteRequest
from src.usecases.v1.propcheck.suites import REGISTRY

SUITE_NAMES = [
    "check",
    "classify-soundness",
    "composition",
    "real-action",
    "antisymplectic-action",
    "pure-imaginary-isometry",
    "hyperbolic-oracle",
    "metric-axioms",
    "path-bound",
    "contraction",
    "compression",
    "block-psd",
    "converse-probe",
]


@pytest.fixture
def runner(tol, writer) -> RunPropertySuite:
    return RunPropertySuite(
        registry=REGISTRY,
        tol=tol,
        writer=writer,
        samples_per_map=3,
        path_steps=64,
    )


@pytest.fixture
def toy_registry() -> SuiteRegistry:
    registry = SuiteRegistry()

    @registry.register("odd-fails", "fails on odd trials", (1, 2))
    def odd_fails(ctx: TrialContext) -> TrialOutcome:
        ctx.block("s", random_real_symplectic(ctx.n, ctx.rng))
        return TrialOutcome(
            passed=ctx.index % 2 == 0,
            defect=float(ctx.index),
            observed=f"trial {ctx.index}",
            expected="even trial",
            tallies=("even" if ctx.index % 2 == 0 else "odd",),
        )

    @registry.register("raises", "raises a domain error", (1,))
    def raises(ctx: TrialContext) -> TrialOutcome:
        ctx.matrix("m", np.array([[0.0, 1.0], [0.0, 0.0]]))
        raise NotSymmetricError(1.0, (0, 1))

    @registry.register("singular", "inverts a singular matrix", (1,))
    def singular(ctx: TrialContext) -> TrialOutcome:
        np.linalg.inv(np.zeros((2, 2)))
        raise AssertionError("unreachable")

    @registry.register("draw", "one uniform draw per trial", (1,))
    def draw(ctx: TrialContext) -> TrialOutcome:
        return TrialOutcome(
            passed=True,
            defect=float(ctx.rng.random()),
            observed="drawn",
            expected="drawn",
        )

    @registry.register("flags", "flags every trial", (1,))
    def flags(ctx: TrialContext) -> TrialOutcome:
        return TrialOutcome(
            passed=True,
            defect=None,
            observed="ok",
            expected="ok",
            candidates=(("look", "worth a look"),),
        )

    return registry


class TestRegistry:
    def test_every_suite_is_registered(self):
        assert REGISTRY.names() == SUITE_NAMES

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError) as info:
            REGISTRY.get("nope")
        assert "composition" in str(info.value)

    def test_duplicate_names_are_refused(self, toy_registry):
        with pytest.raises(ValueError):
            toy_registry.register("flags", "again", (1,))(lambda ctx: None)

    def test_dimensions_cycle_with_trial_index(self):
        suite = REGISTRY.get("compression")
        assert [suite.dimension_for(i) for i in range(4)] == [2, 3, 4, 2]


class TestSuites:
    @pytest.mark.parametrize("name", SUITE_NAMES)
    def test_suite_passes_on_a_short_run(self, name, runner):
        report = runner.execute(SuiteRequest(suite=name, seed=42, trials=8))
        assert report.failures == [], report.failures
        assert report.passed
        assert report.trials == 8

    def test_hyperbolic_oracle_accuracy(self, runner):
        report = runner.execute(
            SuiteRequest(suite="hyperbolic-oracle", seed=3, trials=200)
        )
        assert report.max_defect <= 1e-9

    def test_converse_probe_tallies_every_trial(self, runner):
        report = runner.execute(
            SuiteRequest(suite="converse-probe", seed=5, trials=10)
        )
        counted = sum(
            count
            for label, count in report.tallies.items()
            if label.startswith("psd=")
        )
        assert counted == 10
        assert list(report.tallies) == sorted(report.tallies)

    def test_fixed_dimension(self, runner):
        report = runner.execute(
            SuiteRequest(suite="composition", seed=1, trials=4, n=3)
        )
        assert report.n == 3
        assert report.passed

    def test_unsupported_dimension(self, runner):
        with pytest.raises(UnsupportedDimensionError):
            runner.execute(
                SuiteRequest(suite="hyperbolic-oracle", trials=1, n=2)
            )

    def test_unknown_suite(self, runner):
        with pytest.raises(UnknownSuiteError):
            runner.execute(SuiteRequest(suite="nope"))


class TestRunner:
    def test_sharded_run_matches_single_thread(self, runner):
        single = runner.execute(
            SuiteRequest(suite="metric-axioms", seed=11, trials=12)
        )
        sharded = runner.execute(
            SuiteRequest(
                suite="metric-axioms", seed=11, trials=12, workers=4
            )
        )
        assert single.model_dump(exclude={"wall_time"}) == sharded.model_dump(
            exclude={"wall_time"}
        )

    def test_seed_changes_the_samples(self, toy_registry, tol, writer):
        runner = RunPropertySuite(toy_registry, tol, writer, 1, 8)
        defects = [
            runner.execute(
                SuiteRequest(suite="draw", seed=seed, trials=3)
            ).max_defect
            for seed in (1, 1, 2)
        ]
        assert defects[0] == defects[1]
        assert defects[0] != defects[2]

    def test_failures_carry_reproduction_inputs(
        self, toy_registry, tol, writer
    ):
        runner = RunPropertySuite(toy_registry, tol, writer, 1, 8)
        report = runner.execute(
            SuiteRequest(suite="odd-fails", seed=0, trials=4, workers=2)
        )
        assert not report.passed
        assert [f.trial for f in report.failures] == [1, 3]
        assert report.failures[0].inputs["s"].kind == "symplectic"
        assert report.failures[0].defect == 1.0
        assert report.max_defect == 3.0
        assert report.tallies == {"even": 2, "odd": 2}

    def test_domain_errors_become_failures(self, toy_registry, tol, writer):
        runner = RunPropertySuite(toy_registry, tol, writer, 1, 8)
        report = runner.execute(SuiteRequest(suite="raises", trials=2))
        assert len(report.failures) == 2
        assert report.failures[0].observed.startswith("NotSymmetricError")
        assert report.failures[0].defect is None
        assert "m" in report.failures[0].inputs
        assert report.tallies == {"error": 2}

    def test_linear_algebra_errors_become_failures(
        self, toy_registry, tol, writer
    ):
        runner = RunPropertySuite(toy_registry, tol, writer, 1, 8)
        report = runner.execute(
            SuiteRequest(suite="singular", trials=3, workers=2)
        )
        assert report.trials == 3
        assert [f.trial for f in report.failures] == [0, 1, 2]
        assert report.failures[0].observed.startswith("LinAlgError")
        assert report.tallies == {"error": 3}

    def test_candidates_are_collected(self, toy_registry, tol, writer):
        runner = RunPropertySuite(toy_registry, tol, writer, 1, 8)
        report = runner.execute(SuiteRequest(suite="flags", trials=3))
        assert report.passed
        assert [c.trial for c in report.candidates] == [0, 1, 2]
        assert report.candidates[0].label == "look"

    def test_report_is_written_when_a_path_is_given(self, runner, writer):
        path = Path("report.json")
        report = runner.execute(
            SuiteRequest(
                suite="composition", seed=0, trials=2, json_path=path
            )
        )
        assert writer.written == [(report, path)]

    def test_report_is_not_written_by_default(self, runner, writer):
        runner.execute(SuiteRequest(suite="composition", trials=2))
        assert writer.written == []

    @pytest.mark.parametrize(
        "fields",
        [{"seed": -1}, {"seed": 2**64}, {"trials": 0}, {"workers": 0}],
    )
    def test_request_validation(self, fields):
        with pytest.raises(ValidationError):
            SuiteRequest(suite="check", **fields)
