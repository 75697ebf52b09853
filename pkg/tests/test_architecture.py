import pytest
from pytestarch import Rule, get_evaluable_architecture


class TestArchitecture:
    @pytest.fixture(scope="module")
    def evaluable(
        self,
    ):
        """
        Builds the evaluable representation of the architecture.
        Scans src/ to build the dependency graph.
        """
        return get_evaluable_architecture(".", "src")

    def _assert_not_imported(self, evaluable, importer, forbidden):
        for dependency in forbidden:
            rule = (
                Rule()
                .modules_that()
                .are_sub_modules_of(dependency)
                .should_not()
                .be_imported_by_modules_that()
                .are_sub_modules_of(importer)
            )
            rule.assert_applies(evaluable)

    def test_domain_isolation(self, evaluable):
        """
        The domain is pure mathematics: no use cases, adapters, wiring,
        settings or entrypoint.
        """
        self._assert_not_imported(
            evaluable,
            ".src.domain",
            [
                ".src.usecases",
                ".src.adapters",
                ".src.di",
                ".src.config",
                ".src.main",
            ],
        )

    def test_usecases_isolation(self, evaluable):
        """
        Use cases orchestrate the domain through ports. They never know
        which adapter serves a port, nor how they are wired.
        """
        self._assert_not_imported(
            evaluable,
            ".src.usecases",
            [".src.adapters", ".src.di", ".src.main"],
        )

    def test_adapters_isolation(self, evaluable):
        """The entrypoint uses the adapters, never the other way round."""
        self._assert_not_imported(evaluable, ".src.adapters", [".src.main"])
