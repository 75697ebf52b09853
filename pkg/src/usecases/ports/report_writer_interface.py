"""This module defines the `IReportWriter` port for suite reports."""
from abc import ABC, abstractmethod
from pathlib import Path

from src.usecases.v1.schemas.base.suite_report import SuiteReport


class IReportWriter(ABC):
    """Interface (port) for persisting property suite reports."""

    @abstractmethod
    def render(self, report: SuiteReport) -> str: ...

    @abstractmethod
    def write(self, report: SuiteReport, path: Path) -> None: ...
