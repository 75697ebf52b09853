"""This module provides an implementation of `IReportWriter` over JSON."""
from pathlib import Path

from src.usecases.ports.report_writer_interface import IReportWriter
from src.usecases.v1.schemas.base.suite_report import SuiteReport


class JsonReportWriter(IReportWriter):
    """Serializes suite reports with pydantic's JSON encoder."""

    def __init__(self, indent: int = 2) -> None:
        self.indent = indent

    def render(self, report: SuiteReport) -> str:
        return report.model_dump_json(indent=self.indent)

    def write(self, report: SuiteReport, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(report) + "\n", encoding="utf-8")
