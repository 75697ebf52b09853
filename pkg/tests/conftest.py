from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import SiegelPoint
from src.domain.services.siegel import make_siegel
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.document_store_interface import IDocumentStore
from src.usecases.ports.report_writer_interface import IReportWriter
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument
from src.usecases.v1.schemas.base.suite_report import SuiteReport


class InMemoryDocumentStore(IDocumentStore):
    """Keeps documents in a dict keyed by path."""

    def __init__(self) -> None:
        self.documents: dict[Path, MatrixDocument] = {}

    def load(self, path: Path) -> MatrixDocument:
        return self.documents[path]

    def render(self, document: MatrixDocument) -> str:
        return document.model_dump_json()

    def save(self, document: MatrixDocument, path: Path) -> None:
        self.documents[path] = document


class RecordingReportWriter(IReportWriter):
    def __init__(self) -> None:
        self.written: list[tuple[SuiteReport, Path]] = []

    def render(self, report: SuiteReport) -> str:
        return report.model_dump_json()

    def write(self, report: SuiteReport, path: Path) -> None:
        self.written.append((report, path))


@pytest.fixture
def tol() -> Tolerance:
    return Tolerance()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def store() -> InMemoryDocumentStore:
    return InMemoryDocumentStore()


@pytest.fixture
def writer() -> RecordingReportWriter:
    return RecordingReportWriter()


@pytest.fixture
def example_one() -> Callable[[int], BlockSymplectic]:
    """[[I, iI], [iI, O]]: complex symplectic, sends iI to -2iI."""

    def build(n: int) -> BlockSymplectic:
        eye = np.eye(n)
        return BlockSymplectic.from_blocks(
            eye, 1j * eye, 1j * eye, np.zeros((n, n))
        )

    return build


@pytest.fixture
def scaled_identity(
    tol: Tolerance,
) -> Callable[[int, complex], SiegelPoint]:
    """(n, c) -> the point c * I_n."""

    def build(n: int, value: complex) -> SiegelPoint:
        return make_siegel(value * np.eye(n), tol)

    return build
