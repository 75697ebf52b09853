"""
This module defines the `IDocumentStore` port: where matrix documents come
from and where result documents go.
"""
from abc import ABC, abstractmethod
from pathlib import Path

from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


class IDocumentStore(ABC):
    """Interface (port) for reading and writing matrix documents."""

    @abstractmethod
    def load(self, path: Path) -> MatrixDocument:
        """
        Reads and validates a document.

        Raises:
            DocumentParseError: If the file is missing or malformed.
        """
        ...

    @abstractmethod
    def render(self, document: MatrixDocument) -> str: ...

    @abstractmethod
    def save(self, document: MatrixDocument, path: Path) -> None: ...
