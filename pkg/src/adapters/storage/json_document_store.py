"""
This module provides an implementation of `IDocumentStore` over JSON files.

Validation is delegated to the `MatrixDocument` schema; every way a file can
be unusable (missing, unreadable, malformed JSON, wrong shape, non-finite
entries) surfaces as a single `DocumentParseError`.
"""
from pathlib import Path

from pydantic import ValidationError

from src.usecases.exceptions import DocumentParseError
from src.usecases.ports.document_store_interface import IDocumentStore
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


def describe_validation_error(error: ValidationError) -> str:
    """Flattens pydantic's error list into one line."""
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "document"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


class JsonDocumentStore(IDocumentStore):
    """Reads and writes matrix documents as UTF-8 JSON files."""

    def __init__(self, indent: int = 2) -> None:
        """
        Args:
            indent: Indentation of rendered documents.
        """
        self.indent = indent

    def load(self, path: Path) -> MatrixDocument:
        """
        Reads and validates a document.

        Raises:
            DocumentParseError: If the file is missing or malformed.
        """
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentParseError(str(path), e.strerror or str(e)) from e
        try:
            return MatrixDocument.model_validate_json(text)
        except ValidationError as e:
            raise DocumentParseError(
                str(path), describe_validation_error(e)
            ) from e

    def render(self, document: MatrixDocument) -> str:
        return document.model_dump_json(indent=self.indent)

    def save(self, document: MatrixDocument, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(document) + "\n", encoding="utf-8")
