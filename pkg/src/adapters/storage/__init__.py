"""File-backed implementations of the document and report ports."""
