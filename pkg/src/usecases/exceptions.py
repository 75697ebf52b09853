"""
This module defines custom exceptions for the use case layer.

They cover failures that are about the request rather than the mathematics:
unreadable documents, documents of the wrong kind, unknown suites and
matrices outside the groups a command works with.
"""


class UsecaseError(Exception):
    """Base exception for use case errors."""

    pass


class DocumentParseError(UsecaseError):
    """Raised when a matrix document cannot be read or validated."""

    def __init__(self, source: str, reason: str):
        self.source = source
        self.reason = reason
        super().__init__(f"Cannot parse document '{source}': {reason}")


class DocumentKindError(UsecaseError):
    """Raised when a document has a kind or shape the command rejects."""

    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"Expected a {expected} document, got {got}.")


class NotInEitherGroupError(UsecaseError):
    """Raised when S is neither symplectic nor antisymplectic."""

    def __init__(self, symplectic_defect: float, antisymplectic_defect: float):
        self.symplectic_defect = symplectic_defect
        self.antisymplectic_defect = antisymplectic_defect
        super().__init__(
            "Matrix is neither symplectic nor antisymplectic "
            f"(||S^tJS - J|| = {symplectic_defect:.3e}, "
            f"||S^tJS + J|| = {antisymplectic_defect:.3e})."
        )


class UnknownSuiteError(UsecaseError):
    """Raised when a property suite name is not registered."""

    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__(
            f"Unknown suite '{name}'. Known suites: {', '.join(known)}."
        )


class UnsupportedDimensionError(UsecaseError):
    """Raised when a suite is asked to run at a dimension it does not use."""

    def __init__(self, suite: str, n: int, dims: tuple[int, ...]):
        self.suite = suite
        self.n = n
        self.dims = dims
        super().__init__(
            f"Suite '{suite}' runs at n in {list(dims)}, got n={n}."
        )
